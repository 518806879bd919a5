#include "lpreps/funcspec.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "lpreps/errors.hpp"

namespace lpreps {

// --- NormResult ----------------------------------------------------------------

NormResult NormResult::make_exact(const Rational& v) {
    NormResult r;
    r.base_ = v;
    return r;
}

const Rational& NormResult::exact_value() const {
    if (!is_exact()) throw contract_error("NormResult: not exact");
    return base_;
}

Rational NormResult::lo() const {
    Rational v = base_;
    for (const auto& s : slivers_) {
        Rational signedint = boost::multiprecision::abs(
            s.q.antiderivative().eval(s.b) - s.q.antiderivative().eval(s.a));
        v += signedint;
    }
    return v;
}

Rational NormResult::hi() const {
    Rational v = base_;
    for (const auto& s : slivers_) v += (s.b - s.a) * s.q.sup_bound(s.a, s.b);
    return v;
}

void NormResult::add_sliver(const Rational& a, const Rational& b, const Poly1& q) {
    if (a >= b) return;
    slivers_.push_back({a, b, q});
}

void NormResult::merge(const NormResult& other) {
    base_ += other.base_;
    slivers_.insert(slivers_.end(), other.slivers_.begin(), other.slivers_.end());
}

void NormResult::refine() {
    std::vector<Sliver> next;
    for (const auto& s : slivers_) {
        // Split at exact interior roots when known, else bisect.
        std::vector<Rational> cuts{s.a, s.b};
        for (const auto& r : isolate_roots(s.q, s.a, s.b))
            if (r.exact && r.point > s.a && r.point < s.b) cuts.push_back(r.point);
        if (cuts.size() == 2) cuts.push_back((s.a + s.b) / 2);
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            Rational x = cuts[i], y = cuts[i + 1];
            bool interior = false;
            for (const auto& r : isolate_roots(s.q, x, y))
                if (!(r.exact && (r.point == x || r.point == y))) interior = true;
            if (!interior) {
                Rational v = s.q.antiderivative().eval(y) - s.q.antiderivative().eval(x);
                base_ += boost::multiprecision::abs(v);
            } else {
                next.push_back({x, y, s.q});
            }
        }
    }
    slivers_ = std::move(next);
}

bool NormResult::less_than(const Rational& bound, int max_rounds) {
    for (int i = 0; i <= max_rounds; ++i) {
        if (hi() < bound) return true;
        if (lo() >= bound) return false;
        if (slivers_.empty()) return base_ < bound;
        refine();
    }
    throw contract_error("NormResult: comparison undecided at refinement cap");
}

NormResult integrate_abs_power(const Poly1& q, const Rational& a, const Rational& b, int p) {
    if (p < 1) throw domain_error("integrate_abs_power: p must be >= 1");
    NormResult out = NormResult::make_exact(0);
    if (a >= b || q.is_zero()) return out;
    Poly1 qq = q.pow(static_cast<unsigned>(p));
    if (p % 2 == 0) {
        out.add_exact(qq.antiderivative().eval(b) - qq.antiderivative().eval(a));
        return out;
    }
    // Odd p: sign(qq) = sign(q); split at the roots of q.
    std::vector<Rational> cuts{a};
    auto regions = isolate_roots(q, a, b);
    std::vector<std::pair<Rational, Rational>> sliver_ranges;
    for (const auto& r : regions) {
        if (r.exact) {
            if (r.point > a && r.point < b) cuts.push_back(r.point);
        } else {
            Rational lo = boost::multiprecision::max(r.lo, a);
            Rational hi = boost::multiprecision::min(r.hi, b);
            if (lo < hi) {
                cuts.push_back(lo);
                cuts.push_back(hi);
                sliver_ranges.emplace_back(lo, hi);
            }
        }
    }
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    Poly1 anti = qq.antiderivative();
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Rational x = cuts[i], y = cuts[i + 1];
        bool is_sliver = false;
        for (auto& [slo, shi] : sliver_ranges)
            if (x >= slo && y <= shi) is_sliver = true;
        if (is_sliver) {
            out.add_sliver(x, y, qq);
            continue;
        }
        Rational v = anti.eval(y) - anti.eval(x);
        out.add_exact(boost::multiprecision::abs(v));
    }
    return out;
}

// --- FunctionSpec ----------------------------------------------------------------

FunctionSpec::FunctionSpec(int d, std::vector<Piece> pieces)
    : d_(d), pieces_(std::move(pieces)) {
    if (d != 1 && d != 2) throw domain_error("FunctionSpec: d must be 1 or 2");
    for (const auto& p : pieces_) {
        if (p.box.dim() != static_cast<std::size_t>(d))
            throw domain_error("FunctionSpec: piece dimension mismatch");
        if (d == 1 && p.poly.depends_on(1))
            throw domain_error("FunctionSpec: univariate spec with bivariate piece");
    }
}

bool FunctionSpec::is_zero() const {
    for (const auto& p : pieces_)
        if (!p.poly.is_zero()) return false;
    return true;
}

Rational FunctionSpec::measure() const {
    Rational v = 0;
    for (const auto& p : pieces_) v += p.box.volume();
    return v;
}

Box FunctionSpec::bounding_box() const {
    if (pieces_.empty()) throw domain_error("FunctionSpec: empty domain");
    std::vector<Dyadic> lo = pieces_[0].box.lower(), hi = pieces_[0].box.upper();
    for (const auto& p : pieces_)
        for (std::size_t i = 0; i < lo.size(); ++i) {
            lo[i] = min(lo[i], p.box.lower(i));
            hi[i] = max(hi[i], p.box.upper(i));
        }
    return Box(lo, hi);
}

Rational FunctionSpec::diameter() const {
    Box bb = bounding_box();
    Rational d = 0;
    for (std::size_t i = 0; i < bb.dim(); ++i)
        d = boost::multiprecision::max(d, (bb.upper(i) - bb.lower(i)).to_rational());
    return d;
}

Rational FunctionSpec::eval_tilde(const std::vector<Rational>& x) const {
    for (const auto& p : pieces_) {
        bool inside = true;
        for (std::size_t i = 0; i < p.box.dim(); ++i) {
            Rational lo = p.box.lower(i).to_rational(), hi = p.box.upper(i).to_rational();
            if (x[i] < lo || x[i] > hi) inside = false;
        }
        if (inside) return p.poly.eval(x);
    }
    return 0;
}

// --- grid refinement machinery -----------------------------------------------

namespace {

const Poly2* poly_at_midpoint(const FunctionSpec& f, const Box& cell) {
    std::vector<Rational> mid;
    for (std::size_t i = 0; i < cell.dim(); ++i)
        mid.push_back((cell.lower(i).to_rational() + cell.upper(i).to_rational()) / 2);
    for (const auto& p : f.pieces()) {
        bool inside = true;
        for (std::size_t i = 0; i < p.box.dim(); ++i) {
            if (mid[i] < p.box.lower(i).to_rational() || mid[i] > p.box.upper(i).to_rational())
                inside = false;
        }
        if (inside) return &p.poly;
    }
    return nullptr;
}

std::vector<std::vector<Dyadic>> axis_cuts(const std::vector<const FunctionSpec*>& specs, int d) {
    std::vector<std::vector<Dyadic>> cuts(static_cast<std::size_t>(d));
    for (const auto* f : specs)
        for (const auto& p : f->pieces())
            for (int i = 0; i < d; ++i) {
                cuts[static_cast<std::size_t>(i)].push_back(p.box.lower(static_cast<std::size_t>(i)));
                cuts[static_cast<std::size_t>(i)].push_back(p.box.upper(static_cast<std::size_t>(i)));
            }
    for (auto& c : cuts) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
    }
    return cuts;
}

FunctionSpec combine_specs(const FunctionSpec& f, const FunctionSpec& g, bool subtract) {
    if (f.dim() != g.dim()) throw domain_error("combine: dimension mismatch");
    int d = f.dim();
    auto cuts = axis_cuts({&f, &g}, d);
    std::vector<Piece> out;
    auto emit = [&](const Box& cell) {
        if (cell.is_degenerate()) return;
        const Poly2* pf = poly_at_midpoint(f, cell);
        const Poly2* pg = poly_at_midpoint(g, cell);
        if (!pf && !pg) return;
        Poly2 v = pf ? *pf : Poly2();
        if (pg) v = subtract ? v - *pg : v + *pg;
        out.push_back({cell, std::move(v)});
    };
    if (d == 1) {
        for (std::size_t i = 0; i + 1 < cuts[0].size(); ++i)
            emit(Box({cuts[0][i]}, {cuts[0][i + 1]}));
    } else {
        for (std::size_t i = 0; i + 1 < cuts[0].size(); ++i)
            for (std::size_t j = 0; j + 1 < cuts[1].size(); ++j)
                emit(Box({cuts[0][i], cuts[1][j]}, {cuts[0][i + 1], cuts[1][j + 1]}));
    }
    return FunctionSpec(d, std::move(out));
}

} // namespace

FunctionSpec add_specs(const FunctionSpec& f, const FunctionSpec& g) {
    return combine_specs(f, g, false);
}
FunctionSpec sub_specs(const FunctionSpec& f, const FunctionSpec& g) {
    return combine_specs(f, g, true);
}

FunctionSpec scale_spec(const FunctionSpec& f, const Rational& c) {
    std::vector<Piece> out;
    for (const auto& p : f.pieces()) out.push_back({p.box, p.poly.scaled(c)});
    return FunctionSpec(f.dim(), std::move(out));
}

FunctionSpec shift_spec(const FunctionSpec& f, const std::vector<Dyadic>& h) {
    if (h.size() != static_cast<std::size_t>(f.dim()))
        throw domain_error("shift_spec: shift dimension mismatch");
    std::vector<Piece> out;
    for (const auto& p : f.pieces()) {
        std::vector<Dyadic> lo, hi;
        for (std::size_t i = 0; i < p.box.dim(); ++i) {
            lo.push_back(p.box.lower(i) - h[i]);
            hi.push_back(p.box.upper(i) - h[i]);
        }
        Poly2 q = p.poly;
        for (std::size_t i = 0; i < h.size(); ++i)
            if (!h[i].is_zero())
                q = q.subst_linear(static_cast<int>(i), h[i].to_rational(), 1);
        out.push_back({Box(lo, hi), std::move(q)});
    }
    return FunctionSpec(f.dim(), std::move(out));
}

Rational exact_integral(const FunctionSpec& f, const Box& box) {
    if (box.dim() != static_cast<std::size_t>(f.dim()))
        throw domain_error("exact_integral: box dimension mismatch");
    Rational total = 0;
    for (const auto& p : f.pieces()) {
        Box cell;
        if (!Box::intersect(p.box, box, &cell) || cell.is_degenerate()) continue;
        Poly2 anti0 = p.poly.antiderivative(0);
        if (f.dim() == 1) {
            total += anti0.eval({cell.upper(0).to_rational()}) -
                     anti0.eval({cell.lower(0).to_rational()});
        } else {
            Poly1 inner = anti0.eval_axis(0, cell.upper(0).to_rational()) -
                          anti0.eval_axis(0, cell.lower(0).to_rational());
            Poly1 anti1 = inner.antiderivative();
            total += anti1.eval(cell.upper(1).to_rational()) -
                     anti1.eval(cell.lower(1).to_rational());
        }
    }
    return total;
}

Rational total_integral(const FunctionSpec& f) {
    if (f.pieces().empty()) return 0;
    return exact_integral(f, f.bounding_box());
}

namespace {

Rational integral_over_box_2d(const Poly2& q, const Box& cell) {
    Poly2 a0 = q.antiderivative(0);
    Poly1 inner = a0.eval_axis(0, cell.upper(0).to_rational()) -
                  a0.eval_axis(0, cell.lower(0).to_rational());
    Poly1 a1 = inner.antiderivative();
    return a1.eval(cell.upper(1).to_rational()) - a1.eval(cell.lower(1).to_rational());
}

} // namespace

NormResult exact_lp_norm_pow(const FunctionSpec& f, int p) {
    NormResult out = NormResult::make_exact(0);
    for (const auto& piece : f.pieces()) {
        if (piece.poly.is_zero() || piece.box.is_degenerate()) continue;
        if (f.dim() == 1) {
            out.merge(integrate_abs_power(piece.poly.to_poly1(),
                                          piece.box.lower(0).to_rational(),
                                          piece.box.upper(0).to_rational(), p));
            continue;
        }
        Poly2 qq = piece.poly;
        for (int i = 1; i < p; ++i) qq = qq * piece.poly;
        if (p % 2 == 0) {
            out.add_exact(integral_over_box_2d(qq, piece.box));
            continue;
        }
        // Odd p in 2-D: exact only when the sign is constant on the piece,
        // which is decidable at the corners for per-axis degree <= 1.
        if (piece.poly.degree(0) <= 1 && piece.poly.degree(1) <= 1) {
            int pos = 0, neg = 0;
            for (const Rational& x :
                 {piece.box.lower(0).to_rational(), piece.box.upper(0).to_rational()})
                for (const Rational& y :
                     {piece.box.lower(1).to_rational(), piece.box.upper(1).to_rational()}) {
                    Rational v = piece.poly.eval({x, y});
                    if (v > 0) ++pos;
                    if (v < 0) ++neg;
                }
            if (pos == 0 || neg == 0) {
                out.add_exact(boost::multiprecision::abs(integral_over_box_2d(qq, piece.box)));
                continue;
            }
        }
        throw domain_error("exact_lp_norm_pow: 2-D odd-p piece with mixed sign unsupported");
    }
    return out;
}

NormResult shift_diff_norm_pow(const FunctionSpec& f, const std::vector<Dyadic>& h, int p) {
    return exact_lp_norm_pow(sub_specs(f, shift_spec(f, h)), p);
}

Rational cell_average(const FunctionSpec& f, const std::vector<Dyadic>& x, Unary m) {
    if (x.size() != static_cast<std::size_t>(f.dim()))
        throw domain_error("cell_average: point dimension mismatch");
    Dyadic r = Dyadic::pow2(-(m + 1));
    std::vector<Dyadic> lo, hi;
    for (const auto& xi : x) {
        lo.push_back(xi - r);
        hi.push_back(xi + r);
    }
    Rational v = exact_integral(f, Box(lo, hi));
    BigInt scale = BigInt(1) << static_cast<unsigned>(f.dim() * m);
    return v * Rational(scale);
}

// --- convolution ---------------------------------------------------------------

namespace {

struct Seg {
    Rational lo, hi;
    Poly1 q;
};

// int q(y) k(x - y) dy for piecewise q and k (compactly supported), exact.
std::vector<Seg> convolve_segs(const std::vector<Seg>& fs, const std::vector<Seg>& ks) {
    std::set<Rational> cutset;
    struct Contribution {
        Rational lo, hi;
        const Seg *f, *k;
    };
    std::vector<Contribution> contribs;
    for (const auto& fp : fs)
        for (const auto& kp : ks) {
            Rational clo = fp.lo + kp.lo, chi = fp.hi + kp.hi;
            if (clo >= chi) continue;
            contribs.push_back({clo, chi, &fp, &kp});
            cutset.insert(clo);
            cutset.insert(chi);
            cutset.insert(fp.lo + kp.hi);
            cutset.insert(fp.hi + kp.lo);
        }
    std::vector<Rational> cuts(cutset.begin(), cutset.end());
    std::vector<Seg> out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Rational a = cuts[i], b = cuts[i + 1], mid = (a + b) / 2;
        Poly1 total;
        for (const auto& c : contribs) {
            if (mid <= c.lo || mid >= c.hi) continue;
            // Active y-range [max(f.lo, x - k.hi), min(f.hi, x - k.lo)]; the
            // max/min resolve consistently on this whole cell.
            bool lower_is_flo = c.f->lo >= mid - c.k->hi;
            bool upper_is_fhi = c.f->hi <= mid - c.k->lo;
            // Antiderivative in y of q(y) k(x - y), as a Poly2 in (x, y).
            Poly2 qy = Poly2::from_poly1(c.f->q, 1);
            Poly2 k_of_x_minus_y;
            {
                Poly2 xminusy({{Rational(0), Rational(-1)}, {Rational(1)}});
                Poly2 acc = Poly2::constant(1);
                for (const Rational& ks_coeff : c.k->q.coeffs()) {
                    k_of_x_minus_y = k_of_x_minus_y + acc.scaled(ks_coeff);
                    acc = acc * xminusy;
                }
            }
            Poly2 anti = (qy * k_of_x_minus_y).antiderivative(1);
            // Each bound is a constant or x - const; substitute into anti.
            auto eval_bound = [&](bool is_const, const Rational& cval,
                                  const Rational& shift) -> Poly1 {
                if (is_const) return anti.eval_axis(1, cval);
                // y := x - shift
                Poly1 lin({-shift, Rational(1)});
                std::int64_t dy = anti.degree(1);
                std::vector<Poly1> linpow(static_cast<std::size_t>(std::max<std::int64_t>(dy, 0)) + 1);
                linpow[0] = Poly1::constant(1);
                for (std::size_t j = 1; j < linpow.size(); ++j) linpow[j] = linpow[j - 1] * lin;
                Poly1 res;
                for (std::size_t ii = 0; ii < anti.coeffs().size(); ++ii)
                    for (std::size_t jj = 0; jj < anti.coeffs()[ii].size(); ++jj) {
                        const Rational& cij = anti.coeffs()[ii][jj];
                        if (cij == 0) continue;
                        res = res + (Poly1::monomial(cij, ii) * linpow[jj]);
                    }
                return res;
            };
            Poly1 upper = upper_is_fhi ? eval_bound(true, c.f->hi, 0) : eval_bound(false, 0, c.k->lo);
            Poly1 lower = lower_is_flo ? eval_bound(true, c.f->lo, 0) : eval_bound(false, 0, c.k->hi);
            total = total + (upper - lower);
        }
        if (!total.is_zero()) out.push_back({a, b, total});
    }
    return out;
}

std::vector<Seg> tent_kernel(Unary m) {
    // t_m(u) = 2^m max(1 - |2^m u|, 0): unit mass, support [-2^-m, 2^-m].
    Rational s = Rational(BigInt(1) << static_cast<unsigned>(m));
    Rational inv = 1 / s;
    return {{-inv, 0, Poly1({s, s * s})}, {0, inv, Poly1({s, -(s * s)})}};
}

std::vector<Seg> box_kernel(Unary m) {
    // g_m = 2^m chi_[-2^-m-1, 2^-m-1]: the moving-average kernel.
    Rational s = Rational(BigInt(1) << static_cast<unsigned>(m));
    Rational r = 1 / (2 * s);
    return {{-r, r, Poly1({s})}};
}

// Convolve along `axis` with a compact 1-D kernel, decomposing 2-D pieces by
// powers of the spectator variable.
FunctionSpec convolve_axis(const FunctionSpec& f, const std::vector<Seg>& kernel, int axis) {
    int d = f.dim();
    int spect = 1 - axis;
    FunctionSpec acc(d, {});
    for (const auto& piece : f.pieces()) {
        if (piece.poly.is_zero() || piece.box.is_degenerate()) continue;
        std::int64_t dspect = d == 1 ? 0 : std::max<std::int64_t>(piece.poly.degree(spect), 0);
        for (std::int64_t k = 0; k <= dspect; ++k) {
            std::vector<Rational> qc;
            std::int64_t dconv = std::max<std::int64_t>(piece.poly.degree(axis), 0);
            for (std::int64_t i = 0; i <= dconv; ++i) {
                Rational cij = axis == 0 ? piece.poly.coeff(static_cast<std::size_t>(i),
                                                            static_cast<std::size_t>(k))
                                         : piece.poly.coeff(static_cast<std::size_t>(k),
                                                            static_cast<std::size_t>(i));
                qc.push_back(cij);
            }
            Poly1 qk{std::vector<Rational>(qc)};
            if (qk.is_zero()) continue;
            std::vector<Seg> fseg{{piece.box.lower(static_cast<std::size_t>(axis)).to_rational(),
                                   piece.box.upper(static_cast<std::size_t>(axis)).to_rational(),
                                   qk}};
            auto conv = convolve_segs(fseg, kernel);
            std::vector<Piece> newpieces;
            for (const auto& seg : conv) {
                // Result monomials: (conv var)^i * spectator^k.
                std::vector<std::vector<Rational>> c;
                for (std::size_t i = 0; i < seg.q.coeffs().size(); ++i) {
                    const Rational& ci = seg.q.coeffs()[i];
                    std::size_t xi = axis == 0 ? i : static_cast<std::size_t>(k);
                    std::size_t yj = axis == 0 ? static_cast<std::size_t>(k) : i;
                    if (c.size() <= xi) c.resize(xi + 1);
                    if (c[xi].size() <= yj) c[xi].resize(yj + 1, Rational(0));
                    c[xi][yj] += ci;
                }
                Poly2 contrib(std::move(c));
                if (contrib.is_zero()) continue;
                if (d == 1) {
                    newpieces.push_back({Box({Dyadic::from_rational(seg.lo)},
                                             {Dyadic::from_rational(seg.hi)}),
                                         contrib});
                } else {
                    std::vector<Dyadic> lo(2), hi(2);
                    lo[static_cast<std::size_t>(axis)] = Dyadic::from_rational(seg.lo);
                    hi[static_cast<std::size_t>(axis)] = Dyadic::from_rational(seg.hi);
                    lo[static_cast<std::size_t>(spect)] =
                        piece.box.lower(static_cast<std::size_t>(spect));
                    hi[static_cast<std::size_t>(spect)] =
                        piece.box.upper(static_cast<std::size_t>(spect));
                    newpieces.push_back({Box(lo, hi), contrib});
                }
            }
            if (!newpieces.empty())
                acc = add_specs(acc, FunctionSpec(d, std::move(newpieces)));
        }
    }
    return acc;
}

} // namespace

FunctionSpec continuous_approximation(const FunctionSpec& f, Unary m) {
    FunctionSpec r = convolve_axis(f, box_kernel(m), 0);
    if (f.dim() == 2) r = convolve_axis(r, box_kernel(m), 1);
    return r;
}

FunctionSpec mollifier_spec(int d, Unary m) {
    Rational s = Rational(BigInt(1) << static_cast<unsigned>(m));
    Dyadic di = Dyadic(1, m);
    Poly1 up({s, s * s}), down({s, -(s * s)});
    if (d == 1) {
        return FunctionSpec(1, {{Box({-di}, {Dyadic(0)}), Poly2::from_poly1(up, 0)},
                                {Box({Dyadic(0)}, {di}), Poly2::from_poly1(down, 0)}});
    }
    std::vector<Piece> pieces;
    for (int sx = 0; sx < 2; ++sx)
        for (int sy = 0; sy < 2; ++sy) {
            Poly2 p = Poly2::from_poly1(sx ? down : up, 0) * Poly2::from_poly1(sy ? down : up, 1);
            std::vector<Dyadic> lo{sx ? Dyadic(0) : -di, sy ? Dyadic(0) : -di};
            std::vector<Dyadic> hi{sx ? di : Dyadic(0), sy ? di : Dyadic(0)};
            pieces.push_back({Box(lo, hi), p});
        }
    return FunctionSpec(2, std::move(pieces));
}

FunctionSpec convolve_mollifier(const FunctionSpec& f, Unary m) {
    if (f.dim() > 2) throw domain_error("convolve_mollifier: unsupported dimension");
    FunctionSpec r = convolve_axis(f, tent_kernel(m), 0);
    if (f.dim() == 2) r = convolve_axis(r, tent_kernel(m), 1);
    return r;
}

FunctionSpec weak_derivative(const FunctionSpec& f) {
    if (f.dim() != 1) throw domain_error("weak_derivative: only d = 1 supported");
    auto pieces = f.pieces();
    std::sort(pieces.begin(), pieces.end(),
              [](const Piece& a, const Piece& b) { return a.box.lower(0) < b.box.lower(0); });
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
        if (pieces[i].box.upper(0) != pieces[i + 1].box.lower(0))
            throw domain_error("weak_derivative: domain is not a single interval");
        Rational x = pieces[i].box.upper(0).to_rational();
        if (pieces[i].poly.eval({x}) != pieces[i + 1].poly.eval({x}))
            throw domain_error("not weakly differentiable");
    }
    std::vector<Piece> out;
    for (const auto& p : pieces) out.push_back({p.box, p.poly.derivative(0)});
    return FunctionSpec(1, std::move(out));
}

FunctionSpec marginal(const FunctionSpec& f, int axis) {
    if (f.dim() != 2) throw domain_error("marginal: requires d = 2");
    int other = 1 - axis;
    FunctionSpec acc(1, {});
    for (const auto& piece : f.pieces()) {
        Poly2 anti = piece.poly.antiderivative(other);
        Poly1 q =
            anti.eval_axis(other, piece.box.upper(static_cast<std::size_t>(other)).to_rational()) -
            anti.eval_axis(other, piece.box.lower(static_cast<std::size_t>(other)).to_rational());
        FunctionSpec one(1, {{Box({piece.box.lower(static_cast<std::size_t>(axis))},
                                  {piece.box.upper(static_cast<std::size_t>(axis))}),
                              Poly2::from_poly1(q, 0)}});
        acc = add_specs(acc, one);
    }
    return acc;
}

std::optional<Rational> sup_norm_exact(const FunctionSpec& f) {
    Rational best = 0;
    for (const auto& piece : f.pieces()) {
        if (piece.box.is_degenerate()) continue;
        if (f.dim() == 1) {
            Poly1 q = piece.poly.to_poly1();
            if (q.degree() > 2) return std::nullopt;
            Rational a = piece.box.lower(0).to_rational(), b = piece.box.upper(0).to_rational();
            for (const Rational& x : {a, b})
                best = boost::multiprecision::max(best, boost::multiprecision::abs(q.eval(x)));
            if (q.degree() == 2) {
                Rational crit = -q.coeff(1) / (2 * q.coeff(2));
                if (crit > a && crit < b)
                    best = boost::multiprecision::max(best,
                                                      boost::multiprecision::abs(q.eval(crit)));
            }
        } else {
            if (piece.poly.degree(0) > 1 || piece.poly.degree(1) > 1) return std::nullopt;
            for (const Rational& x :
                 {piece.box.lower(0).to_rational(), piece.box.upper(0).to_rational()})
                for (const Rational& y :
                     {piece.box.lower(1).to_rational(), piece.box.upper(1).to_rational()})
                    best = boost::multiprecision::max(
                        best, boost::multiprecision::abs(piece.poly.eval({x, y})));
        }
    }
    return best;
}

// --- JSON ------------------------------------------------------------------------

std::string FunctionSpec::to_json() const {
    nlohmann::json j;
    j["d"] = d_;
    j["pieces"] = nlohmann::json::array();
    for (const auto& p : pieces_) {
        nlohmann::json jp;
        jp["box"] = nlohmann::json::array();
        for (std::size_t i = 0; i < p.box.dim(); ++i)
            jp["box"].push_back({p.box.lower(i).to_literal(), p.box.upper(i).to_literal()});
        nlohmann::json rows = nlohmann::json::array();
        auto literal = [](const Rational& c) {
            if (!Dyadic::is_dyadic(c)) throw domain_error("to_json: non-dyadic coefficient");
            return Dyadic::from_rational(c).to_literal();
        };
        if (d_ == 1) {
            nlohmann::json row = nlohmann::json::array();
            for (std::int64_t i = 0; i <= std::max<std::int64_t>(p.poly.degree(0), 0); ++i)
                row.push_back(literal(p.poly.coeff(static_cast<std::size_t>(i), 0)));
            rows.push_back(row);
        } else {
            std::int64_t dx = std::max<std::int64_t>(p.poly.degree(0), 0);
            std::int64_t dy = std::max<std::int64_t>(p.poly.degree(1), 0);
            for (std::int64_t i = 0; i <= dx; ++i) {
                nlohmann::json row = nlohmann::json::array();
                for (std::int64_t jj = 0; jj <= dy; ++jj)
                    row.push_back(literal(
                        p.poly.coeff(static_cast<std::size_t>(i), static_cast<std::size_t>(jj))));
                rows.push_back(row);
            }
        }
        jp["poly"] = rows;
        j["pieces"].push_back(jp);
    }
    return j.dump(2);
}

FunctionSpec FunctionSpec::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw codec_error(std::string("funcspec json: ") + e.what());
    }
    try {
        int d = j.at("d").get<int>();
        std::vector<Piece> pieces;
        for (const auto& jp : j.at("pieces")) {
            std::vector<Dyadic> lo, hi;
            for (const auto& pair : jp.at("box")) {
                lo.push_back(Dyadic::parse_literal(pair.at(0).get<std::string>()));
                hi.push_back(Dyadic::parse_literal(pair.at(1).get<std::string>()));
            }
            const auto& rows = jp.at("poly");
            std::vector<std::vector<Rational>> c;
            if (d == 1) {
                if (rows.size() != 1) throw codec_error("funcspec json: d=1 poly needs one row");
                for (const auto& lit : rows.at(0))
                    c.push_back({Dyadic::parse_literal(lit.get<std::string>()).to_rational()});
            } else {
                for (const auto& row : rows) {
                    std::vector<Rational> r;
                    for (const auto& lit : row)
                        r.push_back(Dyadic::parse_literal(lit.get<std::string>()).to_rational());
                    c.push_back(std::move(r));
                }
            }
            pieces.push_back({Box(lo, hi), Poly2(std::move(c))});
        }
        return FunctionSpec(d, std::move(pieces));
    } catch (const nlohmann::json::exception& e) {
        throw codec_error(std::string("funcspec json: ") + e.what());
    }
}

} // namespace lpreps
