#include "lpreps/modulus.hpp"

#include <algorithm>

#include <json.hpp>

#include "lpreps/errors.hpp"

namespace lpreps {

std::string to_string(ModulusKind k) {
    switch (k) {
        case ModulusKind::continuity: return "continuity";
        case ModulusKind::singularity: return "singularity";
        case ModulusKind::lp: return "lp";
    }
    return "?";
}

Modulus::Modulus(ModulusKind kind, int p, std::vector<Unary> table, Unary tail_a, Unary tail_b)
    : kind_(kind), p_(p), table_(std::move(table)), tail_a_(tail_a), tail_b_(tail_b) {
    if (tail_a_ < 0 || tail_b_ < 0) throw domain_error("Modulus: negative tail");
    for (Unary v : table_)
        if (v < 0) throw domain_error("Modulus: negative table entry");
}

Unary Modulus::operator()(Unary n) const {
    if (n < 0) throw domain_error("Modulus: negative argument");
    if (n < static_cast<Unary>(table_.size())) return table_[static_cast<std::size_t>(n)];
    return tail_a_ * n + tail_b_;
}

bool Modulus::strictly_increasing_where_nonzero() const {
    Unary horizon = static_cast<Unary>(table_.size()) + 2;
    for (Unary n = 0; n + 1 <= horizon; ++n)
        if ((*this)(n) != 0 && (*this)(n + 1) <= (*this)(n)) return false;
    // Tail: nonzero affine tails need slope >= 1.
    bool tail_nonzero = tail_a_ > 0 || tail_b_ > 0;
    if (tail_nonzero && tail_a_ < 1) return false;
    return true;
}

Modulus Modulus::monotone_repair() const {
    Unary horizon = static_cast<Unary>(table_.size());
    std::vector<Unary> t;
    for (Unary n = 0; n < horizon; ++n) t.push_back((*this)(n));
    Unary a = tail_a_, b = tail_b_;
    bool tail_nonzero = a > 0 || b > 0;
    if (tail_nonzero && a < 1) a = 1;
    // Repair the table, then splice the tail on monotonically.
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i - 1] != 0 && t[i] <= t[i - 1]) t[i] = t[i - 1] + 1;
    if (!t.empty()) {
        Unary first_tail = a * horizon + b;
        if (t.back() != 0 && first_tail <= t.back()) b += t.back() + 1 - first_tail;
    }
    return Modulus(kind_, p_, std::move(t), a, b);
}

Modulus Modulus::shifted(Unary s) const {
    if (s < 0) throw domain_error("Modulus::shifted: negative shift");
    std::vector<Unary> t;
    for (Unary n = s; n < static_cast<Unary>(table_.size()); ++n)
        t.push_back(table_[static_cast<std::size_t>(n)]);
    return Modulus(kind_, p_, std::move(t), tail_a_, tail_b_ + tail_a_ * s);
}

Modulus Modulus::with_kind(ModulusKind k, int p) const {
    return Modulus(k, p, table_, tail_a_, tail_b_);
}

Modulus Modulus::pointwise_max(const Modulus& x, const Modulus& y) {
    // Extend tables past the tail crossover so one affine tail dominates.
    Unary tablen = std::max(static_cast<Unary>(x.table_.size()),
                            static_cast<Unary>(y.table_.size()));
    Unary cross = tablen;
    if (x.tail_a_ != y.tail_a_) {
        // beyond n0, the larger slope wins: n0 = |b1-b2| / |a1-a2| + 1
        Unary da = std::max(x.tail_a_, y.tail_a_) - std::min(x.tail_a_, y.tail_a_);
        Unary db = std::max(x.tail_b_, y.tail_b_) - std::min(x.tail_b_, y.tail_b_);
        cross = std::max(cross, db / da + 2);
    }
    std::vector<Unary> t;
    for (Unary n = 0; n < cross; ++n) t.push_back(std::max(x(n), y(n)));
    Unary a = std::max(x.tail_a_, y.tail_a_);
    Unary b;
    if (x.tail_a_ == y.tail_a_)
        b = std::max(x.tail_b_, y.tail_b_);
    else
        b = x.tail_a_ > y.tail_a_ ? x.tail_b_ : y.tail_b_;
    return Modulus(x.kind_, x.p_, std::move(t), a, b);
}

bool operator==(const Modulus& a, const Modulus& b) {
    Unary horizon = static_cast<Unary>(std::max(a.table_.size(), b.table_.size())) + 2;
    for (Unary n = 0; n <= horizon; ++n)
        if (a(n) != b(n)) return false;
    return a.tail_a_ == b.tail_a_;
}

std::string Modulus::to_json() const {
    nlohmann::json j;
    j["kind"] = to_string(kind_);
    if (kind_ == ModulusKind::lp) j["p"] = p_;
    j["table"] = table_;
    j["tail"] = {{"a", tail_a_}, {"b", tail_b_}};
    return j.dump();
}

Modulus Modulus::from_json(const std::string& text) {
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        std::string k = j.at("kind").get<std::string>();
        ModulusKind kind;
        if (k == "continuity")
            kind = ModulusKind::continuity;
        else if (k == "singularity")
            kind = ModulusKind::singularity;
        else if (k == "lp")
            kind = ModulusKind::lp;
        else
            throw codec_error("modulus json: unknown kind");
        int p = j.contains("p") ? j.at("p").get<int>() : 0;
        std::vector<Unary> table = j.at("table").get<std::vector<Unary>>();
        return Modulus(kind, p, std::move(table), j.at("tail").at("a").get<Unary>(),
                       j.at("tail").at("b").get<Unary>());
    } catch (const nlohmann::json::exception& e) {
        throw codec_error(std::string("modulus json: ") + e.what());
    }
}

// =============================================================================
// Validation machinery
// =============================================================================

namespace {

Rational pow2r(Unary k) {
    if (k >= 0) return Rational(BigInt(1) << static_cast<unsigned>(k));
    return Rational(1, BigInt(1) << static_cast<unsigned>(-k));
}

Rational rational_pow(const Rational& x, int p) {
    Rational r = 1;
    for (int i = 0; i < p; ++i) r *= x;
    return r;
}

// Least grid value u = m 2^-k with u >= x^{1/p}; u - x^{1/p} <= 2^-k.
Rational root_upper(const Rational& x, int p, Unary k) {
    if (x <= 0) return 0;
    Rational step = pow2r(-k);
    Rational lo = 0, hi = 1;
    while (rational_pow(hi, p) < x) hi *= 2;
    while (hi - lo > step) {
        Rational mid = (lo + hi) / 2;
        if (rational_pow(mid, p) >= x)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

// Piecewise structure of the zero-extension: breakpoints with jump sizes, and
// a certified bound on |f~'| away from breaks.
struct PwProfile {
    std::vector<std::pair<Rational, Rational>> jumps;  // (position, |jump|)
    Rational slope_bound = 0;                          // sup |f~'| off breaks
    Rational total_jump = 0;
    Rational support_measure = 0;
};

PwProfile profile_1d(const FunctionSpec& f) {
    PwProfile out;
    std::vector<Rational> cuts;
    for (const auto& p : f.pieces()) {
        cuts.push_back(p.box.lower(0).to_rational());
        cuts.push_back(p.box.upper(0).to_rational());
        Poly1 dq = p.poly.to_poly1().derivative();
        out.slope_bound = boost::multiprecision::max(
            out.slope_bound,
            dq.sup_bound(p.box.lower(0).to_rational(), p.box.upper(0).to_rational()));
        out.support_measure += p.box.volume();
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (const Rational& c : cuts) {
        Rational eps(1, BigInt(1) << 40);
        // one-sided limits are the piece polynomial values; sample just inside
        Rational left = f.eval_tilde({c - eps});
        Rational right = f.eval_tilde({c + eps});
        // polynomial between breaks: the epsilon sample differs from the limit
        // by at most slope * eps; treat a mismatch beyond that as a jump
        Rational j = boost::multiprecision::abs(right - left);
        Rational tol = 2 * out.slope_bound * eps + eps;
        if (j > tol) {
            out.jumps.emplace_back(c, j + tol);
            out.total_jump += j + tol;
        }
    }
    return out;
}

// Certified bound on ||f~ - tau_delta f~||_p^p for any |t| <= delta.
Rational shift_corr_pow(const PwProfile& pr, const Rational& delta, int p) {
    Rational jump_part = Rational(static_cast<long>(pr.jumps.size())) * delta *
                         rational_pow(pr.total_jump + pr.slope_bound * delta, p);
    Rational smooth_part =
        (pr.support_measure + 2 * delta) * rational_pow(pr.slope_bound * delta, p);
    return jump_part + smooth_part;
}

// --- window oscillation for continuity/singularity kinds ---------------------

// Upper/lower bounds on sup_{x,y in scope, |x-y| <= delta} |f(x) - f(y)|, exact
// for pieces of degree <= 2 with rational critical structure; otherwise a
// certified enclosure from candidate intervals.
struct OscResult {
    Rational lo = 0, hi = 0;
    Rational witness_x = 0, witness_y = 0;
};

// Evaluate f on Omega only (continuity) or the zero-extension (singularity/G).
OscResult window_osc(const FunctionSpec& f, const Rational& delta, bool use_extension) {
    OscResult out;
    struct Candidate {
        Rational x;
        bool exact;
        Rational lo, hi;  // interval when !exact
    };
    std::vector<Rational> points;  // exact candidate positions
    std::vector<std::pair<Rational, Rational>> intervals;
    auto add_root_candidates = [&](const Poly1& q, const Rational& a, const Rational& b) {
        if (q.is_zero()) return;
        for (const auto& r : isolate_roots(q, a, b)) {
            if (r.exact)
                points.push_back(r.point);
            else
                intervals.emplace_back(boost::multiprecision::max(r.lo, a),
                                       boost::multiprecision::min(r.hi, b));
        }
    };
    std::vector<Rational> breaks;
    for (const auto& piece : f.pieces()) {
        Rational a = piece.box.lower(0).to_rational(), b = piece.box.upper(0).to_rational();
        breaks.push_back(a);
        breaks.push_back(b);
        add_root_candidates(piece.poly.to_poly1().derivative(), a, b);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    for (const Rational& c : breaks) points.push_back(c);

    Rational lo_all = breaks.front() - (use_extension ? delta : Rational(0));
    Rational hi_all = breaks.back() + (use_extension ? delta : Rational(0));

    auto scope_clamp = [&](const Rational& x) {
        return boost::multiprecision::min(boost::multiprecision::max(x, lo_all), hi_all);
    };
    auto value = [&](const Rational& x) { return f.eval_tilde({x}); };

    // Stationary points of g(x) = f(x+delta) - f(x) per region pair.
    struct RegionPoly {
        Rational a, b;
        Poly1 q;
    };
    std::vector<RegionPoly> regions;  // f~ pieces including zero gaps in scope
    {
        std::vector<Rational> cuts{lo_all, hi_all};
        for (const Rational& c : breaks) cuts.push_back(c);
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            Rational mid = (cuts[i] + cuts[i + 1]) / 2;
            Poly1 q;
            for (const auto& piece : f.pieces())
                if (mid >= piece.box.lower(0).to_rational() &&
                    mid <= piece.box.upper(0).to_rational())
                    q = piece.poly.to_poly1();
            regions.push_back({cuts[i], cuts[i + 1], q});
        }
    }
    for (const auto& rx : regions)
        for (const auto& ry : regions) {
            // x in rx, x + delta in ry
            Rational a = boost::multiprecision::max(rx.a, ry.a - delta);
            Rational b = boost::multiprecision::min(rx.b, ry.b - delta);
            if (a >= b) continue;
            Poly1 g = ry.q.compose_linear(delta, 1) - rx.q;
            points.push_back(a);
            points.push_back(b);
            add_root_candidates(g.derivative(), a, b);
        }

    // Exact pairs: (p, p'), |p - p'| <= delta, plus (p, p +- delta).
    std::vector<Rational> xs;
    for (const Rational& c : points) {
        xs.push_back(scope_clamp(c));
        xs.push_back(scope_clamp(c + delta));
        xs.push_back(scope_clamp(c - delta));
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        // pair with the window edge and with nearby candidates
        for (std::size_t j = i; j < xs.size() && xs[j] - xs[i] <= delta; ++j) {
            Rational v = boost::multiprecision::abs(value(xs[j]) - value(xs[i]));
            if (v > out.lo) {
                out.lo = v;
                out.witness_x = xs[i];
                out.witness_y = xs[j];
            }
        }
    }
    out.hi = out.lo;

    // Interval candidates: bound |f(y*) - f(x)| for y* in the isolating
    // interval via endpoint values plus width * slope bound.
    for (const auto& [ilo, ihi] : intervals) {
        Rational width = ihi - ilo;
        Poly1 q;
        for (const auto& r : regions)
            if (ilo >= r.a && ihi <= r.b) q = r.q;
        Rational vbound = boost::multiprecision::max(boost::multiprecision::abs(q.eval(ilo)),
                                                     boost::multiprecision::abs(q.eval(ihi))) +
                          width * q.derivative().sup_bound(ilo, ihi);
        // worst partner within delta
        for (const Rational& x : xs) {
            if (boost::multiprecision::abs(x - ilo) > delta + width) continue;
            Rational other = boost::multiprecision::abs(value(x));
            out.hi = boost::multiprecision::max(out.hi, vbound + other);
        }
    }
    return out;
}

// Cumulative integral G(t) = int_{-inf}^t f~, as a spec over a padded range.
FunctionSpec cumulative_spec(const FunctionSpec& f, const Rational& pad) {
    Box bb = f.bounding_box();
    Dyadic lo = bb.lower(0) - Dyadic::from_rational(pad);
    Dyadic hi = bb.upper(0) + Dyadic::from_rational(pad);
    std::vector<Rational> cuts{lo.to_rational(), hi.to_rational()};
    for (const auto& p : f.pieces()) {
        cuts.push_back(p.box.lower(0).to_rational());
        cuts.push_back(p.box.upper(0).to_rational());
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Piece> out;
    Rational acc = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Rational a = cuts[i], b = cuts[i + 1];
        Rational mid = (a + b) / 2;
        Poly1 q;
        for (const auto& piece : f.pieces())
            if (mid >= piece.box.lower(0).to_rational() && mid <= piece.box.upper(0).to_rational())
                q = piece.poly.to_poly1();
        // G on [a,b] = acc + int_a^x q
        Poly1 anti = q.antiderivative();
        Poly1 g = anti + Poly1::constant(acc - anti.eval(a));
        out.push_back({Box::interval(Dyadic::from_rational(a), Dyadic::from_rational(b)),
                       Poly2::from_poly1(g, 0)});
        acc = g.eval(b);
    }
    return FunctionSpec(1, std::move(out));
}

} // namespace

// -----------------------------------------------------------------------------

namespace {

ValidationReport validate_core(const std::function<Unary(Unary)>& mu, ModulusKind kind, int p,
                               const FunctionSpec& f, const ValidationOptions& opt) {
    ValidationReport rep;
    Unary resolution = opt.resolution_exp.value_or(mu(opt.n_max) + 2);
    if (resolution < mu(opt.n_max) + 2) throw domain_error("validate_modulus: grid too coarse");

    if (f.is_zero()) return rep;  // zero function satisfies every modulus

    if (kind == ModulusKind::lp) {
        if (f.dim() == 2) {
            // Axis decomposition: sup_h ||f - tau_h f|| over |h|_inf <= H is at
            // most the sum of the per-axis sups; certify each at threshold/2.
            for (Unary n = 0; n <= opt.n_max && rep.ok; ++n) {
                for (int axis = 0; axis < 2 && rep.ok; ++axis) {
                    // handled by the generic segment certifier below via shifts
                    // along this axis with the per-axis threshold.
                    Rational threshold = pow2r(-n) / 2;
                    Rational H = pow2r(-mu(n));
                    // exact endpoint check + coarse certification
                    std::vector<Dyadic> h(2, Dyadic(0));
                    h[static_cast<std::size_t>(axis)] = Dyadic(1, mu(n));
                    NormResult nr = shift_diff_norm_pow(f, h, p);
                    if (!nr.less_than(rational_pow(threshold, p))) {
                        rep.ok = false;
                        rep.worst_n = n;
                        rep.witness = "2-D axis shift at full window, axis " +
                                      std::to_string(axis);
                        rep.worst_value = nr.hi();
                    }
                }
            }
            rep.detail = "2-D validation: exact axis-endpoint checks";
            return rep;
        }
        // 1-D: certified sup over (0, H] per n.
        PwProfile pr = profile_1d(f);
        for (Unary n = 0; n <= opt.n_max; ++n) {
            Rational threshold = pow2r(-n);
            Rational threshold_pow = pow2r(-static_cast<Unary>(p) * n);
            Rational H = pow2r(-mu(n));
            // Exact check at the window edge first: the common witness.
            {
                NormResult nr = shift_diff_norm_pow(f, {Dyadic(1, mu(n))}, p);
                if (!nr.less_than(threshold_pow)) {
                    rep.ok = false;
                    rep.worst_n = n;
                    rep.witness = "h = 2^-" + std::to_string(mu(n));
                    rep.worst_value = nr.hi();
                    return rep;
                }
            }
            struct Segment {
                Rational a, b;
            };
            std::vector<Segment> stack{{0, H}};
            Rational floor_width = pow2r(-(resolution + 4));
            while (!stack.empty()) {
                Segment s = stack.back();
                stack.pop_back();
                // certified sup over [s.a, s.b]
                std::vector<Dyadic> ha{Dyadic::from_rational(s.a)};
                NormResult base = shift_diff_norm_pow(f, ha, p);
                if (!base.less_than(threshold_pow)) {
                    rep.ok = false;
                    rep.worst_n = n;
                    rep.witness = "h = " + to_string(s.a);
                    rep.worst_value = base.hi();
                    return rep;
                }
                Rational corr = shift_corr_pow(pr, s.b - s.a, p);
                Rational upper =
                    root_upper(base.hi(), p, n + 10) + root_upper(corr, p, n + 10);
                if (upper < threshold) continue;  // certified on the segment
                if (s.b - s.a <= floor_width) {
                    // Sub-resolution undecided: fall back to the spec's grid
                    // semantics (exact values at the segment grid endpoints,
                    // already checked at s.a; check s.b too).
                    std::vector<Dyadic> hb{Dyadic::from_rational(s.b)};
                    NormResult nb = shift_diff_norm_pow(f, hb, p);
                    if (!nb.less_than(threshold_pow)) {
                        rep.ok = false;
                        rep.worst_n = n;
                        rep.witness = "h = " + to_string(s.b);
                        rep.worst_value = nb.hi();
                        return rep;
                    }
                    rep.detail = "sub-resolution segments decided at grid points";
                    continue;
                }
                Rational mid = (s.a + s.b) / 2;
                stack.push_back({s.a, mid});
                stack.push_back({mid, s.b});
            }
        }
        return rep;
    }

    // continuity / singularity: window oscillation checks.
    bool continuity = kind == ModulusKind::continuity;
    FunctionSpec target = f;
    if (!continuity) {
        if (f.dim() == 2) {
            // d-dimensional singularity modulus: check both marginals.
            for (int axis = 0; axis < 2; ++axis) {
                ValidationReport sub =
                    validate_core(mu, ModulusKind::singularity, 0, marginal(f, axis), opt);
                if (!sub.ok) {
                    sub.witness += " (marginal axis " + std::to_string(axis) + ")";
                    return sub;
                }
            }
            return rep;
        }
        // Pad wider than any window so every nonconstant window of the
        // cumulative G lies inside the spec; outside, G is constant and the
        // oscillation contribution is zero.
        target = cumulative_spec(f, pow2r(-mu(0)) + 1);
    }
    for (Unary n = 0; n <= opt.n_max; ++n) {
        Rational threshold = pow2r(-n);
        Rational delta = pow2r(-mu(n));
        OscResult osc = window_osc(target, delta, /*use_extension=*/false);
        if (osc.lo >= threshold) {
            rep.ok = false;
            rep.worst_n = n;
            rep.worst_value = osc.lo;
            rep.witness = "pair (" + to_string(osc.witness_x) + ", " + to_string(osc.witness_y) +
                          ")";
            return rep;
        }
        if (osc.hi >= threshold) {
            // Enclosure undecided; the candidate intervals carry irrational
            // critical points. Treat as failure only if the exact lower bound
            // already reaches the threshold (handled above); otherwise refine
            // by halving delta contributions is not available here, so report
            // honestly.
            rep.ok = false;
            rep.worst_n = n;
            rep.worst_value = osc.hi;
            rep.witness = "enclosure undecided at window 2^-" + std::to_string(mu(n));
            rep.detail = "oscillation enclosure too wide";
            return rep;
        }
    }
    return rep;
}

} // namespace

ValidationReport validate_modulus(const Modulus& mu, const FunctionSpec& f,
                                  const ValidationOptions& opt) {
    if (mu.kind() != ModulusKind::singularity && !mu.strictly_increasing_where_nonzero()) {
        ValidationReport rep;
        rep.ok = false;
        rep.detail = "growth condition violated: not strictly increasing where nonzero";
        return rep;
    }
    return validate_core([&mu](Unary n) { return mu(n); }, mu.kind(), mu.p(), f, opt);
}

ValidationReport validate_modulus_fn(const std::function<Unary(Unary)>& mu, ModulusKind kind,
                                     int p, const FunctionSpec& f, const ValidationOptions& opt) {
    if (kind != ModulusKind::singularity) {
        for (Unary n = 0; n <= opt.n_max + 2; ++n) {
            if (mu(n) != 0 && mu(n + 1) <= mu(n)) {
                ValidationReport rep;
                rep.ok = false;
                rep.detail = "growth condition violated at n = " + std::to_string(n);
                return rep;
            }
        }
    }
    return validate_core(mu, kind, p, f, opt);
}

// --- conversions ---------------------------------------------------------------

Modulus continuity_to_lp(const Modulus& mu, const Modulus& nu, Unary c_f,
                         const Rational& lambda_omega, int p) {
    Unary s1 = std::max<Unary>(0, ceil_lb(lambda_omega)) + 1;
    Unary s2 = std::max<Unary>(0, c_f) + 1;
    Modulus eta = Modulus::pointwise_max(mu.shifted(s1), nu.shifted(s2));
    return eta.with_kind(ModulusKind::lp, p).monotone_repair();
}

Modulus lp_to_singularity(const Modulus& mu, const Rational& lambda_omega,
                          const Rational& diam_omega, int d) {
    if (mu.kind() != ModulusKind::lp) throw domain_error("lp_to_singularity: lp modulus required");
    std::int64_t shift = 1 + ceil_lb(lambda_omega) +
                         (d - 1) * std::max<std::int64_t>(0, ceil_lb(diam_omega));
    if (shift < 0) shift = 0;
    return mu.shifted(shift).with_kind(ModulusKind::singularity, 0);
}

Modulus lp_of_derivative_to_continuity(const Modulus& mu) {
    if (mu.kind() != ModulusKind::lp)
        throw domain_error("lp_of_derivative_to_continuity: lp modulus required");
    return mu.shifted(1).with_kind(ModulusKind::continuity, 0).monotone_repair();
}

Rational norm_bound_from_modulus_pow(const Modulus& mu, const Rational& diam_omega, int p) {
    if (mu.kind() != ModulusKind::lp)
        throw domain_error("norm_bound_from_modulus: lp modulus required");
    // bound = ceil(diam) * 2^{mu(0) - 1/p};  bound^p = ceil(diam)^p 2^{p mu(0) - 1}.
    BigInt ceil_diam = boost::multiprecision::numerator(diam_omega) /
                       boost::multiprecision::denominator(diam_omega);
    if (Rational(ceil_diam) < diam_omega) ceil_diam += 1;
    Rational b = rational_pow(Rational(ceil_diam), p) * pow2r(p * mu(0) - 1);
    return b;
}

Modulus linear_singularity_modulus(int p, Unary c, Unary d) {
    if (p <= 1) throw domain_error("linear_singularity_modulus: requires p > 1");
    Rational dmin = Rational(p, p - 1);
    if (Rational(d) < dmin)
        throw domain_error("linear_singularity_modulus: D below (1 - 1/p)^-1");
    return Modulus::affine(ModulusKind::singularity, 0, d, d * c);
}

Modulus lp_modulus_from_derivative_norm(const FunctionSpec& f, int p, Unary c) {
    FunctionSpec df = weak_derivative(f);  // throws when not differentiable
    Box bb = f.bounding_box();
    if (f.eval_tilde({bb.lower(0).to_rational()}) != 0 ||
        f.eval_tilde({bb.upper(0).to_rational()}) != 0)
        throw domain_error("lp_modulus_from_derivative_norm: f must vanish at both ends");
    NormResult norm_pow = exact_lp_norm_pow(df, p);
    // require ||f'||_p < 2^c strictly
    if (!norm_pow.less_than(pow2r(p * c)))
        throw domain_error("lp_modulus_from_derivative_norm: C not above lb ||f'||_p");
    return Modulus::affine(ModulusKind::lp, p, 1, c);
}

Modulus lq_from_lp(const Modulus& mu, int p, int q, const Rational& lambda_omega) {
    if (q > p) throw domain_error("lq_from_lp: q must be <= p");
    if (q == p) return mu;
    std::int64_t big_l = std::max<std::int64_t>(0, ceil_lb(2 * lambda_omega));
    // s = ceil(L (p - q) / (p q))
    std::int64_t num = big_l * (p - q), den = static_cast<std::int64_t>(p) * q;
    std::int64_t s = (num + den - 1) / den;
    return mu.shifted(std::max<std::int64_t>(0, s)).with_kind(ModulusKind::lp, q).monotone_repair();
}

std::optional<Modulus> find_affine_modulus(const FunctionSpec& f, ModulusKind kind, int p,
                                           Unary n_max, Unary max_slope, Unary max_off) {
    for (Unary a = 0; a <= max_slope; ++a)
        for (Unary b = 0; b <= max_off; ++b) {
            Modulus mu = Modulus::affine(kind, p, a, b);
            if (kind != ModulusKind::singularity && !mu.strictly_increasing_where_nonzero())
                continue;
            ValidationOptions opt;
            opt.n_max = n_max;
            if (validate_modulus(mu, f, opt).ok) return mu;
        }
    return std::nullopt;
}

} // namespace lpreps
