#include "lpreps/poly.hpp"

#include <algorithm>

#include "lpreps/errors.hpp"

namespace lpreps {

Poly1 Poly1::monomial(const Rational& v, std::size_t k) {
    std::vector<Rational> c(k + 1, Rational(0));
    c[k] = v;
    return Poly1(std::move(c));
}

Rational Poly1::eval(const Rational& x) const {
    Rational v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
}

Poly1 Poly1::operator-() const {
    auto c = c_;
    for (auto& v : c) v = -v;
    return Poly1(std::move(c));
}

Poly1 operator+(const Poly1& a, const Poly1& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return Poly1(std::move(c));
}

Poly1 operator-(const Poly1& a, const Poly1& b) { return a + (-b); }

Poly1 operator*(const Poly1& a, const Poly1& b) {
    if (a.is_zero() || b.is_zero()) return Poly1();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly1(std::move(c));
}

Poly1 Poly1::scaled(const Rational& s) const {
    auto c = c_;
    for (auto& v : c) v *= s;
    return Poly1(std::move(c));
}

Poly1 Poly1::pow(unsigned k) const {
    Poly1 r = constant(1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

Poly1 Poly1::derivative() const {
    if (c_.size() <= 1) return Poly1();
    std::vector<Rational> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly1(std::move(c));
}

Poly1 Poly1::antiderivative() const {
    if (is_zero()) return Poly1();
    std::vector<Rational> c(c_.size() + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        c[i + 1] = c_[i] / Rational(static_cast<long>(i + 1));
    return Poly1(std::move(c));
}

Poly1 Poly1::compose_linear(const Rational& alpha, const Rational& beta) const {
    // Horner in (alpha + beta t).
    Poly1 lin({alpha, beta});
    Poly1 r;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * lin + constant(c_[i]);
    return r;
}

std::pair<Poly1, Poly1> Poly1::divmod(const Poly1& a, const Poly1& b) {
    if (b.is_zero()) throw domain_error("Poly1::divmod: division by zero polynomial");
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo(rem.size() > b.c_.size() ? rem.size() - b.c_.size() + 1 : 1,
                              Rational(0));
    while (rem.size() >= b.c_.size() && !(rem.size() == 1 && rem[0] == 0) && !rem.empty()) {
        std::size_t shift = rem.size() - b.c_.size();
        Rational f = rem.back() / b.c_.back();
        quo[shift] = f;
        for (std::size_t i = 0; i < b.c_.size(); ++i) rem[shift + i] -= f * b.c_[i];
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (rem.empty()) break;
    }
    return {Poly1(std::move(quo)), Poly1(std::move(rem))};
}

Poly1 Poly1::gcd(Poly1 a, Poly1 b) {
    while (!b.is_zero()) {
        Poly1 r = divmod(a, b).second;
        a = b;
        b = r;
    }
    if (!a.is_zero()) a = a.scaled(Rational(1) / a.c_.back());  // monic
    return a;
}

Poly1 Poly1::squarefree_part() const {
    if (degree() <= 1) return *this;
    Poly1 g = gcd(*this, derivative());
    if (g.degree() <= 0) return *this;
    return divmod(*this, g).first;
}

Rational Poly1::sup_bound(const Rational& a, const Rational& b) const {
    Rational m = boost::multiprecision::max(boost::multiprecision::abs(a),
                                            boost::multiprecision::abs(b));
    Rational bound = 0, powm = 1;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        bound += boost::multiprecision::abs(c_[i]) * powm;
        powm *= m;
    }
    return bound;
}

std::vector<Poly1> sturm_chain(const Poly1& p) {
    std::vector<Poly1> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        Poly1 r = Poly1::divmod(chain[chain.size() - 2], chain.back()).second;
        chain.push_back(-r);
    }
    chain.pop_back();
    return chain;
}

int sturm_variations(const std::vector<Poly1>& chain, const Rational& x) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        Rational v = q.eval(x);
        int s = v == 0 ? 0 : (v > 0 ? 1 : -1);
        if (s != 0) {
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
    }
    return var;
}

namespace {

// Bisection over a squarefree q with q nonzero at a and b. Returns false and
// sets *found when an exact interior root is hit (caller factors it out and
// restarts); otherwise appends isolating intervals.
bool isolate_rec(const Poly1& q, const std::vector<Poly1>& chain, const Rational& a,
                 const Rational& b, std::vector<RootRegion>& out, Rational* found, int depth) {
    int n = sturm_variations(chain, a) - sturm_variations(chain, b);
    if (n <= 0) return true;
    Rational mid = (a + b) / 2;
    if (q.eval(mid) == 0) {
        *found = mid;
        return false;
    }
    if (n == 1 && depth >= 4) {
        out.push_back({false, 0, a, b});
        return true;
    }
    return isolate_rec(q, chain, a, mid, out, found, depth + 1) &&
           isolate_rec(q, chain, mid, b, out, found, depth + 1);
}

bool rational_sqrt(const Rational& x, Rational* out) {
    if (x < 0) return false;
    BigInt n = boost::multiprecision::numerator(x);
    BigInt d = boost::multiprecision::denominator(x);
    BigInt sn = boost::multiprecision::sqrt(n);
    BigInt sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return false;
    *out = Rational(sn, sd);
    return true;
}

} // namespace

std::vector<RootRegion> isolate_roots(const Poly1& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw domain_error("isolate_roots: zero polynomial");
    std::vector<RootRegion> out;
    if (a >= b) return out;
    auto add_if_inside = [&](const Rational& r) {
        if (r >= a && r <= b) out.push_back({true, r, 0, 0});
    };
    if (p.degree() == 0) return out;
    if (p.degree() == 1) {
        add_if_inside(-p.coeff(0) / p.coeff(1));
        return out;
    }
    if (p.degree() == 2) {
        Rational A = p.coeff(2), B = p.coeff(1), C = p.coeff(0);
        Rational disc = B * B - 4 * A * C;
        if (disc < 0) return out;
        Rational sq;
        if (rational_sqrt(disc, &sq)) {
            add_if_inside((-B - sq) / (2 * A));
            if (sq != 0) add_if_inside((-B + sq) / (2 * A));
            return out;
        }
        // Irrational pair: fall through to Sturm isolation.
    }
    Poly1 q = p.squarefree_part();
    // Factor out exact roots as they are found, restarting the bisection on
    // the reduced polynomial so Sturm endpoints stay nonzero.
    for (;;) {
        if (q.degree() <= 0) break;
        if (q.eval(a) == 0) {
            out.push_back({true, a, 0, 0});
            q = Poly1::divmod(q, Poly1({-a, Rational(1)})).first;
            continue;
        }
        if (q.eval(b) == 0) {
            out.push_back({true, b, 0, 0});
            q = Poly1::divmod(q, Poly1({-b, Rational(1)})).first;
            continue;
        }
        if (q.degree() == 1) {
            add_if_inside(-q.coeff(0) / q.coeff(1));
            break;
        }
        auto chain = sturm_chain(q);
        std::vector<RootRegion> intervals;
        Rational found;
        if (isolate_rec(q, chain, a, b, intervals, &found, 0)) {
            out.insert(out.end(), intervals.begin(), intervals.end());
            break;
        }
        out.push_back({true, found, 0, 0});
        q = Poly1::divmod(q, Poly1({-found, Rational(1)})).first;
    }
    std::sort(out.begin(), out.end(), [](const RootRegion& x, const RootRegion& y) {
        Rational px = x.exact ? x.point : x.lo;
        Rational py = y.exact ? y.point : y.lo;
        return px < py;
    });
    return out;
}

// ---------------------------------------------------------------------------

Poly2 Poly2::constant(const Rational& v) {
    if (v == 0) return Poly2();
    return Poly2({{v}});
}

Poly2 Poly2::from_poly1(const Poly1& p, int axis) {
    if (p.is_zero()) return Poly2();
    std::vector<std::vector<Rational>> c;
    if (axis == 0) {
        for (const auto& v : p.coeffs()) c.push_back({v});
    } else {
        c.push_back(p.coeffs());
    }
    return Poly2(std::move(c));
}

void Poly2::trim() {
    for (auto& row : c_)
        while (!row.empty() && row.back() == 0) row.pop_back();
    while (!c_.empty() && c_.back().empty()) c_.pop_back();
    if (c_.size() == 1 && c_[0].empty()) c_.clear();
}

std::int64_t Poly2::degree(int axis) const {
    if (c_.empty()) return -1;
    if (axis == 0) {
        for (std::size_t i = c_.size(); i-- > 0;)
            if (!c_[i].empty()) return static_cast<std::int64_t>(i);
        return -1;
    }
    std::int64_t d = -1;
    for (const auto& row : c_)
        d = std::max(d, static_cast<std::int64_t>(row.size()) - 1);
    return d;
}

Rational Poly2::coeff(std::size_t i, std::size_t j) const {
    if (i >= c_.size() || j >= c_[i].size()) return 0;
    return c_[i][j];
}

Rational Poly2::eval(const std::vector<Rational>& x) const {
    Rational vx = x.empty() ? Rational(0) : x[0];
    Rational vy = x.size() > 1 ? x[1] : Rational(0);
    Rational r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        Rational row = 0;
        for (std::size_t j = c_[i].size(); j-- > 0;) row = row * vy + c_[i][j];
        r = r * vx + row;
    }
    return r;
}

Poly2 Poly2::operator-() const {
    auto c = c_;
    for (auto& row : c)
        for (auto& v : row) v = -v;
    return Poly2(std::move(c));
}

Poly2 operator+(const Poly2& a, const Poly2& b) {
    std::vector<std::vector<Rational>> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::size_t la = i < a.c_.size() ? a.c_[i].size() : 0;
        std::size_t lb = i < b.c_.size() ? b.c_[i].size() : 0;
        c[i].assign(std::max(la, lb), Rational(0));
        for (std::size_t j = 0; j < la; ++j) c[i][j] += a.c_[i][j];
        for (std::size_t j = 0; j < lb; ++j) c[i][j] += b.c_[i][j];
    }
    return Poly2(std::move(c));
}

Poly2 operator-(const Poly2& a, const Poly2& b) { return a + (-b); }

Poly2 operator*(const Poly2& a, const Poly2& b) {
    if (a.is_zero() || b.is_zero()) return Poly2();
    std::size_t dx = 0, dy = 0, ax = a.c_.size(), bx = b.c_.size();
    for (const auto& r : a.c_) dx = std::max(dx, r.size());
    for (const auto& r : b.c_) dy = std::max(dy, r.size());
    std::vector<std::vector<Rational>> c(ax + bx - 1, std::vector<Rational>(dx + dy - 1, Rational(0)));
    for (std::size_t i = 0; i < ax; ++i)
        for (std::size_t j = 0; j < a.c_[i].size(); ++j) {
            if (a.c_[i][j] == 0) continue;
            for (std::size_t k = 0; k < bx; ++k)
                for (std::size_t l = 0; l < b.c_[k].size(); ++l)
                    c[i + k][j + l] += a.c_[i][j] * b.c_[k][l];
        }
    return Poly2(std::move(c));
}

Poly2 Poly2::scaled(const Rational& s) const {
    auto c = c_;
    for (auto& row : c)
        for (auto& v : row) v *= s;
    return Poly2(std::move(c));
}

Poly2 Poly2::derivative(int axis) const {
    std::vector<std::vector<Rational>> c;
    if (axis == 0) {
        for (std::size_t i = 1; i < c_.size(); ++i) {
            auto row = c_[i];
            for (auto& v : row) v *= Rational(static_cast<long>(i));
            c.push_back(std::move(row));
        }
    } else {
        for (const auto& row : c_) {
            std::vector<Rational> r;
            for (std::size_t j = 1; j < row.size(); ++j)
                r.push_back(row[j] * Rational(static_cast<long>(j)));
            c.push_back(std::move(r));
        }
    }
    return Poly2(std::move(c));
}

Poly2 Poly2::antiderivative(int axis) const {
    std::vector<std::vector<Rational>> c;
    if (axis == 0) {
        c.emplace_back();
        for (std::size_t i = 0; i < c_.size(); ++i) {
            auto row = c_[i];
            for (auto& v : row) v /= Rational(static_cast<long>(i + 1));
            c.push_back(std::move(row));
        }
    } else {
        for (const auto& row : c_) {
            std::vector<Rational> r(row.size() + 1, Rational(0));
            for (std::size_t j = 0; j < row.size(); ++j)
                r[j + 1] = row[j] / Rational(static_cast<long>(j + 1));
            c.push_back(std::move(r));
        }
    }
    return Poly2(std::move(c));
}

Poly2 Poly2::subst_linear(int axis, const Rational& alpha, const Rational& beta) const {
    // Horner along the chosen axis with linear argument.
    Poly2 lin = axis == 0 ? Poly2({{alpha}, {beta}}) : Poly2({{alpha, beta}});
    Poly2 r;
    if (axis == 0) {
        for (std::size_t i = c_.size(); i-- > 0;)
            r = r * lin + Poly2::from_poly1(Poly1(c_[i]), 1);
    } else {
        std::int64_t dy = degree(1);
        for (std::int64_t j = dy; j >= 0; --j) {
            std::vector<std::vector<Rational>> col;
            for (std::size_t i = 0; i < c_.size(); ++i)
                col.push_back({coeff(i, static_cast<std::size_t>(j))});
            r = r * lin + Poly2(std::move(col));
        }
    }
    return r;
}

Poly1 Poly2::eval_axis(int axis, const Rational& v) const {
    // Result as a univariate polynomial in the remaining variable.
    if (axis == 0) {
        Poly1 r;
        Rational pv = 1;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            r = r + Poly1(c_[i]).scaled(pv);
            pv *= v;
        }
        return r;
    }
    std::vector<Rational> out(c_.size(), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        Rational pv = 1, acc = 0;
        for (std::size_t j = 0; j < c_[i].size(); ++j) {
            acc += c_[i][j] * pv;
            pv *= v;
        }
        out[i] = acc;
    }
    return Poly1(std::move(out));
}

Poly1 Poly2::to_poly1() const {
    if (depends_on(1)) throw domain_error("Poly2::to_poly1: depends on second variable");
    std::vector<Rational> c;
    for (const auto& row : c_) c.push_back(row.empty() ? Rational(0) : row[0]);
    return Poly1(std::move(c));
}

} // namespace lpreps
