#pragma once

#include <cstdint>
#include <vector>

#include "lpreps/dyadic.hpp"

namespace lpreps {

// Dense univariate polynomial over the rationals.
class Poly1 {
  public:
    Poly1() = default;
    explicit Poly1(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly1 constant(const Rational& v) { return Poly1({v}); }
    static Poly1 monomial(const Rational& v, std::size_t k);

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1 by convention here.
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    Rational eval(const Rational& x) const;

    Poly1 operator-() const;
    friend Poly1 operator+(const Poly1& a, const Poly1& b);
    friend Poly1 operator-(const Poly1& a, const Poly1& b);
    friend Poly1 operator*(const Poly1& a, const Poly1& b);
    Poly1 scaled(const Rational& s) const;
    Poly1 pow(unsigned k) const;
    friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }

    Poly1 derivative() const;
    Poly1 antiderivative() const;
    // P(alpha + beta*t) as a polynomial in t.
    Poly1 compose_linear(const Rational& alpha, const Rational& beta) const;

    // Euclidean division; returns {quotient, remainder}.
    static std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b);
    static Poly1 gcd(Poly1 a, Poly1 b);
    Poly1 squarefree_part() const;

    // Upper bound for |P| on [a,b] (coarse, certified).
    Rational sup_bound(const Rational& a, const Rational& b) const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Real-root structure of a polynomial on an interval.
struct RootRegion {
    bool exact;      // known rational root
    Rational point;  // when exact
    Rational lo, hi; // isolating open interval with one simple root when !exact
};

// All real roots of p in [a,b]: exact rationals where cheaply available
// (degree <= 2, or isolated to a rational point), otherwise isolating
// intervals. Requires p not identically zero.
std::vector<RootRegion> isolate_roots(const Poly1& p, const Rational& a, const Rational& b);

// Count sign changes of the Sturm chain of p at x (standard evaluation).
int sturm_variations(const std::vector<Poly1>& chain, const Rational& x);
std::vector<Poly1> sturm_chain(const Poly1& p);

// Dense bivariate polynomial, coefficient c[i][j] of x^i y^j. Represents
// univariate functions as well (no y powers); dimension is tracked by the
// surrounding FunctionSpec.
class Poly2 {
  public:
    Poly2() = default;
    explicit Poly2(std::vector<std::vector<Rational>> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly2 constant(const Rational& v);
    static Poly2 from_poly1(const Poly1& p, int axis);  // axis 0 -> poly in x, 1 -> in y

    bool is_zero() const { return c_.empty(); }
    std::int64_t degree(int axis) const;
    const std::vector<std::vector<Rational>>& coeffs() const { return c_; }
    Rational coeff(std::size_t i, std::size_t j) const;

    Rational eval(const std::vector<Rational>& x) const;  // size 1 (y=0 implied) or 2

    Poly2 operator-() const;
    friend Poly2 operator+(const Poly2& a, const Poly2& b);
    friend Poly2 operator-(const Poly2& a, const Poly2& b);
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    Poly2 scaled(const Rational& s) const;
    friend bool operator==(const Poly2& a, const Poly2& b) { return a.c_ == b.c_; }

    Poly2 derivative(int axis) const;
    Poly2 antiderivative(int axis) const;
    // Substitute x_axis := alpha + beta * x_axis.
    Poly2 subst_linear(int axis, const Rational& alpha, const Rational& beta) const;
    // Fix x_axis := v; result depends only on the other axis (returned on axis 0).
    Poly1 eval_axis(int axis, const Rational& v) const;

    bool depends_on(int axis) const { return degree(axis) > 0; }
    Poly1 to_poly1() const;  // requires no y dependence

  private:
    void trim();
    std::vector<std::vector<Rational>> c_;  // ragged rows allowed internally
};

} // namespace lpreps
