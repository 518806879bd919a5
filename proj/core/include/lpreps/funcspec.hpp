#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpreps/dyadic.hpp"
#include "lpreps/poly.hpp"

namespace lpreps {

// Exact value of an integral of an absolute value: either an exact rational,
// or a certified enclosure refinable by shrinking sign-unresolved slivers.
class NormResult {
  public:
    static NormResult make_exact(const Rational& v);

    bool is_exact() const { return slivers_.empty(); }
    const Rational& exact_value() const;
    Rational lo() const;
    Rational hi() const;
    Rational width() const { return hi() - lo(); }
    Rational midpoint() const { return (lo() + hi()) / 2; }

    void refine();  // one bisection round over all slivers

    // Strict comparisons, refining as needed. Throws contract_error if still
    // undecided after max_rounds (only possible if the value equals the bound).
    bool less_than(const Rational& bound, int max_rounds = 80);
    bool greater_equal(const Rational& bound, int max_rounds = 80) {
        return !less_than(bound, max_rounds);
    }

    void add_exact(const Rational& v) { base_ += v; }
    void add_sliver(const Rational& a, const Rational& b, const Poly1& signed_integrand);
    void merge(const NormResult& other);

  private:
    Rational base_ = 0;
    struct Sliver {
        Rational a, b;
        Poly1 q;  // signed integrand; contribution is integral of |q| over [a,b]
    };
    std::vector<Sliver> slivers_;
};

// Integral of |q|^p over [a,b] (p >= 1 integer). Exact whenever the sign
// pattern of q resolves at rational points; otherwise a refinable enclosure.
NormResult integrate_abs_power(const Poly1& q, const Rational& a, const Rational& b, int p);

struct Piece {
    Box box;
    Poly2 poly;
};

// Piecewise polynomial over dyadic boxes with disjoint interiors; implicitly
// extended by zero outside its domain (the union of the piece boxes).
class FunctionSpec {
  public:
    FunctionSpec() : d_(1) {}
    FunctionSpec(int d, std::vector<Piece> pieces);

    int dim() const { return d_; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    bool is_zero() const;

    Rational measure() const;             // lambda(Omega)
    Rational diameter() const;            // sup-norm diameter of Omega
    Box bounding_box() const;             // throws if no pieces
    Rational eval_tilde(const std::vector<Rational>& x) const;  // extension by zero

    std::string to_json() const;
    static FunctionSpec from_json(const std::string& text);

  private:
    int d_;
    std::vector<Piece> pieces_;
};

// --- oracle operations -------------------------------------------------------

// Exact integral of the zero-extension over the box.
Rational exact_integral(const FunctionSpec& f, const Box& box);

// Exact integral over all of R^d (the whole domain).
Rational total_integral(const FunctionSpec& f);

// Integral of |f|^p over the domain; value is norm^p.
NormResult exact_lp_norm_pow(const FunctionSpec& f, int p);

// norm^p of f~ - tau_h f~ (shift by the dyadic vector h).
NormResult shift_diff_norm_pow(const FunctionSpec& f, const std::vector<Dyadic>& h, int p);

// f_m(x) = 2^{dm} * integral over cell(x,m) = x + [-2^-m-1, 2^-m-1]^d.
Rational cell_average(const FunctionSpec& f, const std::vector<Dyadic>& x, Unary m);

// tau_h f~ as a spec: (tau_h f)(x) = f(x + h).
FunctionSpec shift_spec(const FunctionSpec& f, const std::vector<Dyadic>& h);

// f + g and f - g on the common grid refinement (zero extension everywhere).
FunctionSpec add_specs(const FunctionSpec& f, const FunctionSpec& g);
FunctionSpec sub_specs(const FunctionSpec& f, const FunctionSpec& g);
FunctionSpec scale_spec(const FunctionSpec& f, const Rational& c);

// The moving average f_m = g_m * f~ with g_m = 2^m chi_[-2^-m-1,2^-m-1] per axis.
FunctionSpec continuous_approximation(const FunctionSpec& f, Unary m);

// The mollifier g^D_m: unit mass product tent, support [-2^-m, 2^-m]^d.
FunctionSpec mollifier_spec(int d, Unary m);

// f^D_m = g^D_m * f~ (exact piecewise polynomial).
FunctionSpec convolve_mollifier(const FunctionSpec& f, Unary m);

// One-dimensional weak derivative; throws if f jumps across pieces.
FunctionSpec weak_derivative(const FunctionSpec& f);

// Marginal f_i: all axes but `axis` integrated out (d=2 -> d=1).
FunctionSpec marginal(const FunctionSpec& f, int axis);

// Exact essential sup of |f| when f is within the exactly-solvable class
// (univariate degree <= 2 per piece, or per-axis degree <= 1 in 2-D).
std::optional<Rational> sup_norm_exact(const FunctionSpec& f);

} // namespace lpreps
