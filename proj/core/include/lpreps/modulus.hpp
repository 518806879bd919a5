#pragma once

#include <functional>
#include <optional>
#include <string>

#include "lpreps/funcspec.hpp"

namespace lpreps {

enum class ModulusKind { continuity, singularity, lp };

std::string to_string(ModulusKind k);

// A map omega -> omega stored as a finite table followed by an affine tail
// a*n + b (evaluated from the end of the table). Strictly increasing wherever
// nonzero for kinds continuity and lp; no growth condition for singularity.
class Modulus {
  public:
    Modulus(ModulusKind kind, int p, std::vector<Unary> table, Unary tail_a, Unary tail_b);
    static Modulus affine(ModulusKind kind, int p, Unary a, Unary b) {
        return Modulus(kind, p, {}, a, b);
    }
    static Modulus zero(ModulusKind kind, int p) { return affine(kind, p, 0, 0); }

    Unary operator()(Unary n) const;
    ModulusKind kind() const { return kind_; }
    int p() const { return p_; }

    // Structural check of "mu(n) != 0 => mu(n+1) > mu(n)".
    bool strictly_increasing_where_nonzero() const;
    // Smallest pointwise-larger modulus satisfying the growth condition.
    Modulus monotone_repair() const;

    Modulus shifted(Unary s) const;              // n -> mu(n + s)
    Modulus with_kind(ModulusKind k, int p) const;
    static Modulus pointwise_max(const Modulus& a, const Modulus& b);

    std::string to_json() const;
    static Modulus from_json(const std::string& text);

    friend bool operator==(const Modulus& a, const Modulus& b);

  private:
    ModulusKind kind_;
    int p_;  // meaningful for kind lp
    std::vector<Unary> table_;
    Unary tail_a_, tail_b_;
};

struct ValidationReport {
    bool ok = true;
    Unary worst_n = -1;
    std::string witness;        // description of the failing shift/pair/window
    Rational worst_value = 0;   // the offending norm/oscillation (or ^p)
    std::string detail;
};

struct ValidationOptions {
    Unary n_max = 8;
    // Grid resolution exponent; must be at least mu(n_max) + 2 (spec contract).
    // Certification works adaptively; segments narrower than the grid fall back
    // to exact checks at grid points.
    std::optional<Unary> resolution_exp;
};

// Checks the defining implication of the modulus kind against the exact
// oracle, for all n <= n_max, plus the growth side condition.
ValidationReport validate_modulus(const Modulus& mu, const FunctionSpec& f,
                                  const ValidationOptions& opt);

// Same check for a modulus given as a plain function (e.g. a declared length).
// The growth side condition is checked on the sampled range only.
ValidationReport validate_modulus_fn(const std::function<Unary(Unary)>& mu, ModulusKind kind,
                                     int p, const FunctionSpec& f, const ValidationOptions& opt);

// --- conversions (the paper's lemmas, strictness-repaired) -------------------

// eta(n) = max{mu(n + ceil(lb lambda(Omega)) + 1), nu(n + C_f + 1)}; mu a
// modulus of continuity of f, nu an Lp-modulus of chi_Omega, ||f||_inf <= 2^C_f.
Modulus continuity_to_lp(const Modulus& mu, const Modulus& nu, Unary c_f,
                         const Rational& lambda_omega, int p);

// n -> mu(n + 1 + ceil(lb lambda) + (d-1) ceil(lb diam)), clamped at zero shift.
Modulus lp_to_singularity(const Modulus& mu, const Rational& lambda_omega,
                          const Rational& diam_omega, int d);

// n -> mu(n+1): modulus of continuity of f from an Lp-modulus of f'.
Modulus lp_of_derivative_to_continuity(const Modulus& mu);

// Returns bound^p with ||f||_p < ceil(diam) * 2^{mu(0) - 1/p}.
Rational norm_bound_from_modulus_pow(const Modulus& mu, const Rational& diam_omega, int p);

// Prop "small moduli" item 2: n -> D(n + C); requires p > 1.
Modulus linear_singularity_modulus(int p, Unary c, Unary d);

// n -> n + C is an Lp-modulus of f when f' exists, f vanishes at both ends of
// its interval domain, and C > lb ||f'||_p. Validates those preconditions.
Modulus lp_modulus_from_derivative_norm(const FunctionSpec& f, int p, Unary c);

// L^q-modulus from an L^p-modulus (q <= p) by a constant shift.
Modulus lq_from_lp(const Modulus& mu, int p, int q, const Rational& lambda_omega);

// Least affine modulus (slope-major order) validating for f, or nullopt.
std::optional<Modulus> find_affine_modulus(const FunctionSpec& f, ModulusKind kind, int p,
                                           Unary n_max, Unary max_slope = 4, Unary max_off = 16);

} // namespace lpreps
