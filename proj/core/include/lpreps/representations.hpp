#pragma once

#include <functional>

#include "lpreps/modulus.hpp"
#include "lpreps/name.hpp"

namespace lpreps {

enum class RepTag { xr, xc, xs, xp, xmp, xpd, cauchy };

struct RepKind {
    RepTag tag;
    int d = 1;
    int p = 1;
    int m = 0;

    static RepKind xr() { return {RepTag::xr, 1, 0, 0}; }
    static RepKind xc() { return {RepTag::xc, 1, 0, 0}; }
    static RepKind xs(int d) { return {RepTag::xs, d, 0, 0}; }
    static RepKind xp(int p, int d) { return {RepTag::xp, d, p, 0}; }
    static RepKind xmp(int m, int p) { return {RepTag::xmp, 1, p, m}; }
    static RepKind xpd(int p, int d) { return {RepTag::xpd, d, p, 0}; }
    static RepKind cauchy(int p) { return {RepTag::cauchy, 1, p, 0}; }

    std::string to_string() const;
    static RepKind parse(const std::string& s);  // e.g. "xp:p=1,d=1", "xmp:m=1,p=2"
};

// Dyadic step function: boxes it is nonzero on with the corresponding values.
struct StepFunction {
    struct Entry {
        Box box;
        Dyadic value;
    };
    std::vector<Entry> entries;

    FunctionSpec to_spec(int d) const;
    BitString encode() const;
    static StepFunction decode(const BitString& a, int d);
};

// --- constructors ---------------------------------------------------------------

// Name of an exact dyadic real.
Name make_xr_name(const Dyadic& x);
// Name of a real given by approximations |scheme(n) - x| < 2^-n, |x| < 2^mag_exp.
Name make_xr_name(std::function<Dyadic(Unary)> scheme, Unary mag_exp);

// Standard representation of C([0,1]); mu must validate as a modulus of
// continuity of f (checked; throws contract_error otherwise).
Name make_xc_name(const FunctionSpec& f, const Modulus& mu, Unary validate_n = 8);

// Singular representation: integral answers, length a singularity modulus.
Name make_xs_name(const FunctionSpec& f, const Modulus& mu, int d, Unary validate_n = 8);

// xi_p: integral answers, length an Lp-modulus of f.
Name make_xp_name(const FunctionSpec& f, const Modulus& mu, int p, int d, Unary validate_n = 8);

// xi_{m,p}: integral answers of f, length an Lp-modulus of f^{(m)}.
Name make_xmp_name(const FunctionSpec& f, const Modulus& mu, int m, int p, Unary validate_n = 8);

// xi_p^D: answers pointwise values of the mollified approximations f^D_k.
Name make_xpd_name(const FunctionSpec& f, const Modulus& mu, int p, int d, Unary validate_n = 8);

// Cauchy representation with explicit step-function approximants; answers the
// unary query 1^n with the encoded step function S_n, ||f - S_n||_p < 2^-n
// (verified exactly up to verify_n at construction; queries beyond n_cap raise
// budget_error - approximant sizes grow exponentially).
Name make_cauchy_name(const FunctionSpec& f, int p,
                      std::function<StepFunction(Unary)> approximants, Unary verify_n = 6,
                      Unary n_cap = 24);

// Staircase approximants for an arbitrary corpus function via cell averages.
std::function<StepFunction(Unary)> staircase_scheme(const FunctionSpec& f, int p);

// --- validation -------------------------------------------------------------------

struct NameValidationOptions {
    Unary n_max = 6;
    Unary grid_exp = 3;       // dyadic corner grid 2^-grid_exp
    int random_queries = 32;  // extra random corners at finer resolution
    std::uint64_t seed = 17;
    // ground truth for xr names
    std::optional<Rational> real_value;
};

ValidationReport validate_name(const RepKind& kind, const Name& name, const FunctionSpec& f,
                               const NameValidationOptions& opt = {});

} // namespace lpreps
