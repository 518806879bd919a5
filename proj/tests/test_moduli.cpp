#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpreps/corpus.hpp"
#include "lpreps/modulus.hpp"

using namespace lpreps;

namespace {
ValidationOptions opts(Unary n_max) {
    ValidationOptions o;
    o.n_max = n_max;
    return o;
}
bool validates(const Modulus& mu, const FunctionSpec& f, Unary n_max) {
    return validate_modulus(mu, f, opts(n_max)).ok;
}
} // namespace

TEST_CASE("modulus evaluation, shift, max, repair") {
    Modulus m(ModulusKind::lp, 2, {3, 5}, 1, 4);  // spec's json example shape
    CHECK(m(0) == 3);
    CHECK(m(1) == 5);
    CHECK(m(2) == 6);
    CHECK(m(5) == 9);
    Modulus s = m.shifted(1);
    CHECK(s(0) == 5);
    CHECK(s(1) == 6);
    Modulus mx = Modulus::pointwise_max(Modulus::affine(ModulusKind::lp, 2, 1, 5),
                                        Modulus::affine(ModulusKind::lp, 2, 2, 0));
    for (Unary n = 0; n <= 12; ++n) CHECK(mx(n) == std::max<Unary>(n + 5, 2 * n));
    Modulus bad(ModulusKind::lp, 1, {2, 2, 4}, 1, 5);
    CHECK_FALSE(bad.strictly_increasing_where_nonzero());
    CHECK(bad.monotone_repair().strictly_increasing_where_nonzero());
    Modulus round = Modulus::from_json(m.to_json());
    CHECK(round == m);
    CHECK(round.kind() == ModulusKind::lp);
    CHECK(round.p() == 2);
}

TEST_CASE("zero function validates any modulus") {
    for (auto kind : {ModulusKind::continuity, ModulusKind::singularity, ModulusKind::lp})
        CHECK(validates(Modulus::zero(kind, 1), corpus::zero(), 6));
}

TEST_CASE("chi: n+2 is an L1-modulus, n+1 fails exactly at h = 2^-n-1") {
    CHECK(validates(Modulus::affine(ModulusKind::lp, 1, 1, 2), corpus::chi_half(), 8));
    auto rep = validate_modulus(Modulus::affine(ModulusKind::lp, 1, 1, 1), corpus::chi_half(),
                                opts(8));
    CHECK_FALSE(rep.ok);
    // the witness is the exact window edge h = 2^-(n+1)
    CHECK(rep.witness.find("h = 2^-") != std::string::npos);
}

TEST_CASE("oscillators: n+1 is a common singularity modulus for every m") {
    for (int m = 1; m <= 6; ++m)
        CHECK(validates(Modulus::affine(ModulusKind::singularity, 0, 1, 1), corpus::oscillator(m),
                        8));
}

TEST_CASE("continuity moduli: Lipschitz slopes with strictness repair") {
    // hat has slope 2: n+1 suffices without strictness, n+2 with it
    CHECK(validates(Modulus::affine(ModulusKind::continuity, 0, 1, 2), corpus::hat(), 8));
    CHECK_FALSE(validates(Modulus::affine(ModulusKind::continuity, 0, 1, 1), corpus::hat(), 8));
    // x is Lipschitz-1: n+1 validates
    CHECK(validates(Modulus::affine(ModulusKind::continuity, 0, 1, 1), corpus::identity(), 8));
    // f == 1: constant, mu == 0 validates (oscillation on Omega is zero)
    CHECK(validates(Modulus::zero(ModulusKind::continuity, 0), corpus::one(), 8));
}

TEST_CASE("continuity_to_lp: f == 1 example gives 2n+3 and validates") {
    Modulus mu = Modulus::zero(ModulusKind::continuity, 0);
    Modulus nu = Modulus::affine(ModulusKind::lp, 2, 2, 1);  // the paper's pm+1 for chi_Omega
    Modulus eta = continuity_to_lp(mu, nu, 0, Rational(1), 2);
    for (Unary n = 0; n <= 10; ++n) CHECK(eta(n) == 2 * n + 3);
    CHECK(validates(eta, corpus::one(), 8));
}

TEST_CASE("chi_Omega Lp-modulus: pm+1 fails strictness, pm+2 validates") {
    for (int p : {1, 2}) {
        Modulus loose = Modulus::affine(ModulusKind::lp, p, p, 1);
        Modulus tight = Modulus::affine(ModulusKind::lp, p, p, 2);
        CHECK_FALSE(validates(loose, corpus::one(), 6));
        CHECK(validates(tight, corpus::one(), 6));
    }
}

TEST_CASE("lp_to_singularity: formula and validation") {
    Modulus mu = Modulus::affine(ModulusKind::lp, 1, 1, 2);
    Modulus sing = lp_to_singularity(mu, Rational(1), Rational(1), 1);
    for (Unary n = 0; n <= 8; ++n) CHECK(sing(n) == mu(n + 1));
    CHECK(sing.kind() == ModulusKind::singularity);
    CHECK(validates(sing, corpus::chi_half(), 8));
}

TEST_CASE("lp_of_derivative_to_continuity") {
    // f(x) = x, f' == 1 with L1-modulus n+2 (chi-type): continuity modulus n+3
    Modulus mu = Modulus::affine(ModulusKind::lp, 1, 1, 2);
    Modulus cont = lp_of_derivative_to_continuity(mu);
    for (Unary n = 0; n <= 8; ++n) CHECK(cont(n) == n + 3);
    CHECK(validates(cont, corpus::identity(), 8));
}

TEST_CASE("norm bound lemma: examples and corpus") {
    // chi, mu(0)=2, p=1, diam=1: bound 2; ||f||_1 = 1/2 < 2
    Modulus mu = Modulus::affine(ModulusKind::lp, 1, 1, 2);
    Rational bound_pow = norm_bound_from_modulus_pow(mu, Rational(1), 1);
    CHECK(bound_pow == Rational(2));
    CHECK(Rational(1, 2) < bound_pow);
    // f == 1, p = 2, mu(0) = 3: bound^2 = 2^{2*3-1} = 32; ||f||_2^2 = 1
    Modulus mu2 = Modulus::affine(ModulusKind::lp, 2, 2, 3);
    CHECK(norm_bound_from_modulus_pow(mu2, Rational(1), 2) == Rational(32));
}

TEST_CASE("linear singularity modulus: formula and validation") {
    Modulus m = linear_singularity_modulus(2, 1, 2);
    for (Unary n = 0; n <= 6; ++n) CHECK(m(n) == 2 * n + 2);
    CHECK_THROWS_AS(linear_singularity_modulus(1, 1, 2), domain_error);
    CHECK_THROWS_AS(linear_singularity_modulus(2, 1, 1), domain_error);
    // chi has ||f||_2 = sqrt(1/2) < 1 = 2^0, so C = 1 works
    CHECK(validates(m, corpus::chi_half(), 8));
}

TEST_CASE("lp modulus from derivative norm: hat example") {
    // hat on [1/4,3/4] height 1/2: ||f'||_p = 2 * 2^{-1/p} < 4, C = 2
    FunctionSpec f = corpus::hat_on(Dyadic(1, 2), Dyadic(3, 2), Dyadic(1, 1));
    for (int p : {1, 2}) {
        Modulus mu = lp_modulus_from_derivative_norm(f, p, 2);
        for (Unary n = 0; n <= 6; ++n) CHECK(mu(n) == n + 2);
        CHECK(validates(mu, f, 7));
    }
    // f(x) = x does not vanish at 1: rejected
    CHECK_THROWS_AS(lp_modulus_from_derivative_norm(corpus::identity(), 1, 2), domain_error);
    // zero function: any C >= 1 is fine
    CHECK_NOTHROW(lp_modulus_from_derivative_norm(corpus::zero(), 1, 1));
}

TEST_CASE("lq_from_lp") {
    Modulus mu = Modulus::affine(ModulusKind::lp, 2, 2, 3);
    CHECK(lq_from_lp(mu, 2, 2, Rational(1)) == mu);
    Modulus m1 = lq_from_lp(mu, 2, 1, Rational(1));
    CHECK(m1.p() == 1);
    CHECK(validates(m1, corpus::chi_half(), 7));
    CHECK(validates(m1, corpus::one(), 7));
    CHECK_THROWS_AS(lq_from_lp(mu, 2, 3, Rational(1)), domain_error);
}

TEST_CASE("find_affine_modulus searches the least valid affine modulus") {
    auto mu = find_affine_modulus(corpus::chi_half(), ModulusKind::lp, 1, 6);
    REQUIRE(mu.has_value());
    CHECK((*mu)(0) == 2);  // n+2 is least for chi at p=1
    auto muc = find_affine_modulus(corpus::identity(), ModulusKind::continuity, 0, 6);
    REQUIRE(muc.has_value());
    CHECK((*muc)(3) <= 4 + 2);
}

TEST_CASE("small moduli contrapositive: n+C singularity modulus bounds sup norm") {
    struct Case {
        FunctionSpec f;
        Unary c;
    };
    for (const auto& e : corpus::standard(6)) {
        auto mu = find_affine_modulus(e.spec, ModulusKind::singularity, 0, 8, 1, 12);
        if (!mu.has_value()) continue;
        auto sup = sup_norm_exact(e.spec);
        REQUIRE(sup.has_value());
        // slope-1 modulus n + C found: sup norm <= 2^C
        Unary c = (*mu)(0);
        CHECK(*sup <= Rational(BigInt(1) << static_cast<unsigned>(c)));
    }
}

TEST_CASE("validation rejects coarse grids") {
    Modulus mu = Modulus::affine(ModulusKind::lp, 1, 1, 2);
    ValidationOptions o;
    o.n_max = 4;
    o.resolution_exp = mu(4);  // below mu(n_max)+2
    CHECK_THROWS_AS(validate_modulus(mu, corpus::chi_half(), o), domain_error);
}
