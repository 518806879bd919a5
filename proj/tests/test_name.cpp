#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpreps/name.hpp"

using namespace lpreps;
using SOP = SecondOrderPoly;

namespace {
// A toy length-monotone name: answers with the query echoed as ones.
Name echo_ones() {
    return Name([](const BitString& a) { return BitString::ones(a.size()); },
                [](Unary k) { return k; });
}
} // namespace

TEST_CASE("query enforces the declared length") {
    Name bad([](const BitString&) { return BitString("101"); }, [](Unary k) { return k; });
    CHECK_THROWS_AS(bad.query(BitString("1")), contract_error);
    CHECK_NOTHROW(bad.query(BitString("111")));
}

TEST_CASE("pad_name: constant-1 oracle to n+4") {
    Name raw([](const BitString&) { return BitString("1"); }, [](Unary) { return 1; });
    Name padded = pad_name(raw, [](Unary k) { return k + 4; });
    for (Unary k = 0; k <= 12; ++k)
        CHECK(padded.query(BitString::ones(k)).size() == k + 4);
    // decoding invariance: dyadic payloads survive padding
    Dyadic v(3, 1);
    Name enc([v](const BitString&) { return encode_dyadic(v); },
             [v](Unary) { return encode_dyadic(v).size(); });
    Name pd = pad_name(enc, [v](Unary) { return encode_dyadic(v).size() + 6; });
    CHECK(decode_dyadic(pd.query(BitString("1"))) == v);
    // padding twice with the same target is idempotent
    Name pd2 = pad_name(pd, [v](Unary) { return encode_dyadic(v).size() + 6; });
    CHECK(pd2.query(BitString("1")) == pd.query(BitString("1")));
    // target below raw length errors
    Name bad = pad_name(enc, [](Unary) { return 1; });
    CHECK_THROWS_AS(bad.query(BitString("1")), contract_error);
}

TEST_CASE("pair_names recovers components and lengths add up") {
    Name a = echo_ones();
    Name b([](const BitString& q) { return BitString::zeros(q.size() + 2); },
           [](Unary k) { return k + 2; });
    Name p = pair_names(a, b);
    for (Unary k = 0; k <= 10; ++k) {
        BitString q = BitString::ones(k);
        auto [x, y] = unpair(p.query(q));
        CHECK(x == a.query(q));
        CHECK(y == b.query(q));
        CHECK(p.declared_length(k) >= a.declared_length(k));
        CHECK(p.declared_length(k) >= b.declared_length(k));
    }
}

TEST_CASE("name invariants checker") {
    CHECK(check_name_invariants(echo_ones()).ok);
    Name inconsistent([](const BitString& a) { return BitString::ones(a.size() % 3); },
                      [](Unary k) { return k % 3; });
    // length-monotone fails: declared length decreases
    CHECK_FALSE(check_name_invariants(inconsistent).ok);
}

TEST_CASE("eval_sop: spec examples") {
    auto id = [](Unary k) { return k; };
    auto plus1 = [](Unary k) { return k + 1; };
    // P = n^2, n = 3 -> 9
    CHECK(SOP::poly({0, 0, 1}).eval(id, 3) == 9);
    // P = l(n^2+5), l(k)=k+1, n=2 -> 10
    CHECK(SOP::apply(SOP::poly({5, 0, 1})).eval(plus1, 2) == 10);
    // P = l(l(n^2+5) + l(l(n)^2)), l = id, n = 1 -> 7
    SOP inner1 = SOP::apply(SOP::poly({5, 0, 1}));
    SOP inner2 = SOP::apply(SOP::mul(SOP::apply(SOP::variable()), SOP::apply(SOP::variable())));
    CHECK(SOP::apply(SOP::add(inner1, inner2)).eval(id, 1) == 7);
}

TEST_CASE("eval_sop monotone in n for monotone l") {
    auto l = [](Unary k) { return 2 * k + 1; };
    std::vector<SOP> polys{SOP::poly({1, 2}), SOP::apply(SOP::poly({0, 1})),
                           SOP::mul(SOP::variable(), SOP::apply(SOP::poly({3, 1}))),
                           SOP::add(SOP::constant(7), SOP::apply(SOP::apply(SOP::variable())))};
    for (const auto& P : polys)
        for (Unary n = 0; n + 1 <= 12; ++n) CHECK(P.eval(l, n) <= P.eval(l, n + 1));
}

TEST_CASE("check_query_bound: counting and monotonicity") {
    Trace t;
    // empty trace satisfies every bound
    CHECK(check_query_bound(t, SOP::constant(0), [](Unary k) { return k; }, 5).ok);
    t.append(4, 2, "a");
    t.append(6, 3, "a");
    auto rep = check_query_bound(t, SOP::constant(5), [](Unary k) { return k; }, 1);
    CHECK(rep.ok);
    CHECK(rep.total_queries == 2);
    CHECK(rep.total_answer_bits == 5);
    CHECK(rep.worst_answer_len == 3);
    CHECK_FALSE(check_query_bound(t, SOP::constant(4), [](Unary k) { return k; }, 1).ok);
    // enlarging P never flips true -> false
    for (long c = 5; c <= 40; c += 7)
        CHECK(check_query_bound(t, SOP::constant(c), [](Unary k) { return k; }, 1).ok);
}

TEST_CASE("exponential bound checker") {
    Trace t;
    for (int i = 0; i < 1000; ++i) t.append(3, 1, "grid");
    auto l = [](Unary k) { return k + 2; };
    // 2^{1*l(n+1)+0} with n = 8: 2^11 = 2048 >= 1000
    CHECK(check_exponential_bound(t, 1, 1, 0, l, 8).ok);
    // 2^{1*l(1+1)} = 16 < 1000
    CHECK_FALSE(check_exponential_bound(t, 1, 1, 0, l, 1).ok);
}

TEST_CASE("trace budget raises budget_error") {
    Trace t;
    t.set_budget(3);
    t.append(1, 1, "x");
    t.append(1, 1, "x");
    t.append(1, 1, "x");
    CHECK_THROWS_AS(t.append(1, 1, "x"), budget_error);
}

TEST_CASE("trace jsonl export") {
    Trace t;
    t.append(4, 2, "int");
    std::string line = t.to_jsonl();
    CHECK(line.find("\"query_len\":4") != std::string::npos);
    CHECK(line.find("\"tag\":\"int\"") != std::string::npos);
}
