#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lpreps/encoding.hpp"

using namespace lpreps;

namespace {

BitString rand_bits(std::mt19937_64& rng, int maxlen) {
    std::uniform_int_distribution<int> len(0, maxlen);
    std::uniform_int_distribution<int> bit(0, 1);
    std::string s;
    int n = len(rng);
    for (int i = 0; i < n; ++i) s.push_back(bit(rng) ? '1' : '0');
    return BitString(s);
}

Dyadic rand_dyadic(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-2000, 2000);
    std::uniform_int_distribution<int> ex(0, 12);
    return Dyadic(BigInt(num(rng)), ex(rng));
}

} // namespace

TEST_CASE("nu_N base cases and examples") {
    CHECK(encode_nat(1) == BitString("1"));
    CHECK(decode_nat(BitString("0011")) == 3);
    CHECK(encode_nat(6) == BitString("110"));
    CHECK_THROWS_AS(decode_nat(BitString("0000")), codec_error);
    CHECK_THROWS_AS(decode_nat(BitString("")), codec_error);
    for (int n = 1; n <= 4096; ++n) CHECK(decode_nat(encode_nat(n)) == n);
}

TEST_CASE("nu_Z sign convention and round trips") {
    CHECK(encode_int(3) == BitString("111"));
    CHECK(encode_int(-1) == BitString("01"));
    for (int z = -8; z <= 8; ++z) {
        if (z == 0) continue;
        CHECK(decode_int(encode_int(z)) == z);
    }
    CHECK_THROWS_AS(encode_int(0), domain_error);
}

TEST_CASE("dyadic arithmetic is exact and canonical") {
    Dyadic half(1, 1), quarter(1, 2), threehalves(3, 1);
    CHECK(half + quarter == Dyadic(3, 2));
    CHECK(threehalves * half == Dyadic(3, 2));
    CHECK(Dyadic(1, 1) == Dyadic(2, 2));  // canonicalization: 2/4 == 1/2 syntactically
    CHECK(Dyadic(1, 1) - Dyadic(1, 1) == Dyadic());
    CHECK(min(half, quarter) == quarter);
    CHECK(max(-half, quarter) == quarter);
    CHECK(Dyadic::compare(half, quarter) > 0);
    CHECK(Dyadic::parse_literal("3/2^1") == threehalves);
    CHECK(Dyadic::parse_literal("3/2") == threehalves);
    CHECK(Dyadic::parse_literal("-5") == Dyadic(-5, 0));
    CHECK(Dyadic::parse_literal("1/4") == quarter);
    CHECK_THROWS_AS(Dyadic::parse_literal("1/3"), codec_error);
    CHECK(Dyadic::from_rational(Rational(3, 8)) == Dyadic(3, 3));
    CHECK_THROWS_AS(Dyadic::from_rational(Rational(1, 3)), domain_error);
}

TEST_CASE("dyadic rounding to grid") {
    // |round - x| <= 2^-(k+1)
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        Dyadic x = rand_dyadic(rng);
        for (int k = 0; k <= 8; ++k) {
            Dyadic r = x.round_to_grid(k);
            CHECK(r.exponent() <= k);
            Rational err = boost::multiprecision::abs((r - x).to_rational());
            CHECK(err * (BigInt(1) << (k + 1)) <= 1);
        }
    }
}

TEST_CASE("bin encoding: spec examples") {
    CHECK(decode_dyadic(BitString("1110")) == Dyadic(1, 0));
    CHECK(encode_dyadic(Dyadic(3, 1)) == BitString("11101"));
    CHECK(encode_dyadic(Dyadic(1, 0)) == BitString("1110"));
    // zero: distinguished all-zero encoding
    CHECK(decode_dyadic(BitString("00")) == Dyadic());
    CHECK(decode_dyadic(BitString("")) == Dyadic());
    CHECK(decode_dyadic(BitString("000000")) == Dyadic());
    CHECK(encode_dyadic(Dyadic()).all_zero());
}

TEST_CASE("bin encoding: small magnitudes use the comma-first form") {
    CHECK(decode_dyadic(encode_dyadic(Dyadic(1, 2))) == Dyadic(1, 2));
    CHECK(decode_dyadic(encode_dyadic(Dyadic(-1, 2))) == Dyadic(-1, 2));
    CHECK(decode_dyadic(encode_dyadic(Dyadic(-3, 5))) == Dyadic(-3, 5));
    // 1/2 = sign '1', fraction "1"
    CHECK(decode_dyadic(encode_dyadic(Dyadic(1, 1))) == Dyadic(1, 1));
}

TEST_CASE("bin encoding: padding invariance and round trip") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        Dyadic x = rand_dyadic(rng);
        BitString e = encode_dyadic(x);
        CHECK(decode_dyadic(e) == x);
        CHECK(decode_dyadic(e + BitString("00")) == x);
        CHECK(decode_dyadic(e + BitString("0")) == x);
        CHECK(decode_dyadic(e + BitString("00000")) == x);
    }
}

TEST_CASE("bin encoding: exhaustive decode/encode consistency up to length 12") {
    // Every string either decodes (and re-encoding its value decodes to the same
    // value) or raises codec_error; canonical encodings round-trip exactly.
    long long decoded = 0;
    for (int len = 0; len <= 12; ++len) {
        for (long long m = 0; m < (1LL << len); ++m) {
            std::string s;
            for (int j = len - 1; j >= 0; --j) s.push_back((m >> j) & 1 ? '1' : '0');
            BitString b(s);
            try {
                Dyadic v = decode_dyadic(b);
                ++decoded;
                CHECK(decode_dyadic(encode_dyadic(v)) == v);
            } catch (const codec_error&) {
            }
        }
    }
    CHECK(decoded > 500);  // the grammar is not vacuous
}

TEST_CASE("malformed bin strings are rejected") {
    CHECK_THROWS_AS(decode_dyadic(BitString("1")), codec_error);     // sign only
    CHECK_THROWS_AS(decode_dyadic(BitString("11")), codec_error);    // dangling separator
    CHECK_THROWS_AS(decode_dyadic(BitString("1101")), codec_error);  // leading zero in integer part
    CHECK_THROWS_AS(decode_dyadic(BitString("111011")), codec_error);  // nonzero after end
}

TEST_CASE("pairing: spec example and round trips") {
    CHECK(pair(BitString("1"), BitString("0")) == BitString("110100"));
    std::mt19937_64 rng(13);
    for (int i = 0; i < 2000; ++i) {
        BitString a = rand_bits(rng, 20), b = rand_bits(rng, 20);
        auto [x, y] = unpair(pair(a, b));
        CHECK(x == a);
        CHECK(y == b);
    }
    auto [a, b, c] = unpair3(pair3(BitString("10"), BitString(""), BitString("111")));
    CHECK(a == BitString("10"));
    CHECK(b == BitString(""));
    CHECK(c == BitString("111"));
}

TEST_CASE("pairing: monotone in both argument lengths") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 500; ++i) {
        BitString a = rand_bits(rng, 64), b = rand_bits(rng, 64);
        Unary base = pair(a, b).size();
        CHECK(pair(a + BitString("1"), b).size() >= base);
        CHECK(pair(a, b + BitString("0")).size() >= base);
        CHECK(base == pair_length(a.size(), b.size()));
    }
}

TEST_CASE("pairing: range is decidable") {
    CHECK_THROWS_AS(unpair(BitString("10")), codec_error);
    CHECK_THROWS_AS(unpair(BitString("")), codec_error);
    CHECK_THROWS_AS(unpair(BitString("1100")), codec_error);   // no separator
    CHECK_THROWS_AS(unpair(BitString("011001")), codec_error); // separator in b
    // padding flows into the second component as zero symbols
    auto [x, y] = unpair(pair(BitString("1"), BitString("")) + BitString("00"));
    CHECK(x == BitString("1"));
    CHECK(y == BitString("0"));
}

TEST_CASE("dyadic vectors: d-fold nesting") {
    std::vector<Dyadic> v{Dyadic(1, 1), Dyadic(-3, 2)};
    CHECK(decode_dyadic_vector(encode_dyadic_vector(v), 2) == v);
    std::vector<Dyadic> w{Dyadic(5, 0)};
    CHECK(decode_dyadic_vector(encode_dyadic_vector(w), 1) == w);
}

TEST_CASE("unary codec") {
    CHECK(encode_unary(4) == BitString("1111"));
    CHECK(decode_unary(BitString("11100")) == 3);
    CHECK(decode_unary(BitString("")) == 0);
    CHECK_THROWS_AS(decode_unary(BitString("1101")), codec_error);
}

TEST_CASE("hex framing round trip") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        BitString a = rand_bits(rng, 40);
        CHECK(hex_to_bits(bits_to_hex(a)) == a);
    }
}
