#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "lpreps/errors.hpp"

namespace lpreps {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Unary integers (the set omega): the value n stands for the string 1^n.
using Unary = std::int64_t;

// Exact dyadic number num / 2^exp. Canonical form: num odd, or exp == 0.
// Zero is num == 0, exp == 0. All arithmetic is exact.
class Dyadic {
  public:
    Dyadic() : num_(0), exp_(0) {}
    Dyadic(long long n) : num_(n), exp_(0) {}        // NOLINT(google-explicit-constructor)
    Dyadic(BigInt num, std::int64_t exp) : num_(std::move(num)), exp_(exp) {
        if (exp < 0) throw domain_error("Dyadic: negative exponent");
        canonicalize();
    }

    static Dyadic from_rational(const Rational& r);  // throws domain_error if not dyadic
    static bool is_dyadic(const Rational& r);

    const BigInt& numerator() const { return num_; }
    std::int64_t exponent() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational to_rational() const;
    double to_double() const;  // diagnostics only; never used in core math

    Dyadic operator-() const { return Dyadic(-num_, exp_, nocanon{}); }
    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.num_ == b.num_ && a.exp_ == b.exp_;  // canonical, so syntactic
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return compare(a, b) >= 0; }
    static int compare(const Dyadic& a, const Dyadic& b);

    Dyadic abs() const { return num_ < 0 ? -*this : *this; }

    // 2^k (k may be negative).
    static Dyadic pow2(std::int64_t k);
    // This value times 2^k.
    Dyadic scaled(std::int64_t k) const;

    // Nearest multiple of 2^-k (ties toward zero). |round_to_grid(k) - *this| <= 2^-(k+1).
    Dyadic round_to_grid(std::int64_t k) const;

    // Textual form "m/2^k" (canonical).
    std::string to_literal() const;
    // Accepts "m", "m/2^k" and "m/q" with q a power of two.
    static Dyadic parse_literal(const std::string& s);

  private:
    struct nocanon {};
    Dyadic(BigInt num, std::int64_t exp, nocanon) : num_(std::move(num)), exp_(exp) {}
    void canonicalize();

    BigInt num_;
    std::int64_t exp_;
};

Dyadic min(const Dyadic& a, const Dyadic& b);
Dyadic max(const Dyadic& a, const Dyadic& b);

// Axis-parallel box with dyadic corners, lower_i <= upper_i enforced.
class Box {
  public:
    Box() = default;
    Box(std::vector<Dyadic> lower, std::vector<Dyadic> upper);
    static Box interval(const Dyadic& a, const Dyadic& b) { return Box({a}, {b}); }
    // Smallest box with corners x and y (componentwise min/max).
    static Box hull(const std::vector<Dyadic>& x, const std::vector<Dyadic>& y);

    std::size_t dim() const { return lower_.size(); }
    const std::vector<Dyadic>& lower() const { return lower_; }
    const std::vector<Dyadic>& upper() const { return upper_; }
    const Dyadic& lower(std::size_t i) const { return lower_[i]; }
    const Dyadic& upper(std::size_t i) const { return upper_[i]; }

    Rational volume() const;
    bool is_degenerate() const;  // some edge has zero length
    bool contains(const std::vector<Dyadic>& x) const;
    // Componentwise intersection; empty optional if disjoint (touching edges allowed).
    static bool intersect(const Box& a, const Box& b, Box* out);

    friend bool operator==(const Box& a, const Box& b) {
        return a.lower_ == b.lower_ && a.upper_ == b.upper_;
    }

  private:
    std::vector<Dyadic> lower_, upper_;
};

// Nearest dyadic on the grid 2^-k (|error| <= 2^-(k+1)).
Dyadic round_rational_to_grid(const Rational& v, std::int64_t k);

// ceil(lb(x)) for a positive rational: least k with x <= 2^k.
std::int64_t ceil_lb(const Rational& x);
// floor(lb(x)) for a positive rational: greatest k with 2^k <= x.
std::int64_t floor_lb(const Rational& x);

// r < 2^k / r <= 2^k comparisons without constructing huge powers.
int compare_pow2(const Rational& r, std::int64_t k);

std::string to_string(const Rational& r);

} // namespace lpreps
