#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lpreps/dyadic.hpp"
#include "lpreps/errors.hpp"

namespace lpreps {

// Finite string over {0,1}. The length function l(a) is size().
class BitString {
  public:
    BitString() = default;
    explicit BitString(std::string bits) : bits_(std::move(bits)) { validate(); }

    static BitString ones(Unary n) { return BitString(std::string(static_cast<std::size_t>(n), '1')); }
    static BitString zeros(Unary n) { return BitString(std::string(static_cast<std::size_t>(n), '0')); }

    Unary size() const { return static_cast<Unary>(bits_.size()); }
    bool empty() const { return bits_.empty(); }
    const std::string& str() const { return bits_; }
    char at(std::size_t i) const { return bits_[i]; }
    bool all_zero() const { return bits_.find('1') == std::string::npos; }

    BitString operator+(const BitString& other) const { return BitString(bits_ + other.bits_); }
    friend bool operator==(const BitString& a, const BitString& b) { return a.bits_ == b.bits_; }
    friend bool operator!=(const BitString& a, const BitString& b) { return !(a == b); }
    friend bool operator<(const BitString& a, const BitString& b) { return a.bits_ < b.bits_; }

  private:
    void validate() const {
        for (char c : bits_)
            if (c != '0' && c != '1') throw codec_error("BitString: symbol outside {0,1}");
    }
    std::string bits_;
};

// --- nu_N: positive integers in binary, leading zeros eliminated ------------

BitString encode_nat(const BigInt& n);       // n >= 1
BigInt decode_nat(const BitString& a);       // ignores leading zeros; all-zero -> codec_error

// --- nu_Z: sign bit (1 positive, 0 negative) + nu_N -------------------------

BitString encode_int(const BigInt& z);       // z != 0
BigInt decode_int(const BitString& a);

// --- unary -------------------------------------------------------------------

BitString encode_unary(Unary n);
// Counts leading ones; the remainder must be zero padding.
Unary decode_unary(const BitString& a);

// --- bin: dyadic numbers, digits interleaved with separators ----------------
// Grammar in docs/encoding.md. Trailing zeros are always valid padding, so
// every dyadic has encodings of every sufficient length. The all-zero string
// (including the empty string) is the distinguished encoding of 0.

BitString encode_dyadic(const Dyadic& x);
Dyadic decode_dyadic(const BitString& a);
// Length of the canonical encoding.
Unary dyadic_encoding_length(const Dyadic& x);
// Appends zero padding up to exactly `target` symbols (error if target is too small).
BitString pad_to(const BitString& a, Unary target);

// --- pairing -----------------------------------------------------------------
// <a,b> = dbl(a) + "01" + dbl(b), where dbl doubles each bit. Injective,
// monotone in both argument lengths, projections by one linear scan. A lone
// trailing '0' and trailing "00" chunks act as padding (they extend b by zero
// symbols, which every payload codec here treats as padding).

BitString pair(const BitString& a, const BitString& b);
std::pair<BitString, BitString> unpair(const BitString& c);
BitString pair3(const BitString& a, const BitString& b, const BitString& c);
std::array<BitString, 3> unpair3(const BitString& c);
Unary pair_length(Unary la, Unary lb);  // 2*la + 2*lb + 2

// --- dyadic vectors (bin_d): right-nested pairs ------------------------------

BitString encode_dyadic_vector(const std::vector<Dyadic>& x);
std::vector<Dyadic> decode_dyadic_vector(const BitString& a, std::size_t d);

// --- hex framing for the socket protocol -------------------------------------
// "<decimal length>:<hex nibbles, bits packed MSB-first, zero padded>"

std::string bits_to_hex(const BitString& a);
BitString hex_to_bits(const std::string& line);

} // namespace lpreps
