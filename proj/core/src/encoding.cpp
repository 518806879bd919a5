#include "lpreps/encoding.hpp"

#include <algorithm>
#include <array>

namespace lpreps {

BitString encode_nat(const BigInt& n) {
    if (n < 1) throw domain_error("encode_nat: argument must be positive");
    std::string bits;
    BigInt v = n;
    while (v > 0) {
        bits.push_back(v % 2 == 1 ? '1' : '0');
        v /= 2;
    }
    std::reverse(bits.begin(), bits.end());
    return BitString(bits);
}

BigInt decode_nat(const BitString& a) {
    BigInt v = 0;
    bool seen = false;
    for (char c : a.str()) {
        if (!seen && c == '0') continue;  // leading zeros eliminated
        seen = true;
        v = v * 2 + (c == '1' ? 1 : 0);
    }
    if (!seen) throw codec_error("decode_nat: no positive value");
    return v;
}

BitString encode_int(const BigInt& z) {
    if (z == 0) throw domain_error("encode_int: zero has no nu_Z encoding");
    std::string s(z > 0 ? "1" : "0");
    return BitString(s) + encode_nat(z > 0 ? z : BigInt(-z));
}

BigInt decode_int(const BitString& a) {
    if (a.empty()) throw codec_error("decode_int: empty string");
    BigInt m = decode_nat(BitString(a.str().substr(1)));
    return a.at(0) == '1' ? m : -m;
}

BitString encode_unary(Unary n) {
    if (n < 0) throw domain_error("encode_unary: negative");
    return BitString::ones(n);
}

Unary decode_unary(const BitString& a) {
    Unary n = 0;
    std::size_t i = 0;
    while (i < a.str().size() && a.at(i) == '1') {
        ++n;
        ++i;
    }
    for (; i < a.str().size(); ++i)
        if (a.at(i) != '0') throw codec_error("decode_unary: ones after padding gap");
    return n;
}

// -----------------------------------------------------------------------------
// bin encoding. See docs/encoding.md for the grammar. Internally a code is a
// digit stream interleaved with separators: '1' = another digit follows, the
// first '0' marks the comma, the second '0' ends the digits; everything after
// is zero padding. digits = sign digit + magnitude digits; the magnitude may
// carry leading zeros only when the comma sits directly after the sign.

namespace {

struct ParsedBin {
    std::string digits;
    std::size_t comma = 0;  // number of digits before the comma
};

ParsedBin parse_bin(const BitString& a) {
    const std::string& c = a.str();
    ParsedBin out;
    bool have_comma = false, ended = false, dangling = false;
    std::size_t i = 0;
    while (i < c.size()) {
        if (ended) {
            if (c[i] != '0') throw codec_error("bin: nonzero symbol after end of digits");
            ++i;
            continue;
        }
        out.digits.push_back(c[i]);
        dangling = false;
        ++i;
        if (i == c.size()) break;
        char sep = c[i];
        ++i;
        if (sep == '1') {
            dangling = true;
            continue;
        }
        if (!have_comma) {
            have_comma = true;
            out.comma = out.digits.size();
        } else {
            ended = true;
        }
    }
    if (dangling) throw codec_error("bin: separator promises a digit that never comes");
    if (!have_comma) out.comma = out.digits.size();
    if (out.digits.size() < 2) throw codec_error("bin: fewer than two digits");
    if (out.comma >= 2 && out.digits[1] != '1')
        throw codec_error("bin: leading zero in integer part");
    if (out.comma < 1) throw codec_error("bin: comma before sign digit");
    return out;
}

} // namespace

Dyadic decode_dyadic(const BitString& a) {
    if (a.all_zero()) return Dyadic();  // distinguished encoding of 0
    ParsedBin p = parse_bin(a);
    BigInt mag = 0;
    bool nonzero = false;
    for (std::size_t i = 1; i < p.digits.size(); ++i) {
        mag = mag * 2 + (p.digits[i] == '1' ? 1 : 0);
        nonzero = nonzero || p.digits[i] == '1';
    }
    if (!nonzero) throw codec_error("bin: no positive value in magnitude");
    std::int64_t n = static_cast<std::int64_t>(p.digits.size() - p.comma);
    if (p.digits[0] == '0') mag = -mag;
    return Dyadic(mag, n);
}

BitString encode_dyadic(const Dyadic& x) {
    if (x.is_zero()) return BitString("00");
    BigInt m = x.numerator() < 0 ? BigInt(-x.numerator()) : x.numerator();
    std::int64_t e = x.exponent();
    std::string numeral = encode_nat(m).str();
    std::string digits(x.numerator() > 0 ? "1" : "0");
    std::size_t comma;
    if (static_cast<std::int64_t>(numeral.size()) > e) {
        // |x| >= 1: comma after the integer digits.
        digits += numeral;
        comma = digits.size() - static_cast<std::size_t>(e);
    } else {
        // |x| < 1: comma after the sign; leading zeros position the magnitude.
        digits += std::string(static_cast<std::size_t>(e) - numeral.size(), '0') + numeral;
        comma = 1;
    }
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        out.push_back(digits[i]);
        if (i + 1 == comma)
            out.push_back('0');
        else if (i + 1 < digits.size())
            out.push_back('1');
    }
    return BitString(out);
}

Unary dyadic_encoding_length(const Dyadic& x) { return encode_dyadic(x).size(); }

BitString pad_to(const BitString& a, Unary target) {
    if (target < a.size()) throw domain_error("pad_to: target below current length");
    return a + BitString::zeros(target - a.size());
}

// -----------------------------------------------------------------------------

namespace {
std::string dbl(const BitString& a) {
    std::string out;
    out.reserve(2 * a.str().size());
    for (char c : a.str()) {
        out.push_back(c);
        out.push_back(c);
    }
    return out;
}
} // namespace

BitString pair(const BitString& a, const BitString& b) {
    return BitString(dbl(a) + "01" + dbl(b));
}

Unary pair_length(Unary la, Unary lb) { return 2 * la + 2 * lb + 2; }

std::pair<BitString, BitString> unpair(const BitString& c) {
    const std::string& s = c.str();
    std::string a, b;
    std::size_t i = 0;
    bool sep = false;
    while (i + 1 < s.size()) {
        char x = s[i], y = s[i + 1];
        if (x == '0' && y == '1') {
            sep = true;
            i += 2;
            break;
        }
        if (x != y) throw codec_error("unpair: misaligned chunk before separator");
        a.push_back(x);
        i += 2;
    }
    if (!sep) throw codec_error("unpair: no separator");
    while (i + 1 < s.size()) {
        char x = s[i], y = s[i + 1];
        if (x != y) throw codec_error("unpair: misaligned chunk in second component");
        b.push_back(x);
        i += 2;
    }
    if (i < s.size() && s[i] != '0') throw codec_error("unpair: dangling one");
    return {BitString(a), BitString(b)};
}

BitString pair3(const BitString& a, const BitString& b, const BitString& c) {
    return pair(a, pair(b, c));
}

std::array<BitString, 3> unpair3(const BitString& c) {
    auto [a, rest] = unpair(c);
    auto [b, d] = unpair(rest);
    return {a, b, d};
}

BitString encode_dyadic_vector(const std::vector<Dyadic>& x) {
    if (x.empty()) throw domain_error("encode_dyadic_vector: empty vector");
    BitString out = encode_dyadic(x.back());
    for (std::size_t i = x.size() - 1; i-- > 0;) out = pair(encode_dyadic(x[i]), out);
    return out;
}

std::vector<Dyadic> decode_dyadic_vector(const BitString& a, std::size_t d) {
    if (d == 0) throw domain_error("decode_dyadic_vector: d == 0");
    std::vector<Dyadic> out;
    BitString rest = a;
    for (std::size_t i = 0; i + 1 < d; ++i) {
        auto [head, tail] = unpair(rest);
        out.push_back(decode_dyadic(head));
        rest = tail;
    }
    out.push_back(decode_dyadic(rest));
    return out;
}

std::string bits_to_hex(const BitString& a) {
    std::string hex;
    const std::string& s = a.str();
    for (std::size_t i = 0; i < s.size(); i += 4) {
        int v = 0;
        for (std::size_t j = 0; j < 4; ++j) v = v * 2 + (i + j < s.size() && s[i + j] == '1');
        hex.push_back("0123456789abcdef"[v]);
    }
    return std::to_string(s.size()) + ":" + hex;
}

BitString hex_to_bits(const std::string& line) {
    auto colon = line.find(':');
    if (colon == std::string::npos) throw codec_error("hex frame: missing ':'");
    std::size_t len = std::stoull(line.substr(0, colon));
    std::string bits;
    for (std::size_t i = colon + 1; i < line.size(); ++i) {
        char c = line[i];
        int v;
        if (c >= '0' && c <= '9')
            v = c - '0';
        else if (c >= 'a' && c <= 'f')
            v = c - 'a' + 10;
        else
            throw codec_error("hex frame: bad nibble");
        for (int j = 3; j >= 0; --j) bits.push_back((v >> j) & 1 ? '1' : '0');
    }
    if (bits.size() < len) throw codec_error("hex frame: length exceeds payload");
    bits.resize(len);
    return BitString(bits);
}

} // namespace lpreps
