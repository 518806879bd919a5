#include "lpreps/dyadic.hpp"

#include <sstream>

namespace lpreps {

namespace {
// x * 2^k for k >= 0, sign-safe.
BigInt shl(const BigInt& x, std::int64_t k) {
    if (x >= 0) return x << static_cast<unsigned>(k);
    return -(BigInt(-x) << static_cast<unsigned>(k));
}
} // namespace

void Dyadic::canonicalize() {
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    while (exp_ > 0 && num_ % 2 == 0) {
        num_ /= 2;
        --exp_;
    }
}

Dyadic Dyadic::from_rational(const Rational& r) {
    BigInt den = boost::multiprecision::denominator(r);
    std::int64_t e = 0;
    while ((den & 1) == 0) {
        den >>= 1;
        ++e;
    }
    if (den != 1) throw domain_error("from_rational: denominator is not a power of two");
    return Dyadic(boost::multiprecision::numerator(r), e);
}

bool Dyadic::is_dyadic(const Rational& r) {
    BigInt den = boost::multiprecision::denominator(r);
    while ((den & 1) == 0) den >>= 1;
    return den == 1;
}

Rational Dyadic::to_rational() const {
    BigInt den = BigInt(1) << static_cast<unsigned>(exp_);
    return Rational(num_, den);
}

double Dyadic::to_double() const { return to_rational().convert_to<double>(); }

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    std::int64_t e = std::max(a.exp_, b.exp_);
    return Dyadic(shl(a.num_, e - a.exp_) + shl(b.num_, e - b.exp_), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
}

int Dyadic::compare(const Dyadic& a, const Dyadic& b) {
    std::int64_t e = std::max(a.exp_, b.exp_);
    BigInt an = shl(a.num_, e - a.exp_);
    BigInt bn = shl(b.num_, e - b.exp_);
    return an < bn ? -1 : (an == bn ? 0 : 1);
}

Dyadic Dyadic::pow2(std::int64_t k) {
    if (k >= 0) return Dyadic(BigInt(1) << static_cast<unsigned>(k), 0);
    return Dyadic(BigInt(1), -k);
}

Dyadic Dyadic::scaled(std::int64_t k) const {
    if (num_ == 0) return Dyadic();
    if (k >= 0) return Dyadic(shl(num_, k), exp_);
    return Dyadic(num_, exp_ - k);
}

Dyadic Dyadic::round_to_grid(std::int64_t k) const {
    if (k < 0) throw domain_error("round_to_grid: negative grid exponent");
    if (exp_ <= k) return *this;  // already on the grid
    // |m| = round(|num| / 2^(exp-k)), ties toward zero; sign reapplied.
    unsigned shift = static_cast<unsigned>(exp_ - k);
    BigInt a = num_ < 0 ? BigInt(-num_) : num_;
    BigInt q = a >> shift;
    BigInt rem = a - (q << shift);
    BigInt half = BigInt(1) << (shift - 1);
    if (rem > half) q += 1;
    if (num_ < 0) q = -q;
    return Dyadic(q, k);
}

std::string Dyadic::to_literal() const {
    std::ostringstream os;
    os << num_ << "/2^" << exp_;
    return os.str();
}

Dyadic Dyadic::parse_literal(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Dyadic(BigInt(s), 0);
        BigInt m(s.substr(0, slash));
        std::string den = s.substr(slash + 1);
        if (den.rfind("2^", 0) == 0) {
            std::int64_t k = std::stoll(den.substr(2));
            if (k < 0) throw codec_error("dyadic literal: negative exponent");
            return Dyadic(m, k);
        }
        BigInt q(den);
        if (q <= 0) throw codec_error("dyadic literal: bad denominator");
        std::int64_t k = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++k;
        }
        if (q != 1) throw codec_error("dyadic literal: denominator not a power of two");
        return Dyadic(m, k);
    } catch (const std::runtime_error& e) {
        throw codec_error(std::string("dyadic literal '") + s + "': " + e.what());
    }
}

Dyadic min(const Dyadic& a, const Dyadic& b) { return a <= b ? a : b; }
Dyadic max(const Dyadic& a, const Dyadic& b) { return a >= b ? a : b; }

Box::Box(std::vector<Dyadic> lower, std::vector<Dyadic> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.size() != upper_.size() || lower_.empty())
        throw domain_error("Box: corner dimension mismatch");
    for (std::size_t i = 0; i < lower_.size(); ++i)
        if (lower_[i] > upper_[i]) throw domain_error("Box: lower > upper");
}

Box Box::hull(const std::vector<Dyadic>& x, const std::vector<Dyadic>& y) {
    if (x.size() != y.size() || x.empty()) throw domain_error("Box::hull: dimension mismatch");
    std::vector<Dyadic> lo, hi;
    lo.reserve(x.size());
    hi.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        lo.push_back(min(x[i], y[i]));
        hi.push_back(max(x[i], y[i]));
    }
    return Box(std::move(lo), std::move(hi));
}

Rational Box::volume() const {
    Rational v = 1;
    for (std::size_t i = 0; i < dim(); ++i) v *= (upper_[i] - lower_[i]).to_rational();
    return v;
}

bool Box::is_degenerate() const {
    for (std::size_t i = 0; i < dim(); ++i)
        if (lower_[i] == upper_[i]) return true;
    return false;
}

bool Box::contains(const std::vector<Dyadic>& x) const {
    if (x.size() != dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i)
        if (x[i] < lower_[i] || x[i] > upper_[i]) return false;
    return true;
}

bool Box::intersect(const Box& a, const Box& b, Box* out) {
    if (a.dim() != b.dim()) throw domain_error("Box::intersect: dimension mismatch");
    std::vector<Dyadic> lo, hi;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Dyadic l = max(a.lower_[i], b.lower_[i]);
        Dyadic h = min(a.upper_[i], b.upper_[i]);
        if (l > h) return false;
        lo.push_back(l);
        hi.push_back(h);
    }
    if (out) *out = Box(std::move(lo), std::move(hi));
    return true;
}

Dyadic round_rational_to_grid(const Rational& v, std::int64_t k) {
    if (k < 0) throw domain_error("round_rational_to_grid: negative grid exponent");
    // m = round(v * 2^k), ties toward zero
    BigInt num = boost::multiprecision::numerator(v);
    BigInt den = boost::multiprecision::denominator(v);
    bool negative = num < 0;
    if (negative) num = -num;
    num <<= static_cast<unsigned>(k);
    BigInt q = num / den, rem = num % den;
    if (2 * rem > den) q += 1;
    if (negative) q = -q;
    return Dyadic(q, k);
}

int compare_pow2(const Rational& r, std::int64_t k) {
    // r ? 2^k  <=>  num ? den * 2^k
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (k >= 0)
        den <<= static_cast<unsigned>(k);
    else
        num = shl(num, -k);
    return num < den ? -1 : (num == den ? 0 : 1);
}

std::int64_t ceil_lb(const Rational& x) {
    if (x <= 0) throw domain_error("ceil_lb: nonpositive argument");
    std::int64_t k = 0;
    if (compare_pow2(x, 0) <= 0) {
        while (compare_pow2(x, k) <= 0) --k;
        return k + 1;
    }
    while (compare_pow2(x, k) > 0) ++k;
    return k;
}

std::int64_t floor_lb(const Rational& x) {
    if (x <= 0) throw domain_error("floor_lb: nonpositive argument");
    std::int64_t c = ceil_lb(x);
    return compare_pow2(x, c) == 0 ? c : c - 1;
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

} // namespace lpreps
