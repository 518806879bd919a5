#pragma once

#include <string>
#include <vector>

#include "lpreps/funcspec.hpp"

namespace lpreps::corpus {

// The shared test functions on [0,1]: zero, the constant one, chi_[0,1/2],
// x, x^2/2, the unit hat max{0, 1-2|x-1/2|}, its antiderivative, and the
// alternating-sign oscillators f_m.

inline FunctionSpec zero() {
    return FunctionSpec(1, {{Box::interval(Dyadic(0), Dyadic(1)), Poly2()}});
}

inline FunctionSpec one() {
    return FunctionSpec(1, {{Box::interval(Dyadic(0), Dyadic(1)), Poly2::constant(1)}});
}

inline FunctionSpec chi_half() {
    return FunctionSpec(1, {{Box::interval(Dyadic(0), Dyadic(1, 1)), Poly2::constant(1)},
                            {Box::interval(Dyadic(1, 1), Dyadic(1)), Poly2()}});
}

inline FunctionSpec identity() {
    return FunctionSpec(
        1, {{Box::interval(Dyadic(0), Dyadic(1)), Poly2({{Rational(0)}, {Rational(1)}})}});
}

inline FunctionSpec xsq_half() {
    return FunctionSpec(1, {{Box::interval(Dyadic(0), Dyadic(1)),
                             Poly2({{Rational(0)}, {Rational(0)}, {Rational(1, 2)}})}});
}

// max{0, 1 - 2|x - 1/2|}: rises with slope 2 on [0,1/2], falls on [1/2,1].
inline FunctionSpec hat() {
    return FunctionSpec(1, {{Box::interval(Dyadic(0), Dyadic(1, 1)),
                             Poly2({{Rational(0)}, {Rational(2)}})},
                            {Box::interval(Dyadic(1, 1), Dyadic(1)),
                             Poly2({{Rational(2)}, {Rational(-2)}})}});
}

// Antiderivative of hat: x^2 on [0,1/2], -x^2 + 2x - 1/2 on [1/2,1].
inline FunctionSpec hat_antiderivative() {
    return FunctionSpec(1, {{Box::interval(Dyadic(0), Dyadic(1, 1)),
                             Poly2({{Rational(0)}, {Rational(0)}, {Rational(1)}})},
                            {Box::interval(Dyadic(1, 1), Dyadic(1)),
                             Poly2({{Rational(-1, 2)}, {Rational(2)}, {Rational(-1)}})}});
}

// A hat of height h on [a,b] (slopes +-2h/(b-a)), zero elsewhere on [0,1].
FunctionSpec hat_on(const Dyadic& a, const Dyadic& b, const Dyadic& h);

// f_m(x) = (-1)^{min{k : k 2^-m >= x}}: alternating -1/+1 on 2^m cells.
inline FunctionSpec oscillator(int m) {
    std::vector<Piece> pieces;
    for (int k = 0; k < (1 << m); ++k) {
        Rational v = k % 2 == 0 ? -1 : 1;
        pieces.push_back({Box::interval(Dyadic(k, m), Dyadic(k + 1, m)), Poly2::constant(v)});
    }
    return FunctionSpec(1, std::move(pieces));
}

struct Entry {
    std::string name;
    FunctionSpec spec;
};

// zero, one, chi, x, x^2/2, hat, hat-antiderivative, oscillators m = 1..max_osc.
std::vector<Entry> standard(int max_osc = 6);

} // namespace lpreps::corpus
