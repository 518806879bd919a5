#include "lpreps/corpus.hpp"

namespace lpreps::corpus {

FunctionSpec hat_on(const Dyadic& a, const Dyadic& b, const Dyadic& h) {
    Dyadic mid = Dyadic(1, 1) * (a + b);
    Rational slope = 2 * h.to_rational() / (b - a).to_rational();
    // rising: slope*(x - a); falling: slope*(b - x)
    Poly2 rise({{-slope * a.to_rational()}, {slope}});
    Poly2 fall({{slope * b.to_rational()}, {-slope}});
    std::vector<Piece> pieces;
    if (Dyadic(0) < a) pieces.push_back({Box::interval(Dyadic(0), a), Poly2()});
    pieces.push_back({Box::interval(a, mid), rise});
    pieces.push_back({Box::interval(mid, b), fall});
    if (b < Dyadic(1)) pieces.push_back({Box::interval(b, Dyadic(1)), Poly2()});
    return FunctionSpec(1, std::move(pieces));
}

std::vector<Entry> standard(int max_osc) {
    std::vector<Entry> out{
        {"zero", zero()},
        {"one", one()},
        {"chi", chi_half()},
        {"x", identity()},
        {"xsq2", xsq_half()},
        {"hat", hat()},
        {"hatanti", hat_antiderivative()},
    };
    for (int m = 1; m <= max_osc; ++m)
        out.push_back({"osc" + std::to_string(m), oscillator(m)});
    return out;
}

} // namespace lpreps::corpus
