#pragma once

#include <string_view>

namespace chebdisc {

enum class Regime {
    NegativeA,    // a < 0, Gamma-function expansion
    Monotone,     // 0 <= a <= a_minus - delta, real saddles
    Transition,   // |a - a_minus| < delta, no expansion claimed
    Oscillatory,  // a_minus + delta <= a <= 1/2, complex-conjugate saddles
    Reflected,    // a > 1/2, handled through x -> N - x
};

std::string_view to_string(Regime r);

}  // namespace chebdisc
