#pragma once

#include "chebdisc/scaled_real.hpp"

namespace chebdisc {

// ln Gamma(y) for y > 0; relative accuracy ~1e-15 in the result's magnitude.
double log_gamma(double y);

// sin(pi x) with exact zeros at integers.
double sin_pi(double x);

// 1F1(d; c; z) by direct power series in 384-bit floating point. Oracle only:
// |z| <= 100, c not a nonpositive integer.
double kummer_series(double d, double c, double z);

struct KummerValue {
    ScaledReal M;       // M(x+1, 1, z)
    ScaledReal Mprime;  // d/dz M(x+1, 1, z) = (x+1) M(x+2, 2, z)
};

// Integer first parameter: M(x+1,1,z) = e^z L_x(-z), M' = e^z L_x^{(1)}(-z),
// Laguerre polynomials by three-term recurrence in extended range.
KummerValue kummer_M(int x, double z);

// Leading term of M(aN+1, 1, eta N) for 0 < a < a_minus(b), eta < -4a, N -> inf,
// dominated by the real saddle u+ of a ln u - a ln(1-u) + eta u. Vanishes when aN
// is an integer.
ScaledReal kummer_asym_monotone(double a, double b, double eta, int N);

struct KummerFixedX {
    ScaledReal leading;          // -sin(pi x) Gamma(x+1) / (pi [-N(a+eta)]^{x+1})
    ScaledReal remainder_scale;  // e^{N eta}, the size of what the leading term omits
};

// M(x+1, 1, eta N) for fixed real x >= 0 as N -> inf.
KummerFixedX kummer_asym_fixed_x(double x, double eta, int N);

}  // namespace chebdisc
