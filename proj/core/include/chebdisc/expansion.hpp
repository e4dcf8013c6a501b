#pragma once

#include <optional>
#include <utility>

#include "chebdisc/exact.hpp"
#include "chebdisc/regime.hpp"
#include "chebdisc/saddle.hpp"
#include "chebdisc/scaled_real.hpp"

namespace chebdisc {

struct ExpansionResult {
    ScaledReal value;
    // For Reflected results these describe the mirrored point N - x.
    Regime regime = Regime::Monotone;
    Regime evaluated_regime = Regime::Monotone;
    ScaledReal prefactor;  // everything except the Kummer/c0 bracket and 1/sqrt(N)
    double c0 = 0.0;
    double d0 = 0.0;
    ScaledReal M;       // Kummer paths only
    ScaledReal Mprime;  // Kummer paths only
    // |prefactor| (|M c0| + |M' d0|) / sqrt(N); equals |value| on the Gamma path.
    ScaledReal envelope;
    double eta = 0.0;
    double gamma = 0.0;
    // Fixed-x results: size of the exponentially small part the leading term omits.
    ScaledReal remainder_scale;
};

// Closed-form h(0, 0) for a < 0 at the saddle (w_minus, u = a).
double h0_saddle_negative(double a, double b);

// Closed-form h(0, 0) for 0 <= a <= 1/2: first at (w+, u-), second at (w-, u+).
std::pair<cplx, cplx> h0_saddle_positive(double a, double b, double eta);

enum class SaddleTag {
    NegativeA,  // (w_minus, u = a), a < 0
    UPlus,      // (w_minus, u_plus), a >= 0
    UMinus,     // (w_plus, u_minus), a >= 0
};

// Independent path: (u-1)/(w-1) dw/du dt/dtau (u/(w-1) for a < 0) from the
// derivative formulas at the saddle, with t recomputed by t0_plus(w).
cplx h0_numeric(double a, double b, SaddleTag which);
cplx h0_numeric(double a, double b, double eta, SaddleTag which);

// (c0, d0). a < 0: c0 = sqrt(pi) h, d0 = 0 and eta is ignored.
std::pair<double, double> leading_coeffs(double a, double b, double eta);

// Leading-order approximation of t_n(x, N+1). x must be an integer for
// 0 <= x <= N/2 (Kummer path); any rational x < 0 is allowed. delta overrides
// the transition band half-width.
ExpansionResult asymptotic_value(int n, int N, const Rational& x, std::optional<double> delta = std::nullopt);

// Fixed-x formulas, valid for |x| <= N^{1/4}.
ExpansionResult asymptotic_fixed_x(int n, int N, const Rational& x);

}  // namespace chebdisc
