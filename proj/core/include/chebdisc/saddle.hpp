#pragma once

#include <complex>
#include <optional>
#include <utility>

#include "chebdisc/regime.hpp"

namespace chebdisc {

using cplx = std::complex<double>;

// a = x/N, b = n/N. N is only used to size the transition band.
struct ScaledParams {
    double a = 0.0;
    double b = 0.5;
    std::optional<int> N;
};

struct SaddleData {
    cplx t_plus, t_minus, w_plus, w_minus;
    cplx s;  // principal sqrt(b^2 - 4a + 4a^2)
    double a_minus = 0.0, a_plus = 1.0;
    // Filled by attach_u_saddles once eta is known.
    std::optional<cplx> u_plus, u_minus;
    Regime regime = Regime::Monotone;
};

// (a_minus, a_plus) = ((1 - sqrt(1-b^2))/2, (1 + sqrt(1-b^2))/2); 0 < b < 1.
std::pair<double, double> critical_as(double b);

// 0.5 N^{-2/3}, or 0.02 when N is not given.
double default_delta(std::optional<int> N);

Regime classify_regime(const ScaledParams& p, double delta);
Regime classify_regime(const ScaledParams& p);

// Saddle points of the two-variable phase; regime uses default_delta(p.N).
SaddleData saddles(const ScaledParams& p);

// The t-saddle of the phase as a function of w (principal root). w = 0 is a
// pole of the defining formula and is rejected.
cplx t0_plus(cplx w, double b);

// u+- = (eta +- sqrt(eta^2 + 4 a eta)) / (2 eta), principal root.
std::pair<cplx, cplx> u_saddles(double a, double eta);
void attach_u_saddles(SaddleData& sd, double a, double eta);

}  // namespace chebdisc
