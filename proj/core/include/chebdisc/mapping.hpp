#pragma once

#include <utility>

#include "chebdisc/regime.hpp"
#include "chebdisc/saddle.hpp"

namespace chebdisc {

struct MappingConstants {
    double eta = 0.0;    // meaningful only for a >= 0
    double gamma = 0.0;
    double residual = 0.0;  // re-substitution into the equation not used to fix gamma
    std::pair<double, double> bracket{0.0, 0.0};
    Regime regime = Regime::Monotone;
};

// 2a ln((eta - sqrt(D))/(eta + sqrt(D))) - sqrt(D), D = eta^2 + 4 a eta; eta <= -4a.
double k_of_eta(double a, double eta);

// 2a(2 atan(sqrt(-eta^2 - 4a eta)/(-eta)) - pi) - sqrt(-eta^2 - 4a eta); -4a <= eta < 0.
double neg_i_g_of_eta(double a, double eta);

// Imaginary-part target of the phase at the complex saddle; a_minus <= a <= 1/2.
double q_of_a(double a, double b);

// Re f(t, w) = b ln|1-t| + (1-b) ln|t| + a ln|w| - a ln|1-w| + b ln|1-(1-t)w|.
// On the real segment 0 < t, w < 1 this is the real phase itself.
double real_phase(double a, double b, cplx t, cplx w);

// f(t, w) with principal logarithms and a ln w - a ln(w - 1).
cplx complex_phase(double a, double b, cplx t, cplx w);

// psi(u) = a ln u - a ln(u - 1) + eta u, principal logarithms.
cplx complex_psi(double a, double eta, cplx u);

// (eta, gamma) for 0 <= a <= 1/2, 0 < b < 1.
MappingConstants solve_eta_gamma(double a, double b);

// gamma for a < 0 (eta is not defined there and is reported as 0).
MappingConstants gamma_negative_a(double a, double b);

}  // namespace chebdisc
