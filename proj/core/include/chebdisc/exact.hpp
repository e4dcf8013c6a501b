#pragma once

#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "chebdisc/scaled_real.hpp"

namespace chebdisc {

using Rational = mpq_class;

// t_n(x, ncap): degree n, support {0, ..., ncap-1}. ncap is the second
// argument of t_n(x, N+1), so ncap = N + 1.
struct PolyParams {
    int n = 0;
    int ncap = 1;
    Rational x{0};
};

struct ExactValue {
    Rational value;
};

// Soft cap on ncap, 512 unless CHEBDISC_MAX_NCAP is set. Exceeding it only
// warns (once per process) since cost grows quickly, not correctness.
int soft_ncap_cap();

// Throws ParameterError unless 0 <= n < ncap.
void validate(const PolyParams& p);

// Terminating Hahn-type sum.
ExactValue eval_exact(const PolyParams& p);

// n-th forward difference of binom(y, n) binom(y - ncap, n), an independent path.
ExactValue eval_difference(const PolyParams& p);

// Coefficients c_0..c_n of t_n(x, ncap) as a polynomial in x.
std::vector<Rational> exact_polynomial(int n, int ncap);

// ncap(ncap^2 - 1)...(ncap^2 - n^2) / (2n + 1)
Rational orthogonality_norm(int n, int ncap);

// sum_x t_n t_m - delta_{nm} norm_n over x = 0..ncap-1; zero when correct.
ExactValue orthogonality_residual(int n, int m, int ncap);

// t_n(x) - (-1)^n t_n(ncap - 1 - x); zero when correct.
ExactValue symmetry_residual(const PolyParams& p);

ScaledReal to_scaled(const Rational& q);
ScaledReal eval_scaled(const PolyParams& p);

// Accepts "7", "-3/4", "0.125", "-2.5e-1".
Rational parse_rational(std::string_view text);

}  // namespace chebdisc
