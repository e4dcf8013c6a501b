#pragma once

#include <vector>

namespace chebdisc {

enum class ZeroKind { Small, Large, Uncovered };

struct ZeroEstimate {
    int s = 0;                  // 1-based index in increasing order
    double location = 0.0;      // NaN when uncovered
    double error_exponent = 0.0;  // N * (psi(u-) - psi(u+)) < 0; |zero - location| ~ e^{error_exponent}
    ZeroKind kind = ZeroKind::Uncovered;
};

// All n zeros of t_n(x, N+1) in (0, N), increasing, each bracketed by exact
// sign evaluation and bisected to width 10^-digits.
std::vector<double> zeros_exact(int n, int N, int digits = 12);

// psi(u-) - psi(u+) per unit N, for 0 <= a < a_minus(b).
double zero_error_exponent(double a, double b, double eta);

// One entry per index s = 1..n.
std::vector<ZeroEstimate> zero_estimates(int n, int N);

}  // namespace chebdisc
