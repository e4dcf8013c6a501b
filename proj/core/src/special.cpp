#include "chebdisc/special.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <gmpxx.h>

#include "chebdisc/errors.hpp"
#include "chebdisc/saddle.hpp"

namespace chebdisc {

namespace {

constexpr double kPi = std::numbers::pi;

double stirling(double y) {
    // Bernoulli terms B_{2k} / (2k (2k-1) y^{2k-1}), k = 1..8
    static constexpr double c[] = {1.0 / 12.0,         -1.0 / 360.0,   1.0 / 1260.0,
                                   -1.0 / 1680.0,      1.0 / 1188.0,   -691.0 / 360360.0,
                                   1.0 / 156.0,        -3617.0 / 122400.0};
    double inv = 1.0 / y;
    double inv2 = inv * inv;
    double series = 0.0;
    double p = inv;
    for (double ck : c) {
        series += ck * p;
        p *= inv2;
    }
    return (y - 0.5) * std::log(y) - y + 0.5 * std::log(2.0 * kPi) + series;
}

}  // namespace

double log_gamma(double y) {
    if (!(y > 0.0) || !std::isfinite(y)) {
        throw DomainError("log_gamma requires finite y > 0, got " + std::to_string(y));
    }
    if (y >= 15.0) return stirling(y);
    double prod = 1.0;
    while (y < 15.0) {
        prod *= y;
        y += 1.0;
    }
    return stirling(y) - std::log(prod);
}

double sin_pi(double x) {
    double r = x - 2.0 * std::round(x / 2.0);  // [-1, 1]
    if (r == std::round(r)) return 0.0;
    if (r > 0.5) return std::sin(kPi * (1.0 - r));
    if (r < -0.5) return -std::sin(kPi * (1.0 + r));
    return std::sin(kPi * r);
}

double kummer_series(double d, double c, double z) {
    if (!std::isfinite(d) || !std::isfinite(c) || !std::isfinite(z)) {
        throw ParameterError("kummer_series: non-finite argument");
    }
    if (std::fabs(z) > 100.0) throw ParameterError("kummer_series: |z| > 100 is outside the oracle's range");
    if (c <= 0.0 && c == std::round(c)) throw DomainError("kummer_series: c is a nonpositive integer");

    constexpr unsigned kBits = 384;
    mpf_class md(d, kBits), mc(c, kBits), mz(z, kBits);
    mpf_class term(1, kBits), sum(1, kBits), tol(0, kBits);
    const double reach = std::fabs(z) + std::fabs(d) + std::fabs(c);
    for (long k = 0; k < 200000; ++k) {
        term *= (md + k) * mz;
        term /= (mc + k) * (k + 1);
        sum += term;
        if (term == 0) break;
        if (static_cast<double>(k) > reach) {
            tol = abs(sum) * 1e-40;
            if (abs(term) < tol) break;
        }
    }
    return sum.get_d();
}

KummerValue kummer_M(int x, double z) {
    if (x < 0) throw ParameterError("kummer_M requires x >= 0");
    if (!std::isfinite(z)) throw ParameterError("kummer_M: non-finite z");
    const double y = -z;

    // Runs L_k^{(alpha)}(y) up to k = x with a shared binary scale.
    auto laguerre = [&](double alpha) {
        double prev = 1.0;
        double cur = 1.0 + alpha - y;
        long scale = 0;
        if (x == 0) return ScaledReal::from_double(prev);
        for (int k = 1; k < x; ++k) {
            double next = ((2.0 * k + 1.0 + alpha - y) * cur - (k + alpha) * prev) / (k + 1.0);
            prev = cur;
            cur = next;
            int e = 0;
            std::frexp(cur, &e);
            if (e > 600 || (cur != 0.0 && e < -600)) {
                cur = std::ldexp(cur, -e);
                prev = std::ldexp(prev, -e);
                scale += e;
            }
        }
        return ScaledReal::from_double(cur) * ScaledReal::from_log(1, static_cast<double>(scale) * std::numbers::ln2);
    };

    ScaledReal ez = ScaledReal::from_log(1, z);
    return {ez * laguerre(0.0), ez * laguerre(1.0)};
}

ScaledReal kummer_asym_monotone(double a, double b, double eta, int N) {
    if (N <= 0) throw ParameterError("kummer_asym_monotone requires N > 0");
    auto [a_minus, a_plus] = critical_as(b);
    (void)a_plus;
    if (!(a > 0.0 && a < a_minus && eta < -4.0 * a)) {
        throw RegimeRefusal("kummer_asym_monotone requires 0 < a < a_minus(b) and eta < -4a");
    }
    const double root = std::sqrt(eta * eta + 4.0 * a * eta);
    const double u = -2.0 * a / (eta - root);
    const double psi = a * std::log(u) - a * std::log1p(-u) + eta * u;
    const double psi2 = -a / (u * u) + a / ((1.0 - u) * (1.0 - u));
    const double s = sin_pi(a * N);
    if (s == 0.0) return {};
    const double lg = N * psi - 0.5 * std::log(kPi * N) + std::log(std::fabs(s)) - std::log1p(-u) +
                      0.5 * std::log(2.0 / (-psi2));
    return ScaledReal::from_log(s > 0 ? -1 : 1, lg);
}

KummerFixedX kummer_asym_fixed_x(double x, double eta, int N) {
    if (N <= 0 || x < 0.0) throw ParameterError("kummer_asym_fixed_x requires x >= 0 and N > 0");
    const double a = x / N;
    if (!(a + eta < 0.0)) throw DomainError("kummer_asym_fixed_x requires a + eta < 0");
    KummerFixedX out;
    out.remainder_scale = ScaledReal::from_log(1, N * eta);
    const double s = sin_pi(x);
    if (s != 0.0) {
        const double lg = log_gamma(x + 1.0) - std::log(kPi) - (x + 1.0) * std::log(-N * (a + eta)) +
                          std::log(std::fabs(s));
        out.leading = ScaledReal::from_log(s > 0 ? -1 : 1, lg);
    }
    return out;
}

}  // namespace chebdisc
