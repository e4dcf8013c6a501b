#include "chebdisc/mapping.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "chebdisc/errors.hpp"

namespace chebdisc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxBisect = 400;
constexpr double kEtaTol = 1e-14;

double log_abs(cplx z, const char* what) {
    double m = std::abs(z);
    if (m == 0.0) throw DomainError(std::string("log of zero in ") + what);
    return std::log(m);
}

template <class F>
double bisect(F&& f, double lo, double hi) {
    double flo = f(lo);
    for (int it = 0; it < kMaxBisect; ++it) {
        double mid = 0.5 * (lo + hi);
        if (hi - lo <= kEtaTol * std::max(1.0, std::fabs(mid)) || mid == lo || mid == hi) return mid;
        double fm = f(mid);
        if (!std::isfinite(fm)) throw SolverError("non-finite value during bisection");
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    throw SolverError("bisection did not converge");
}

// a ln u - a ln(1-u) + eta u on 0 < u < 1; a = 0 drops the log terms.
double psi_hat(double a, double eta, double u) {
    double v = eta * u;
    if (a != 0.0) v += a * std::log(u) - a * std::log1p(-u);
    return v;
}

}  // namespace

double k_of_eta(double a, double eta) {
    if (a < 0.0) throw ParameterError("k_of_eta requires a >= 0");
    if (eta > -4.0 * a || eta >= 0.0) throw DomainError("k_of_eta requires eta <= -4a and eta < 0");
    double root = std::sqrt(std::max(0.0, eta * eta + 4.0 * a * eta));
    if (a == 0.0) return -root;
    return 2.0 * a * std::log((eta - root) / (eta + root)) - root;
}

double neg_i_g_of_eta(double a, double eta) {
    if (a <= 0.0) throw ParameterError("neg_i_g_of_eta requires a > 0");
    if (eta < -4.0 * a || eta >= 0.0) throw DomainError("neg_i_g_of_eta requires -4a <= eta < 0");
    double r = std::sqrt(std::max(0.0, -eta * eta - 4.0 * a * eta));
    return 2.0 * a * (2.0 * std::atan(r / (-eta)) - kPi) - r;
}

double q_of_a(double a, double b) {
    auto [a_minus, a_plus] = critical_as(b);
    (void)a_plus;
    if (a < a_minus || a > 0.5) throw DomainError("q_of_a requires a_minus(b) <= a <= 1/2");
    double r = std::sqrt(std::max(0.0, 4.0 * a - 4.0 * a * a - b * b));
    return 2.0 * (2.0 * b * std::atan(-r / (2.0 - 2.0 * a + b)) +
                  (1.0 - b) * std::atan(b * r / (2.0 - 2.0 * a - b * b)) + 2.0 * a * std::atan(r / b) -
                  a * kPi);
}

double real_phase(double a, double b, cplx t, cplx w) {
    double v = b * log_abs(1.0 - t, "real_phase") + (1.0 - b) * log_abs(t, "real_phase") +
               b * log_abs(1.0 - (1.0 - t) * w, "real_phase");
    if (a != 0.0) v += a * log_abs(w, "real_phase") - a * log_abs(1.0 - w, "real_phase");
    return v;
}

cplx complex_phase(double a, double b, cplx t, cplx w) {
    cplx v = b * std::log(1.0 - t) + (1.0 - b) * std::log(t) + b * std::log(1.0 - (1.0 - t) * w);
    if (a != 0.0) v += a * std::log(w) - a * std::log(w - 1.0);
    return v;
}

cplx complex_psi(double a, double eta, cplx u) {
    cplx v = eta * u;
    if (a != 0.0) v += a * std::log(u) - a * std::log(u - 1.0);
    return v;
}

MappingConstants solve_eta_gamma(double a, double b) {
    if (!(a >= 0.0)) throw ParameterError("solve_eta_gamma requires a >= 0 (use gamma_negative_a)");
    if (a > 0.5) throw RegimeRefusal("a > 1/2: use the reflection x -> N - x");
    const SaddleData sd = saddles({a, b, std::nullopt});
    MappingConstants mc;

    if (a <= sd.a_minus) {
        mc.regime = Regime::Monotone;
        const double r = real_phase(a, b, sd.t_plus, sd.w_plus) - real_phase(a, b, sd.t_minus, sd.w_minus);
        const double hi = -4.0 * a;
        if (r >= 0.0) {
            // Only at the coalescence point itself (up to rounding).
            mc.eta = hi;
            mc.bracket = {hi, hi};
        } else {
            double offset = std::max(4.0 * a, 1e-3);
            double lo = hi - offset;
            int grow = 0;
            while (k_of_eta(a, lo) >= r) {
                offset *= 2.0;
                lo = hi - offset;
                if (++grow > 200) throw SolverError("could not bracket eta");
            }
            mc.bracket = {lo, hi};
            mc.eta = bisect([&](double e) { return k_of_eta(a, e) - r; }, lo, hi);
        }
        auto [up, um] = u_saddles(a, mc.eta);
        mc.gamma = real_phase(a, b, sd.t_minus, sd.w_minus) - psi_hat(a, mc.eta, up.real());
        // The other saddle pair must give the same gamma.
        double other = real_phase(a, b, sd.t_plus, sd.w_plus) - psi_hat(a, mc.eta, um.real());
        mc.residual = std::fabs(other - mc.gamma);
        return mc;
    }

    mc.regime = Regime::Oscillatory;
    const double q = q_of_a(a, b);
    const double lo = -4.0 * a, hi = 0.0;
    mc.bracket = {lo, hi};
    // neg_i_g runs from -2 pi a at -4a up to 0 at eta -> 0; q lies strictly inside.
    auto g = [&](double e) { return e == hi ? -q : neg_i_g_of_eta(a, e) - q; };
    if (!(neg_i_g_of_eta(a, lo) - q < 0.0)) throw SolverError("q(a) outside the range of -ig(eta)");
    mc.eta = bisect(g, lo, hi);
    auto [up, um] = u_saddles(a, mc.eta);
    (void)up;
    const cplx lhs = complex_phase(a, b, sd.t_plus, sd.w_plus);
    const cplx rhs = complex_psi(a, mc.eta, um);
    mc.gamma = (lhs - rhs).real();
    mc.residual = std::abs(lhs - rhs - mc.gamma);
    return mc;
}

MappingConstants gamma_negative_a(double a, double b) {
    if (!(a < 0.0)) throw ParameterError("gamma_negative_a requires a < 0");
    const SaddleData sd = saddles({a, b, std::nullopt});
    const double t = sd.t_minus.real();
    const double w = sd.w_minus.real();
    auto f_tilde_minus_alog = [&](double tt) {
        // f~(t, w) - a ln(-a) with a ln(-w) - a ln(-a) merged into a ln(w/a).
        return b * std::log(1.0 - tt) + (1.0 - b) * std::log(tt) + a * std::log(w / a) - a * std::log1p(-w) +
               b * std::log(1.0 - (1.0 - tt) * w);
    };
    MappingConstants mc;
    mc.regime = Regime::NegativeA;
    mc.gamma = f_tilde_minus_alog(t) + a;
    // Re-substitute with the t-saddle recomputed from w.
    const double t_alt = t0_plus(cplx(w, 0.0), b).real();
    mc.residual = std::fabs(f_tilde_minus_alog(t_alt) + a - mc.gamma);
    return mc;
}

}  // namespace chebdisc
