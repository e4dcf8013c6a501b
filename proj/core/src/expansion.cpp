#include "chebdisc/expansion.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

#include "chebdisc/errors.hpp"
#include "chebdisc/mapping.hpp"
#include "chebdisc/special.hpp"

namespace chebdisc {

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

void check_nN(int n, int N) {
    if (N < 2) throw ParameterError("N must be at least 2");
    if (n < 1 || n >= N) {
        throw ParameterError("asymptotics need 1 <= n < N (got n=" + std::to_string(n) + ", N=" + std::to_string(N) +
                             ")");
    }
}

// t(1-t)[1-(1-t)w] times 2
cplx t_factor(cplx t, cplx w) { return 2.0 * t * (1.0 - t) * (1.0 - (1.0 - t) * w); }

// ln Gamma(n+N+2) - ln Gamma(n+1) - ln Gamma(N-n+1)
double log_binomial_prefactor(int n, int N) {
    return log_gamma(n + N + 2.0) - log_gamma(n + 1.0) - log_gamma(N - n + 1.0);
}

int parity_sign(int n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace

double h0_saddle_negative(double a, double b) {
    if (!(a < 0.0)) throw ParameterError("h0_saddle_negative requires a < 0");
    const SaddleData sd = saddles({a, b, std::nullopt});
    const double t = sd.t_minus.real();
    const double w = sd.w_minus.real();
    const double s = sd.s.real();
    const double inner = a * w * t_factor(t, w).real() / ((1.0 - w) * b * s);
    return std::sqrt(inner);
}

std::pair<cplx, cplx> h0_saddle_positive(double a, double b, double eta) {
    if (!(a >= 0.0 && a <= 0.5)) throw ParameterError("h0_saddle_positive requires 0 <= a <= 1/2");
    if (!(eta < 0.0)) throw ParameterError("h0_saddle_positive requires eta < 0");
    const SaddleData sd = saddles({a, b, std::nullopt});
    if (sd.s == cplx(0.0, 0.0)) throw DomainError("h0_saddle_positive: saddles coalesce (a = a_minus)");
    const cplx root_d = std::sqrt(cplx(eta * eta + 4.0 * a * eta, 0.0));
    const cplx scale = (root_d / sd.s) * (1.0 - a) * (-eta) / (b * b * b);
    auto [up, um] = u_saddles(a, eta);

    // (u- - 1)/(w+ - 1) = u+/w-, written without the a/a cancellation.
    const cplx pre_minus = -b * (b + sd.s) / ((eta - root_d) * (1.0 - a));
    const cplx pre_plus = um / sd.w_plus;
    (void)up;
    const cplx h_at_um = pre_minus * std::sqrt(t_factor(sd.t_plus, sd.w_plus) * scale);
    const cplx h_at_up = pre_plus * std::sqrt(t_factor(sd.t_minus, sd.w_minus) * scale);
    return {h_at_um, h_at_up};
}

cplx h0_numeric(double a, double b, double eta, SaddleTag which) {
    const SaddleData sd = saddles({a, b, std::nullopt});
    const cplx s = sd.s;
    auto dt_dtau = [&](cplx w) {
        const cplx t = t0_plus(w, b);
        return std::sqrt(t_factor(t, w) / std::sqrt(1.0 + 4.0 * b * b * (w - 1.0) * w));
    };
    const double b3 = b * b * b;

    if (which == SaddleTag::NegativeA) {
        if (!(a < 0.0)) throw ParameterError("NegativeA saddle requires a < 0");
        const cplx w = sd.w_minus;
        const cplx dw_du = std::sqrt((1.0 - a) * (1.0 - 2.0 * a) / (b3 * s));
        return a / (w - 1.0) * dw_du * dt_dtau(w);
    }

    if (!(a > 0.0 && a < 0.5)) throw ParameterError("Kummer saddles require 0 < a < 1/2 for h0_numeric");
    const cplx root_d = std::sqrt(cplx(eta * eta + 4.0 * a * eta, 0.0));
    const cplx dw_du = std::sqrt((-eta) * root_d * (1.0 - a) * (1.0 - 2.0 * a) / (b3 * s));
    const cplx u_plus = (eta + root_d) / (2.0 * eta);
    const cplx u_minus = (eta - root_d) / (2.0 * eta);
    const cplx w = which == SaddleTag::UPlus ? sd.w_minus : sd.w_plus;
    const cplx u = which == SaddleTag::UPlus ? u_plus : u_minus;
    return (u - 1.0) / (w - 1.0) * dw_du * dt_dtau(w);
}

cplx h0_numeric(double a, double b, SaddleTag which) {
    if (which == SaddleTag::NegativeA) return h0_numeric(a, b, 0.0, which);
    return h0_numeric(a, b, solve_eta_gamma(a, b).eta, which);
}

std::pair<double, double> leading_coeffs(double a, double b, double eta) {
    if (a < 0.0) return {kSqrtPi * h0_saddle_negative(a, b), 0.0};
    auto [h_um, h_up] = h0_saddle_positive(a, b, eta);
    auto [up, um] = u_saddles(a, eta);
    const cplx gap = um - up;
    if (std::abs(gap) < 1e-10) throw DomainError("leading_coeffs: u saddles coalesce");
    const cplx a0 = (um * h_up - up * h_um) / gap;
    const cplx b0 = (h_um - h_up) / gap;
    return {kSqrtPi * a0.real(), kSqrtPi * b0.real()};
}

ExpansionResult asymptotic_value(int n, int N, const Rational& x, std::optional<double> delta) {
    check_nN(n, N);
    const double a = Rational(x / N).get_d();
    const double b = static_cast<double>(n) / N;
    const double band = delta.value_or(default_delta(N));
    const Regime regime = classify_regime({a, b, N}, band);

    if (regime == Regime::Reflected) {
        ExpansionResult r = asymptotic_value(n, N, Rational(N) - x, delta);
        if (n % 2 != 0) {
            r.value = -r.value;
            r.prefactor = -r.prefactor;
        }
        r.regime = Regime::Reflected;
        return r;
    }
    if (regime == Regime::Transition) {
        throw RegimeRefusal("a=" + std::to_string(a) + " is within " + std::to_string(band) +
                            " of a_minus(b); no expansion is claimed in the transition band");
    }

    ExpansionResult r;
    r.regime = regime;
    r.evaluated_regime = regime;
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(N));
    const int sgn = parity_sign(n);
    double lp = log_binomial_prefactor(n, N);

    if (regime == Regime::NegativeA) {
        const double xd = x.get_d();
        const MappingConstants mc = gamma_negative_a(a, b);
        r.gamma = mc.gamma;
        lp += -xd * std::log(static_cast<double>(N)) + N * mc.gamma - log_gamma(1.0 - xd);
        r.prefactor = ScaledReal::from_log(sgn, lp);
        r.c0 = leading_coeffs(a, b, 0.0).first;
        r.value = r.prefactor * ScaledReal::from_double(r.c0 * inv_sqrt_n);
        r.envelope = r.value.abs();
        return r;
    }

    if (x.get_den() != 1) throw ParameterError("the Kummer expansion needs integer x for 0 <= x <= N/2");
    const int xi = static_cast<int>(x.get_num().get_si());
    const MappingConstants mc = solve_eta_gamma(a, b);
    r.eta = mc.eta;
    r.gamma = mc.gamma;
    std::tie(r.c0, r.d0) = leading_coeffs(a, b, mc.eta);
    const KummerValue km = kummer_M(xi, mc.eta * N);
    r.M = km.M;
    r.Mprime = km.Mprime;
    r.prefactor = ScaledReal::from_log(sgn, lp + N * mc.gamma);
    const ScaledReal c0 = ScaledReal::from_double(r.c0);
    const ScaledReal d0 = ScaledReal::from_double(r.d0);
    const ScaledReal scale = ScaledReal::from_double(inv_sqrt_n);
    r.value = r.prefactor * (km.M * c0 + km.Mprime * d0) * scale;
    r.envelope = r.prefactor.abs() * ((km.M * c0).abs() + (km.Mprime * d0).abs()) * scale;
    return r;
}

ExpansionResult asymptotic_fixed_x(int n, int N, const Rational& x) {
    check_nN(n, N);
    const double xd = x.get_d();
    const double limit = std::pow(static_cast<double>(N), 0.25);
    if (std::fabs(xd) > limit) {
        throw RegimeRefusal("|x| exceeds N^(1/4); use asymptotic_value for x proportional to N");
    }
    const double ln_n = std::log(static_cast<double>(N));
    const double ln_deg = std::log(static_cast<double>(n));
    double lp = log_gamma(n + N + 2.0) + xd * ln_n - (2.0 * xd + 2.0) * ln_deg - log_gamma(N + 1.0);
    ExpansionResult r;
    if (xd < 0.0) {
        r.regime = r.evaluated_regime = Regime::NegativeA;
        r.prefactor = ScaledReal::from_log(parity_sign(n), lp - log_gamma(-xd));
        r.value = r.prefactor;
        r.envelope = r.value.abs();
        return r;
    }
    r.regime = r.evaluated_regime = Regime::Monotone;
    lp += log_gamma(xd + 1.0) - std::log(std::numbers::pi);
    r.prefactor = ScaledReal::from_log(-parity_sign(n), lp);
    r.value = r.prefactor * ScaledReal::from_double(sin_pi(xd));
    r.envelope = r.prefactor.abs();
    const double b = static_cast<double>(n) / N;
    const double eta0 = -((1.0 - b) * std::log1p(-b) + (1.0 + b) * std::log1p(b));
    r.remainder_scale = r.envelope * ScaledReal::from_log(1, N * eta0);
    return r;
}

}  // namespace chebdisc
