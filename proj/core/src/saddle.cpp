#include "chebdisc/saddle.hpp"

#include <cmath>
#include <string>
#include <tuple>

#include "chebdisc/errors.hpp"

namespace chebdisc {

std::string_view to_string(Regime r) {
    switch (r) {
        case Regime::NegativeA: return "NegativeA";
        case Regime::Monotone: return "Monotone";
        case Regime::Transition: return "Transition";
        case Regime::Oscillatory: return "Oscillatory";
        case Regime::Reflected: return "Reflected";
    }
    return "?";
}

namespace {

void check_b(double b) {
    if (!(b > 0.0 && b < 1.0)) throw ParameterError("b must lie in (0, 1), got " + std::to_string(b));
}

}  // namespace

std::pair<double, double> critical_as(double b) {
    check_b(b);
    double root = std::sqrt(1.0 - b * b);
    double a_minus = b * b / (2.0 * (1.0 + root));
    return {a_minus, 1.0 - a_minus};
}

double default_delta(std::optional<int> N) {
    if (!N) return 0.02;
    if (*N <= 0) throw ParameterError("N must be positive");
    return 0.5 * std::pow(static_cast<double>(*N), -2.0 / 3.0);
}

Regime classify_regime(const ScaledParams& p, double delta) {
    check_b(p.b);
    if (!std::isfinite(p.a)) throw ParameterError("a must be finite");
    if (p.a > 0.5) return Regime::Reflected;
    if (p.a < 0.0) return Regime::NegativeA;
    double a_minus = critical_as(p.b).first;
    if (std::fabs(p.a - a_minus) < delta) return Regime::Transition;
    return p.a < a_minus ? Regime::Monotone : Regime::Oscillatory;
}

Regime classify_regime(const ScaledParams& p) { return classify_regime(p, default_delta(p.N)); }

SaddleData saddles(const ScaledParams& p) {
    const double a = p.a, b = p.b;
    check_b(b);
    if (!(a < 1.0)) throw ParameterError("saddles require a < 1");
    SaddleData sd;
    std::tie(sd.a_minus, sd.a_plus) = critical_as(b);
    sd.regime = classify_regime(p);

    const double rad = b * b - 4.0 * a + 4.0 * a * a;
    sd.s = std::sqrt(cplx(rad, 0.0));
    const cplx s = sd.s;
    const double den_t = 2.0 * (1.0 - a) * (1.0 + b);
    sd.t_plus = (2.0 - 2.0 * a - b * b + b * s) / den_t;
    sd.t_minus = (2.0 - 2.0 * a - b * b - b * s) / den_t;
    if (rad >= 0.0) {
        // Real saddles: w_minus -> 0 as a -> 0, so use the cancellation-free form.
        sd.w_minus = 2.0 * a * (1.0 - a) / (b * (b + s));
        sd.w_plus = 1.0 - sd.w_minus;
    } else {
        sd.w_plus = (b + s) / (2.0 * b);
        sd.w_minus = (b - s) / (2.0 * b);
    }
    return sd;
}

cplx t0_plus(cplx w, double b) {
    check_b(b);
    if (w == cplx(0.0, 0.0)) throw DomainError("t0_plus: pole at w = 0");
    const cplx root = std::sqrt(1.0 + 4.0 * b * b * (w - 1.0) * w);
    const cplx direct_num = 2.0 * w - 1.0 + root;
    const cplx alt_den = root + 1.0 - 2.0 * w;
    // direct_num * alt_den = 4 w (1-w)(1-b^2); pick whichever side avoids cancellation.
    if (std::abs(alt_den) >= std::abs(direct_num)) {
        return 2.0 * (1.0 - w) * (1.0 - b) / alt_den;
    }
    return direct_num / (2.0 * (1.0 + b) * w);
}

std::pair<cplx, cplx> u_saddles(double a, double eta) {
    if (eta == 0.0) throw DomainError("u_saddles: eta = 0");
    const double disc = eta * eta + 4.0 * a * eta;
    const cplx root = std::sqrt(cplx(disc, 0.0));
    cplx u_minus = (eta - root) / (2.0 * eta);
    if (disc < 0.0) return {(eta + root) / (2.0 * eta), u_minus};
    // Real case: u+ -> 0 as a -> 0; (eta + root)/(2 eta) = -2a/(eta - root).
    return {-2.0 * a / (eta - root), u_minus};
}

void attach_u_saddles(SaddleData& sd, double a, double eta) {
    auto [up, um] = u_saddles(a, eta);
    sd.u_plus = up;
    sd.u_minus = um;
}

}  // namespace chebdisc
