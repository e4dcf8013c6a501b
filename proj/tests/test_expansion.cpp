#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "chebdisc/errors.hpp"
#include "chebdisc/exact.hpp"
#include "chebdisc/expansion.hpp"
#include "chebdisc/mapping.hpp"

using namespace chebdisc;

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

double rel(cplx x, cplx y) { return std::abs(x - y) / std::abs(y); }

// Second derivative by a 5-point stencil along the real direction.
template <class F>
cplx second_derivative(F&& f, cplx z, double h) {
    return (-f(z + 2.0 * h) + 16.0 * f(z + h) - 30.0 * f(z) + 16.0 * f(z - h) - f(z - 2.0 * h)) / (12.0 * h * h);
}

}  // namespace

TEST(Expansion, FrozenSaddleCoefficients) {
    // mpmath evaluation of the same closed forms.
    auto [hm, hp] = h0_saddle_positive(0.04, 0.5, -0.26534257262413253035);
    EXPECT_NEAR(hm.real(), 0.58409508613533175018, 1e-12);
    EXPECT_NEAR(hp.real(), 0.70967820465999899867, 1e-12);
    auto [c0, d0] = leading_coeffs(0.04, 0.5, -0.26534257262413253035);
    EXPECT_NEAR(c0, 1.32321211172929803850, 1e-12);
    EXPECT_NEAR(d0, -0.35327077198971007868, 1e-12);

    auto [om, op] = h0_saddle_positive(0.4, 0.5, -0.30909273562120490536);
    EXPECT_LT(std::abs(om - cplx(0.71819573103779628456, -0.24755062975617278228)), 1e-12);
    EXPECT_LT(std::abs(op - std::conj(om)), 1e-15);
    auto [oc0, od0] = leading_coeffs(0.4, 0.5, -0.30909273562120490536);
    EXPECT_NEAR(oc0, 1.48767066984165890465, 1e-12);
    EXPECT_NEAR(od0, -0.42940376131962927873, 1e-12);

    EXPECT_NEAR(h0_saddle_negative(-0.5, 0.5), 0.51819256489378697805, 1e-13);
}

TEST(Expansion, ClosedFormMatchesDerivativePath) {
    const double b = 0.5;
    for (double a : {-0.8, -0.3, -0.01}) {
        EXPECT_LT(rel(h0_saddle_negative(a, b), h0_numeric(a, b, SaddleTag::NegativeA)), 1e-10) << a;
    }
    for (double a : {0.005, 0.03, 0.1, 0.3, 0.45}) {
        const double eta = solve_eta_gamma(a, b).eta;
        auto [hm, hp] = h0_saddle_positive(a, b, eta);
        EXPECT_LT(rel(hm, h0_numeric(a, b, eta, SaddleTag::UMinus)), 1e-9) << a;
        EXPECT_LT(rel(hp, h0_numeric(a, b, eta, SaddleTag::UPlus)), 1e-9) << a;
    }
}

// The printed closed forms carry an extra (1-2a) under the root for a > 0 and
// use b^2 - 4a - 4a^2 for a < 0. Both disagree with the derivative path.
TEST(Expansion, PrintedVariantsDisagreeWithOracle) {
    const double b = 0.5;
    const double a = 0.3;
    const double eta = solve_eta_gamma(a, b).eta;
    cplx with_factor = h0_saddle_positive(a, b, eta).second * std::sqrt(1.0 - 2.0 * a);
    EXPECT_GT(rel(with_factor, h0_numeric(a, b, eta, SaddleTag::UPlus)), 0.1);

    const double an = -0.3;
    SaddleData sd = saddles({an, b, std::nullopt});
    const double t = sd.t_minus.real(), w = sd.w_minus.real();
    const double s_typo = std::sqrt(b * b - 4 * an - 4 * an * an);
    const double h_typo = std::sqrt(2 * an * w * t * (1 - t) * (1 - (1 - t) * w) / ((1 - w) * b * s_typo));
    EXPECT_GT(rel(h_typo, h0_numeric(an, b, SaddleTag::NegativeA)), 0.1);
}

TEST(Expansion, MappingDerivativeMatchesPhaseCurvature) {
    const double b = 0.5;
    // Kummer regime: (dw/du)^2 = psi''(u) / phi''(w), phi(w) = f(t0(w), w).
    for (double a : {0.04, 0.3}) {
        const double eta = solve_eta_gamma(a, b).eta;
        SaddleData sd = saddles({a, b, std::nullopt});
        auto [up, um] = u_saddles(a, eta);
        auto phi = [&](cplx w) { return complex_phase(a, b, t0_plus(w, b), w); };
        auto psi = [&](cplx u) { return complex_psi(a, eta, u); };
        cplx ratio = second_derivative(psi, up, 1e-3) / second_derivative(phi, sd.w_minus, 1e-3 * std::abs(sd.w_minus));
        const cplx root_d = std::sqrt(cplx(eta * eta + 4 * a * eta, 0.0));
        cplx formula = (-eta) * root_d * (1 - a) * (1 - 2 * a) / (b * b * b * sd.s);
        EXPECT_LT(rel(ratio, formula), 1e-6) << a;
    }
    // Gamma regime with psi(u) = a ln(-u) - u at u = a.
    const double a = -0.3;
    SaddleData sd = saddles({a, b, std::nullopt});
    auto phi = [&](cplx w) { return cplx(real_phase(a, b, t0_plus(w, b), w), 0.0); };
    cplx curvature = second_derivative(phi, sd.w_minus, 1e-4);
    cplx ratio = (-a / (a * a)) / curvature;
    cplx formula = (1 - a) * (1 - 2 * a) / (b * b * b * sd.s);
    EXPECT_LT(rel(ratio, formula), 1e-6);
}

TEST(Expansion, SmallALimits) {
    for (double b : {0.3, 0.5, 0.7}) {
        const double limit = std::sqrt(2 * (1 - b)) / std::pow(b, 1.5);
        // Corrections are O(a) with coefficients up to ~20.
        const double a = 1e-9;
        const double eta = solve_eta_gamma(a, b).eta;
        EXPECT_NEAR(h0_saddle_positive(a, b, eta).second.real() / (-eta), limit, 1e-6) << b;
        EXPECT_NEAR(h0_saddle_negative(-a, b) / a, limit, 1e-6) << b;
        EXPECT_NEAR(leading_coeffs(-a, b, 0.0).first / -a, -std::sqrt(2 * (1 - b) * std::numbers::pi) / std::pow(b, 1.5),
                    1e-4);
        auto [c0, d0] = leading_coeffs(a, b, eta);
        EXPECT_NEAR(-c0 + a / eta * d0, kSqrtPi * eta * limit, 1e-5) << b;
    }
}

TEST(Expansion, AtZeroUsesRemovableLimit) {
    const double b = 0.5;
    const double eta = solve_eta_gamma(0.0, b).eta;
    auto [hm, hp] = h0_saddle_positive(0.0, b, eta);
    EXPECT_TRUE(std::isfinite(hm.real()));
    EXPECT_TRUE(std::isfinite(hp.real()));
    auto [c0, d0] = leading_coeffs(0.0, b, eta);
    EXPECT_TRUE(std::isfinite(c0) && std::isfinite(d0));
}

TEST(Expansion, GammaRegimeAgainstExact) {
    ExpansionResult r = asymptotic_value(50, 100, Rational(-50));
    EXPECT_EQ(r.regime, Regime::NegativeA);
    ScaledReal exact = eval_scaled({50, 101, Rational(-50)});
    EXPECT_NEAR(ratio(r.value, exact), 1.0, 0.005);
    // Non-integer x is fine on the Gamma path.
    ExpansionResult h = asymptotic_value(50, 100, Rational(-101, 2));
    EXPECT_NEAR(ratio(h.value, eval_scaled({50, 101, Rational(-101, 2)})), 1.0, 0.005);
}

TEST(Expansion, KummerRegimesAgainstExact) {
    for (int x : {4, 40}) {
        ExpansionResult r = asymptotic_value(50, 100, Rational(x));
        ScaledReal exact = eval_scaled({50, 101, Rational(x)});
        EXPECT_LT(ratio((exact - r.value).abs(), r.envelope), 0.01) << x;
    }
}

TEST(Expansion, ReflectionIsExact) {
    for (int x : {60, 80, 96}) {
        for (int n : {49, 50}) {
            ExpansionResult r = asymptotic_value(n, 100, Rational(x));
            ExpansionResult m = asymptotic_value(n, 100, Rational(100 - x));
            EXPECT_EQ(r.regime, Regime::Reflected);
            EXPECT_EQ(r.value, n % 2 == 0 ? m.value : -m.value);
            EXPECT_EQ(r.envelope, m.envelope);
        }
    }
}

TEST(Expansion, RefusalsAndErrors) {
    EXPECT_THROW(asymptotic_value(50, 100, Rational(6)), RegimeRefusal);  // a = 0.06 near a_minus
    EXPECT_THROW(asymptotic_value(50, 100, Rational(7, 2)), ParameterError);
    EXPECT_THROW(asymptotic_value(0, 100, Rational(3)), ParameterError);
    EXPECT_THROW(asymptotic_value(100, 100, Rational(3)), ParameterError);
    EXPECT_THROW(asymptotic_fixed_x(50, 100, Rational(5)), RegimeRefusal);
}

TEST(Expansion, FixedXAgainstExact) {
    for (Rational x : {Rational(1, 2), Rational(-2), Rational(-3, 2)}) {
        ExpansionResult r = asymptotic_fixed_x(200, 400, x);
        EXPECT_NEAR(ratio(r.value, eval_scaled({200, 401, x})), 1.0, 0.05) << x;
    }
    // Integer x: the leading term vanishes and the true value is smaller by
    // e^{N eta0} up to algebraic factors.
    double log_ratio[2];
    for (int i = 0; i < 2; ++i) {
        const int N = 100 * (i + 1);
        ExpansionResult z = asymptotic_fixed_x(N / 2, N, Rational(1));
        EXPECT_TRUE(z.value.is_zero());
        log_ratio[i] = std::log(ratio(eval_scaled({N / 2, N + 1, Rational(1)}), z.envelope));
        EXPECT_NEAR(z.remainder_scale.ln_abs() - z.envelope.ln_abs(), N * -0.26162407, 1e-5);
    }
    EXPECT_NEAR((log_ratio[1] - log_ratio[0]) / 100.0, -0.26162407, 0.03);
}

TEST(Expansion, FixedXNegativeMatchesGammaPath) {
    ExpansionResult fx = asymptotic_fixed_x(50, 100, Rational(-2));
    ExpansionResult gv = asymptotic_value(50, 100, Rational(-2));
    EXPECT_EQ(fx.value.sign(), gv.value.sign());
    EXPECT_NEAR(ratio(fx.value, gv.value), 1.0, 0.1);
}
