#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "chebdisc/errors.hpp"
#include "chebdisc/mapping.hpp"

using namespace chebdisc;

namespace {

double eta0(double b) { return -((1 - b) * std::log(1 - b) + (1 + b) * std::log(1 + b)); }
double gamma0(double b) { return b * std::log(b) + (1 - b) * std::log(1 - b); }

}  // namespace

TEST(Mapping, FrozenSolutions) {
    // 40-digit mpmath solutions of the same equations.
    struct Case { double a, eta, gamma; };
    for (Case c : {Case{0.0001, -0.26163316192837210568, -0.69314263553689621571},
                   Case{0.04, -0.26534257262413253035, -0.69128793018901600337},
                   Case{0.2, -0.28212931425711879261, -0.68289455937252287224},
                   Case{0.4, -0.30909273562120490536, -0.66941284869047981587}}) {
        MappingConstants mc = solve_eta_gamma(c.a, 0.5);
        EXPECT_NEAR(mc.eta, c.eta, 1e-12) << c.a;
        EXPECT_NEAR(mc.gamma, c.gamma, 1e-12) << c.a;
        EXPECT_LT(mc.residual, 1e-12) << c.a;
        EXPECT_EQ(mc.regime, c.a < 0.067 ? Regime::Monotone : Regime::Oscillatory);
    }
}

TEST(Mapping, ZeroLimit) {
    for (double b : {0.2, 0.5, 0.8}) {
        MappingConstants mc = solve_eta_gamma(0.0, b);
        EXPECT_NEAR(mc.eta, eta0(b), 1e-13);
        EXPECT_NEAR(mc.gamma, gamma0(b), 1e-13);
    }
}

TEST(Mapping, SmallALinearTerms) {
    const double b = 0.5, a = 1e-4;
    const double l = std::log(-eta0(b) / (b * b));
    MappingConstants mc = solve_eta_gamma(a, b);
    // Next corrections are O(a^2 ln a)
    EXPECT_NEAR(mc.eta, eta0(b) - 2 * a * l, 1e-6);
    EXPECT_NEAR(mc.gamma, gamma0(b) + a * l, 1e-6);
}

TEST(Mapping, CoalescencePoint) {
    for (double b : {0.3, 0.5, 0.9}) {
        const double am = critical_as(b).first;
        MappingConstants mc = solve_eta_gamma(am, b);
        EXPECT_NEAR(mc.eta, -4 * am, 1e-8) << b;
        EXPECT_NEAR(q_of_a(am, b), -2 * std::numbers::pi * am, 1e-12);
        EXPECT_NEAR(neg_i_g_of_eta(am, -4 * am), -2 * std::numbers::pi * am, 1e-15);
        EXPECT_EQ(k_of_eta(am, -4 * am), 0.0);
    }
}

TEST(Mapping, MonotoneTargetIsNonPositive) {
    const double b = 0.5;
    for (double a = 0.0; a < 0.066; a += 0.005) {
        SaddleData sd = saddles({a, b, std::nullopt});
        double r = real_phase(a, b, sd.t_plus, sd.w_plus) - real_phase(a, b, sd.t_minus, sd.w_minus);
        EXPECT_LE(r, 0.0) << a;
        // k is increasing on eta <= -4a, so the root is unique.
        EXPECT_LT(k_of_eta(a, -4 * a - 0.2), k_of_eta(a, -4 * a - 0.1));
    }
    EXPECT_DOUBLE_EQ(k_of_eta(0.0, -0.7), -0.7);
}

TEST(Mapping, OscillatoryImaginaryParts) {
    const double a = 0.4, b = 0.5;
    SaddleData sd = saddles({a, b, std::nullopt});
    EXPECT_NEAR(real_phase(a, b, sd.t_plus, sd.w_plus), real_phase(a, b, sd.t_minus, sd.w_minus), 1e-15);
    const double q = q_of_a(a, b);
    EXPECT_NEAR(2 * complex_phase(a, b, sd.t_plus, sd.w_plus).imag(), q, 1e-13);
    MappingConstants mc = solve_eta_gamma(a, b);
    auto [up, um] = u_saddles(a, mc.eta);
    const double im = (complex_psi(a, mc.eta, um) - complex_psi(a, mc.eta, up)).imag();
    EXPECT_NEAR(im, q, 1e-12);
    EXPECT_NEAR(neg_i_g_of_eta(a, mc.eta), q, 1e-12);
}

TEST(Mapping, NegativeA) {
    MappingConstants mc = gamma_negative_a(-0.5, 0.5);
    EXPECT_NEAR(mc.gamma, -0.98627369034205118824, 1e-13);
    EXPECT_EQ(mc.regime, Regime::NegativeA);
    EXPECT_LT(mc.residual, 1e-13);
    // Continuous across a = 0.
    EXPECT_NEAR(gamma_negative_a(-1e-6, 0.5).gamma, solve_eta_gamma(1e-6, 0.5).gamma, 1e-4);
    EXPECT_NEAR(gamma_negative_a(-1e-9, 0.3).gamma, gamma0(0.3), 1e-7);
}

TEST(Mapping, Refusals) {
    EXPECT_THROW(solve_eta_gamma(0.6, 0.5), RegimeRefusal);
    EXPECT_THROW(solve_eta_gamma(-0.1, 0.5), ParameterError);
    EXPECT_THROW(gamma_negative_a(0.1, 0.5), ParameterError);
    EXPECT_THROW(q_of_a(0.01, 0.5), DomainError);
    EXPECT_THROW(k_of_eta(0.1, -0.2), DomainError);
}
