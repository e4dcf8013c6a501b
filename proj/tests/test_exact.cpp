#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

#include "chebdisc/errors.hpp"
#include "chebdisc/exact.hpp"

using namespace chebdisc;

namespace {

Rational poly_eval(const std::vector<Rational>& c, const Rational& x) {
    Rational acc = 0;
    for (size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc;
}

}  // namespace

TEST(Exact, LowDegreeClosedForms) {
    for (int x = -3; x <= 5; ++x) {
        EXPECT_EQ(eval_exact({0, 3, Rational(x)}).value, 1);
        EXPECT_EQ(eval_exact({1, 3, Rational(x)}).value, 2 * x - 2);
    }
    EXPECT_EQ(eval_exact({1, 3, Rational(0)}).value, -2);
    // t_1(x, ncap) = 2x - (ncap - 1)
    EXPECT_EQ(eval_exact({1, 11, Rational(1, 2)}).value, -9);
}

TEST(Exact, FrozenValues) {
    // Independent Fraction-based evaluation of the same sum.
    EXPECT_EQ(eval_exact({3, 10, Rational(7, 3)}).value, Rational(11648, 27));
    EXPECT_EQ(eval_exact({25, 51, Rational(-25)}).value,
              Rational("-74366977604769479928022993812264203939925116583936000000"));
}

TEST(Exact, DifferenceFormAgrees) {
    std::mt19937 rng(3);
    for (int i = 0; i < 150; ++i) {
        int ncap = std::uniform_int_distribution<int>(1, 40)(rng);
        int n = std::uniform_int_distribution<int>(0, ncap - 1)(rng);
        Rational x(std::uniform_int_distribution<int>(-200, 200)(rng), std::uniform_int_distribution<int>(1, 9)(rng));
        x.canonicalize();
        PolyParams p{n, ncap, x};
        EXPECT_EQ(eval_exact(p).value, eval_difference(p).value) << "n=" << n << " ncap=" << ncap << " x=" << x;
    }
}

TEST(Exact, PolynomialCoefficientsAgree) {
    for (int ncap : {2, 7, 30}) {
        for (int n = 0; n < ncap; n += 3) {
            auto c = exact_polynomial(n, ncap);
            ASSERT_EQ(c.size(), static_cast<size_t>(n + 1));
            for (Rational x : {Rational(0), Rational(5, 2), Rational(-13, 7), Rational(ncap)}) {
                EXPECT_EQ(poly_eval(c, x), eval_exact({n, ncap, x}).value);
            }
        }
    }
}

TEST(Exact, OrthogonalityAndNorm) {
    for (int ncap = 1; ncap <= 12; ++ncap) {
        for (int n = 0; n < ncap; ++n) {
            for (int m = 0; m <= n; ++m) {
                EXPECT_EQ(orthogonality_residual(n, m, ncap).value, 0) << n << ' ' << m << ' ' << ncap;
            }
        }
    }
    EXPECT_EQ(orthogonality_norm(0, 5), 5);
    EXPECT_EQ(orthogonality_norm(1, 3), 8);
}

TEST(Exact, SymmetryUnderReflection) {
    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
        int ncap = std::uniform_int_distribution<int>(1, 60)(rng);
        int n = std::uniform_int_distribution<int>(0, ncap - 1)(rng);
        Rational x(std::uniform_int_distribution<int>(-500, 500)(rng), std::uniform_int_distribution<int>(1, 12)(rng));
        x.canonicalize();
        EXPECT_EQ(symmetry_residual({n, ncap, x}).value, 0);
    }
}

TEST(Exact, RejectsBadDegree) {
    EXPECT_THROW(eval_exact({5, 5, Rational(0)}), ParameterError);
    EXPECT_THROW(eval_exact({-1, 5, Rational(0)}), ParameterError);
    EXPECT_THROW(eval_exact({0, 0, Rational(0)}), ParameterError);
    EXPECT_THROW(orthogonality_residual(1, 4, 4), ParameterError);
}

TEST(Exact, SoftCapFromEnvironment) {
    ::unsetenv("CHEBDISC_MAX_NCAP");
    EXPECT_EQ(soft_ncap_cap(), 512);
    ::setenv("CHEBDISC_MAX_NCAP", "1000", 1);
    EXPECT_EQ(soft_ncap_cap(), 1000);
    ::setenv("CHEBDISC_MAX_NCAP", "junk", 1);
    EXPECT_EQ(soft_ncap_cap(), 512);
    ::unsetenv("CHEBDISC_MAX_NCAP");
    // Over the cap only warns.
    EXPECT_NO_THROW(eval_exact({2, 600, Rational(3)}));
}

TEST(Exact, ScaledMatchesDouble) {
    ScaledReal v = eval_scaled({25, 51, Rational(-25)});
    EXPECT_EQ(v.sign(), -1);
    EXPECT_EQ(v.exp10(), 55);
    EXPECT_DOUBLE_EQ(v.mantissa(), 7.4366977604769479928);
}

TEST(Exact, ParseRational) {
    EXPECT_EQ(parse_rational("7"), 7);
    EXPECT_EQ(parse_rational("-3/4"), Rational(-3, 4));
    EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
    EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
    EXPECT_EQ(parse_rational("-2.5e-1"), Rational(-1, 4));
    EXPECT_EQ(parse_rational("1e3"), 1000);
    EXPECT_THROW(parse_rational(""), ParameterError);
    EXPECT_THROW(parse_rational("1/0"), ParameterError);
    EXPECT_THROW(parse_rational("abc"), ParameterError);
    EXPECT_THROW(parse_rational("1.2.3"), ParameterError);
}
