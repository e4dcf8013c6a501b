#include "chebdisc/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <gmpxx.h>

#include "chebdisc/errors.hpp"
#include "chebdisc/exact.hpp"
#include "chebdisc/mapping.hpp"
#include "chebdisc/saddle.hpp"

namespace chebdisc {

namespace {

// Integer-coefficient multiple (positive factor) of t_n(x, N+1).
class SignOracle {
public:
    SignOracle(int n, int N) {
        std::vector<Rational> poly = exact_polynomial(n, N + 1);
        mpz_class lcm = 1;
        for (const auto& c : poly) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
        coeffs_.reserve(poly.size());
        for (const auto& c : poly) coeffs_.push_back(c.get_num() * (lcm / c.get_den()));
    }

    // sign of t_n(p/q) for q > 0, via sum_k c_k p^k q^{n-k}.
    int sign_at(const Rational& x) const {
        const mpz_class& p = x.get_num();
        const mpz_class& q = x.get_den();
        mpz_class acc = coeffs_.back();
        mpz_class qpow = 1;
        for (size_t k = coeffs_.size() - 1; k-- > 0;) {
            qpow *= q;
            acc = acc * p + coeffs_[k] * qpow;
        }
        return sgn(acc);
    }

private:
    std::vector<mpz_class> coeffs_;
};

struct Bracket {
    Rational lo, hi;
};

}  // namespace

std::vector<double> zeros_exact(int n, int N, int digits) {
    if (N < 1 || n < 1 || n > N) throw ParameterError("zeros_exact requires 1 <= n <= N");
    if (digits < 1 || digits > 15) throw ParameterError("digits must be in [1, 15]");
    const SignOracle oracle(n, N);

    std::vector<Rational> exact_roots;
    std::vector<Bracket> brackets;
    for (int refine = 1; refine <= 20; ++refine) {
        exact_roots.clear();
        brackets.clear();
        const long steps = static_cast<long>(N) << refine;  // probe spacing 2^-refine
        Rational prev_x(0);
        int prev_sign = oracle.sign_at(prev_x);
        bool after_root = false;
        for (long k = 1; k <= steps; ++k) {
            Rational xk(k, 1L << refine);
            xk.canonicalize();
            int sk = oracle.sign_at(xk);
            if (sk == 0) {
                exact_roots.push_back(xk);
                after_root = true;
                continue;
            }
            if (!after_root && prev_sign != 0 && sk != prev_sign) brackets.push_back({prev_x, xk});
            after_root = false;
            prev_x = xk;
            prev_sign = sk;
        }
        if (static_cast<int>(exact_roots.size() + brackets.size()) == n) break;
        if (refine == 20) throw SolverError("could not separate all zeros of t_n");
    }

    const Rational width(mpz_class(1), [&] {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
        return p;
    }());
    std::vector<double> zeros;
    zeros.reserve(static_cast<size_t>(n));
    for (const auto& r : exact_roots) zeros.push_back(r.get_d());
    for (auto br : brackets) {
        int slo = oracle.sign_at(br.lo);
        while (br.hi - br.lo > width) {
            Rational mid = (br.lo + br.hi) / 2;
            int sm = oracle.sign_at(mid);
            if (sm == 0) {
                br.lo = br.hi = mid;
                break;
            }
            if (sm == slo) br.lo = mid; else br.hi = mid;
        }
        zeros.push_back(Rational((br.lo + br.hi) / 2).get_d());
    }
    std::sort(zeros.begin(), zeros.end());
    return zeros;
}

double zero_error_exponent(double a, double b, double eta) {
    auto [a_minus, a_plus] = critical_as(b);
    (void)a_plus;
    if (!(a >= 0.0 && a < a_minus)) throw RegimeRefusal("zero_error_exponent requires 0 <= a < a_minus(b)");
    if (!(eta < -4.0 * a)) throw DomainError("zero_error_exponent requires eta < -4a");
    const double r = std::sqrt(1.0 + 4.0 * a / eta);
    double v = eta * r;
    if (a > 0.0) v += 2.0 * a * std::log((1.0 + r) / (1.0 - r));
    return v;
}

std::vector<ZeroEstimate> zero_estimates(int n, int N) {
    if (N < 2 || n < 1 || n >= N) throw ParameterError("zero_estimates requires 1 <= n < N");
    const double b = static_cast<double>(n) / N;
    const double reach = critical_as(b).first * N;

    auto exponent_for = [&](int index) {
        const double a = static_cast<double>(index - 1) / N;
        const double eta = solve_eta_gamma(a, b).eta;
        return N * zero_error_exponent(a, b, eta);
    };

    std::vector<ZeroEstimate> out;
    out.reserve(static_cast<size_t>(n));
    for (int s = 1; s <= n; ++s) {
        ZeroEstimate z;
        z.s = s;
        const bool small = s - 1 < reach;
        const bool large = n - s < reach;
        if (small && !large) {
            z.kind = ZeroKind::Small;
            z.location = s - 1;
            z.error_exponent = exponent_for(s);
        } else if (large && !small) {
            z.kind = ZeroKind::Large;
            z.location = N - n + s;
            z.error_exponent = exponent_for(n - s + 1);
        } else {
            z.location = std::numeric_limits<double>::quiet_NaN();
        }
        out.push_back(z);
    }
    return out;
}

}  // namespace chebdisc
