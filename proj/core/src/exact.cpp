#include "chebdisc/exact.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>

#include "chebdisc/errors.hpp"

namespace chebdisc {

namespace {

constexpr int kDefaultCap = 512;

Rational sign_power(int n) { return (n % 2 == 0) ? Rational(1) : Rational(-1); }

// (start)(start+1)...(start+len-1) over the integers.
mpz_class rising(long start, long len) {
    mpz_class r = 1;
    for (long j = 0; j < len; ++j) r *= start + j;
    return r;
}

// y (y-1) ... (y-n+1)
Rational falling(const Rational& y, int n) {
    Rational r = 1;
    for (int j = 0; j < n; ++j) r *= y - j;
    return r;
}

mpz_class pow10z(long k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return r;
}

}  // namespace

int soft_ncap_cap() {
    if (const char* env = std::getenv("CHEBDISC_MAX_NCAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return kDefaultCap;
}

void validate(const PolyParams& p) {
    if (p.ncap < 1) throw ParameterError("ncap must be positive");
    if (p.n < 0 || p.n >= p.ncap) {
        throw ParameterError("degree n=" + std::to_string(p.n) + " must satisfy 0 <= n < ncap=" +
                             std::to_string(p.ncap));
    }
    static std::atomic<bool> warned{false};
    if (p.ncap > soft_ncap_cap() && !warned.exchange(true)) {
        std::cerr << "warning: ncap=" << p.ncap << " exceeds soft cap " << soft_ncap_cap()
                  << " (set CHEBDISC_MAX_NCAP to silence)\n";
    }
}

ExactValue eval_exact(const PolyParams& p) {
    validate(p);
    const int n = p.n;
    const int ncap = p.ncap;
    Rational term = 1;
    Rational sum = 0;
    for (int k = 0; k <= n; ++k) {
        sum += term;
        if (k == n) break;
        // term_{k+1}/term_k = (k-n)(k-x)(n+1+k) / ((k+1-ncap)(k+1)^2)
        term *= Rational((k - n) * static_cast<long>(n + 1 + k)) * (k - p.x);
        term /= Rational(static_cast<long>(k + 1 - ncap) * (k + 1) * (k + 1));
    }
    Rational pre = sign_power(n) * Rational(rising(ncap - n, n));
    return {pre * sum};
}

ExactValue eval_difference(const PolyParams& p) {
    validate(p);
    const int n = p.n;
    // n! f(y) = [y]_n [y - ncap]_n / n!, so t = sum_j (-1)^{n-j} C(n,j) [y]_n [y-ncap]_n / n!
    mpz_class nfact;
    mpz_fac_ui(nfact.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_class binom = 1;
    Rational sum = 0;
    for (int j = 0; j <= n; ++j) {
        Rational y = p.x + j;
        Rational f = falling(y, n) * falling(y - p.ncap, n);
        Rational term = Rational(binom) * f;
        if ((n - j) % 2 == 0) sum += term; else sum -= term;
        binom = binom * (n - j) / (j + 1);
    }
    return {sum / Rational(nfact)};
}

std::vector<Rational> exact_polynomial(int n, int ncap) {
    validate({n, ncap, Rational(0)});
    // (-x)_k = prod_{j<k} (j - x) built incrementally; coefficient c_k of the
    // Hahn sum multiplies it.
    std::vector<Rational> coeffs(static_cast<size_t>(n) + 1, Rational(0));
    std::vector<Rational> poch{Rational(1)};
    Rational ck = 1;
    for (int k = 0; k <= n; ++k) {
        for (size_t i = 0; i < poch.size(); ++i) coeffs[i] += ck * poch[i];
        if (k == n) break;
        std::vector<Rational> next(poch.size() + 1, Rational(0));
        for (size_t i = 0; i < poch.size(); ++i) {
            next[i] += poch[i] * k;
            next[i + 1] -= poch[i];
        }
        poch = std::move(next);
        ck *= Rational((k - n) * static_cast<long>(n + 1 + k));
        ck /= Rational(static_cast<long>(k + 1 - ncap) * (k + 1) * (k + 1));
    }
    Rational pre = sign_power(n) * Rational(rising(ncap - n, n));
    for (auto& c : coeffs) c *= pre;
    return coeffs;
}

Rational orthogonality_norm(int n, int ncap) {
    mpz_class prod = ncap;
    mpz_class nc2 = mpz_class(ncap) * ncap;
    for (int k = 1; k <= n; ++k) prod *= nc2 - k * k;
    return Rational(prod) / (2 * n + 1);
}

ExactValue orthogonality_residual(int n, int m, int ncap) {
    if (m < 0 || m >= ncap) throw ParameterError("degree m out of range");
    validate({n, ncap, Rational(0)});
    Rational sum = 0;
    for (int x = 0; x < ncap; ++x) {
        sum += eval_exact({n, ncap, Rational(x)}).value * eval_exact({m, ncap, Rational(x)}).value;
    }
    if (n == m) sum -= orthogonality_norm(n, ncap);
    return {sum};
}

ExactValue symmetry_residual(const PolyParams& p) {
    Rational left = eval_exact(p).value;
    Rational right = eval_exact({p.n, p.ncap, Rational(p.ncap - 1) - p.x}).value;
    return {left - sign_power(p.n) * right};
}

ScaledReal to_scaled(const Rational& q) {
    const int s = sgn(q);
    if (s == 0) return {};
    const mpz_class num = abs(q.get_num());
    const mpz_class& den = q.get_den();

    long en = 0, ed = 0;
    double dn = mpz_get_d_2exp(&en, num.get_mpz_t());
    double dd = mpz_get_d_2exp(&ed, den.get_mpz_t());
    double est = std::log10(dn / dd) + static_cast<double>(en - ed) * std::log10(2.0);
    long e = static_cast<long>(std::floor(est));

    Rational m(num, den);
    if (e >= 0) m /= Rational(pow10z(e)); else m *= Rational(pow10z(-e));
    while (m >= 10) { m /= 10; ++e; }
    while (m < 1) { m *= 10; --e; }

    // Round the exact mantissa to the nearest double.
    int bexp = m >= 8 ? 3 : m >= 4 ? 2 : m >= 2 ? 1 : 0;
    Rational t;
    mpq_mul_2exp(t.get_mpq_t(), m.get_mpq_t(), static_cast<unsigned long>(52 - bexp));
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    Rational frac = t - Rational(fl);
    if (frac > Rational(1, 2) || (frac == Rational(1, 2) && mpz_odd_p(fl.get_mpz_t()))) fl += 1;
    double md = std::ldexp(fl.get_d(), bexp - 52);
    return ScaledReal::from_parts(s, md, e);
}

ScaledReal eval_scaled(const PolyParams& p) { return to_scaled(eval_exact(p).value); }

Rational parse_rational(std::string_view text) {
    auto fail = [&]() -> ParameterError {
        return ParameterError("cannot parse '" + std::string(text) + "' as a rational number");
    };
    if (text.empty()) throw fail();
    std::string str(text);
    if (auto slash = str.find('/'); slash != std::string::npos) {
        mpz_class p, q;
        if (p.set_str(str.substr(0, slash), 10) != 0 || q.set_str(str.substr(slash + 1), 10) != 0) throw fail();
        if (q == 0) throw ParameterError("zero denominator in '" + str + "'");
        Rational r(p, q);
        r.canonicalize();
        return r;
    }
    size_t i = 0;
    bool neg = false;
    if (str[i] == '+' || str[i] == '-') neg = str[i++] == '-';
    std::string digits;
    long scale = 0;
    bool seen_digit = false, seen_dot = false;
    for (; i < str.size(); ++i) {
        char c = str[i];
        if (c >= '0' && c <= '9') {
            digits += c;
            seen_digit = true;
            if (seen_dot) --scale;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            break;
        }
    }
    if (!seen_digit) throw fail();
    if (i < str.size()) {
        if (str[i] != 'e' && str[i] != 'E') throw fail();
        std::string ex = str.substr(i + 1);
        if (ex.empty()) throw fail();
        size_t used = 0;
        long ev = 0;
        try {
            ev = std::stol(ex, &used);
        } catch (const std::exception&) {
            throw fail();
        }
        if (used != ex.size() || ev > 100000 || ev < -100000) throw fail();
        scale += ev;
    }
    Rational r(mpz_class(digits, 10));
    if (scale >= 0) r *= Rational(pow10z(scale)); else r /= Rational(pow10z(-scale));
    return neg ? Rational(-r) : r;
}

}  // namespace chebdisc
