#include "chebdisc/scaled_real.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace chebdisc {

namespace {

constexpr long double kLn10 = 2.302585092994045684017991454684364208L;

long double pow10l(std::int64_t k) {
    // Exact for |k| <= 27 in 64-bit long double.
    return std::pow(10.0L, static_cast<long double>(k));
}

}  // namespace

ScaledReal ScaledReal::normalized(int sign, long double m, std::int64_t e) {
    if (sign == 0 || m == 0.0L) return {};
    if (!std::isfinite(m)) throw std::overflow_error("ScaledReal: non-finite mantissa");
    m = std::fabs(m);
    auto k = static_cast<std::int64_t>(std::floor(std::log10(m)));
    if (k != 0) {
        if (k > 0) m /= pow10l(k); else m *= pow10l(-k);
        e += k;
    }
    double md = static_cast<double>(m);
    if (md >= 10.0) { md /= 10.0; ++e; }
    if (md < 1.0) { md *= 10.0; --e; }
    ScaledReal r;
    r.sign_ = sign > 0 ? 1 : -1;
    r.mantissa_ = md;
    r.exp10_ = e;
    return r;
}

ScaledReal ScaledReal::from_double(double v) {
    if (!std::isfinite(v)) throw std::domain_error("ScaledReal: non-finite input");
    if (v == 0.0) return {};
    return normalized(v > 0 ? 1 : -1, static_cast<long double>(v), 0);
}

ScaledReal ScaledReal::from_log(int sign, double ln_abs) {
    if (sign == 0) return {};
    if (!std::isfinite(ln_abs)) {
        if (ln_abs < 0) return {};
        throw std::domain_error("ScaledReal: infinite log magnitude");
    }
    long double l10 = static_cast<long double>(ln_abs) / kLn10;
    auto e = static_cast<std::int64_t>(std::floor(l10));
    long double m = std::pow(10.0L, l10 - static_cast<long double>(e));
    return normalized(sign, m, e);
}

ScaledReal ScaledReal::from_parts(int sign, double mantissa, std::int64_t exp10) {
    if (sign == 0 || mantissa == 0.0) return {};
    return normalized(sign, static_cast<long double>(mantissa), exp10);
}

double ScaledReal::log10_abs() const {
    if (sign_ == 0) return -HUGE_VAL;
    return static_cast<double>(exp10_) + std::log10(mantissa_);
}

double ScaledReal::ln_abs() const {
    if (sign_ == 0) return -HUGE_VAL;
    return static_cast<double>(static_cast<long double>(exp10_) * kLn10 + std::log(static_cast<long double>(mantissa_)));
}

double ScaledReal::to_double() const {
    if (sign_ == 0) return 0.0;
    if (exp10_ > 400) return sign_ * HUGE_VAL;
    if (exp10_ < -400) return sign_ * 0.0;
    return static_cast<double>(sign_ * mantissa_ * pow10l(exp10_));
}

std::string ScaledReal::to_string() const {
    if (sign_ == 0) return "0";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, mantissa_, std::chars_format::fixed, 16);
    std::string out = sign_ < 0 ? "-" : "";
    out.append(buf, res.ptr);
    out += "e";
    out += std::to_string(exp10_);
    return out;
}

ScaledReal ScaledReal::abs() const {
    ScaledReal r = *this;
    if (r.sign_ != 0) r.sign_ = 1;
    return r;
}

ScaledReal ScaledReal::operator-() const {
    ScaledReal r = *this;
    r.sign_ = -r.sign_;
    return r;
}

ScaledReal operator*(const ScaledReal& x, const ScaledReal& y) {
    if (x.sign_ == 0 || y.sign_ == 0) return {};
    long double m = static_cast<long double>(x.mantissa_) * y.mantissa_;
    return ScaledReal::normalized(x.sign_ * y.sign_, m, x.exp10_ + y.exp10_);
}

ScaledReal operator/(const ScaledReal& x, const ScaledReal& y) {
    if (y.sign_ == 0) throw std::domain_error("ScaledReal: division by zero");
    if (x.sign_ == 0) return {};
    long double m = static_cast<long double>(x.mantissa_) / y.mantissa_;
    return ScaledReal::normalized(x.sign_ * y.sign_, m, x.exp10_ - y.exp10_);
}

ScaledReal operator+(const ScaledReal& x, const ScaledReal& y) {
    if (x.sign_ == 0) return y;
    if (y.sign_ == 0) return x;
    const ScaledReal& big = x.exp10_ >= y.exp10_ ? x : y;
    const ScaledReal& small = x.exp10_ >= y.exp10_ ? y : x;
    std::int64_t shift = big.exp10_ - small.exp10_;
    if (shift > 25) return big;
    long double m = big.sign_ * static_cast<long double>(big.mantissa_) +
                    small.sign_ * static_cast<long double>(small.mantissa_) / pow10l(shift);
    if (m == 0.0L) return {};
    return ScaledReal::normalized(m > 0 ? 1 : -1, m, big.exp10_);
}

ScaledReal operator-(const ScaledReal& x, const ScaledReal& y) { return x + (-y); }

bool operator<(const ScaledReal& x, const ScaledReal& y) {
    if (x.sign_ != y.sign_) return x.sign_ < y.sign_;
    if (x.sign_ == 0) return false;
    bool mag_less = x.exp10_ != y.exp10_ ? x.exp10_ < y.exp10_ : x.mantissa_ < y.mantissa_;
    bool mag_equal = x.exp10_ == y.exp10_ && x.mantissa_ == y.mantissa_;
    if (mag_equal) return false;
    return x.sign_ > 0 ? mag_less : !mag_less;
}

double ratio(const ScaledReal& x, const ScaledReal& y) {
    if (y.is_zero()) throw std::domain_error("ratio: zero denominator");
    if (x.is_zero()) return 0.0;
    double e = static_cast<double>(x.exp10() - y.exp10());
    return x.mantissa() / y.mantissa() * std::pow(10.0, e);
}

}  // namespace chebdisc
