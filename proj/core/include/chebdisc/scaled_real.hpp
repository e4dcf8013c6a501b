#pragma once

#include <cstdint>
#include <string>

namespace chebdisc {

// sign * mantissa * 10^exp10 with mantissa in [1, 10). Zero has sign 0,
// mantissa 0 and exp10 0. Keeps values like t_n(x, N+1) at N ~ 500 out of
// double overflow.
class ScaledReal {
public:
    ScaledReal() = default;

    static ScaledReal from_double(double v);
    // sign * exp(ln_abs); sign must be -1, 0 or 1.
    static ScaledReal from_log(int sign, double ln_abs);
    static ScaledReal from_parts(int sign, double mantissa, std::int64_t exp10);

    int sign() const { return sign_; }
    double mantissa() const { return mantissa_; }
    std::int64_t exp10() const { return exp10_; }
    bool is_zero() const { return sign_ == 0; }

    double log10_abs() const;
    double ln_abs() const;
    // Overflows to +-inf (or underflows to 0) outside double range.
    double to_double() const;
    // Plain decimal rendering with 17 significant digits, e.g. "-7.4367e+55".
    std::string to_string() const;

    ScaledReal abs() const;
    ScaledReal operator-() const;

    friend ScaledReal operator*(const ScaledReal& x, const ScaledReal& y);
    friend ScaledReal operator/(const ScaledReal& x, const ScaledReal& y);
    friend ScaledReal operator+(const ScaledReal& x, const ScaledReal& y);
    friend ScaledReal operator-(const ScaledReal& x, const ScaledReal& y);
    ScaledReal& operator*=(const ScaledReal& y) { return *this = *this * y; }
    ScaledReal& operator/=(const ScaledReal& y) { return *this = *this / y; }
    ScaledReal& operator+=(const ScaledReal& y) { return *this = *this + y; }

    friend bool operator==(const ScaledReal& x, const ScaledReal& y) = default;
    // Total order on the represented values.
    friend bool operator<(const ScaledReal& x, const ScaledReal& y);

private:
    // Normalizes m (any finite nonzero magnitude) given as long double.
    static ScaledReal normalized(int sign, long double m, std::int64_t e);

    int sign_ = 0;
    double mantissa_ = 0.0;
    std::int64_t exp10_ = 0;
};

// |x / y| as a double; y must be nonzero. Used for relative errors between
// values that individually overflow double.
double ratio(const ScaledReal& x, const ScaledReal& y);

}  // namespace chebdisc
