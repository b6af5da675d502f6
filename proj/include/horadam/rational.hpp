#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace horadam {

using Integer = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator, so equality is structural.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(const Integer& value) : value_(value) {}
    /// Throws Error(division_by_zero) when den == 0.
    Rational(const Integer& num, const Integer& den);

    /// Accepts "num/den" or a bare integer, each with an optional sign.
    static Rational parse(std::string_view text);

    Integer num() const { return value_.get_num(); }
    Integer den() const { return value_.get_den(); }
    int sign() const noexcept { return sgn(value_); }
    bool is_zero() const noexcept { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational abs() const;
    Rational inverse() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    /// "num/den", or just "num" when the denominator is 1.
    std::string str() const;

    const mpq_class& raw() const noexcept { return value_; }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

/// Exact power; negative exponents invert (zero base throws zero_to_negative_power).
Rational pow(const Rational& base, std::int64_t exp);

/// 10^exp as a rational, for any sign of exp.
Rational pow10(std::int64_t exp);

/// Smallest rational of the form j / 10^digits that is >= value.
Rational round_up(const Rational& value, std::int64_t digits);

std::ostream& operator<<(std::ostream& os, const Rational& value);

} // namespace horadam
