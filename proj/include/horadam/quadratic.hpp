#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "horadam/rational.hpp"

namespace horadam {

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// Element x + y*sqrt(disc) of Q(sqrt(disc)).
///
/// disc is fixed per value and never zero. When disc is the square of a
/// rational the radical is folded into x at construction, so y != 0 implies
/// disc is not a rational square. Arithmetic between values with different
/// disc throws mismatched_disc rather than coercing.
class Quadratic {
public:
    Quadratic(Rational x, Rational y, Rational disc);

    /// The rational x embedded in Q(sqrt(disc)).
    static Quadratic from_rational(Rational x, Rational disc);
    /// sqrt(disc) itself.
    static Quadratic sqrt_of(Rational disc);

    const Rational& x() const noexcept { return x_; }
    const Rational& y() const noexcept { return y_; }
    const Rational& disc() const noexcept { return disc_; }

    bool is_zero() const noexcept { return x_.is_zero() && y_.is_zero(); }
    bool is_rational() const noexcept { return y_.is_zero(); }

    Quadratic conj() const;
    /// x^2 - y^2 * disc, which equals v * conj(v).
    Rational norm() const;
    Quadratic inverse() const;

    Quadratic& operator+=(const Quadratic& rhs);
    Quadratic& operator-=(const Quadratic& rhs);
    Quadratic& operator*=(const Quadratic& rhs);
    Quadratic& operator/=(const Quadratic& rhs);
    Quadratic& operator+=(const Rational& rhs);
    Quadratic& operator-=(const Rational& rhs);
    Quadratic& operator*=(const Rational& rhs);
    Quadratic& operator/=(const Rational& rhs);

    friend Quadratic operator+(Quadratic lhs, const Quadratic& rhs) { return lhs += rhs; }
    friend Quadratic operator-(Quadratic lhs, const Quadratic& rhs) { return lhs -= rhs; }
    friend Quadratic operator*(Quadratic lhs, const Quadratic& rhs) { return lhs *= rhs; }
    friend Quadratic operator/(Quadratic lhs, const Quadratic& rhs) { return lhs /= rhs; }
    friend Quadratic operator+(Quadratic lhs, const Rational& rhs) { return lhs += rhs; }
    friend Quadratic operator-(Quadratic lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Quadratic operator*(Quadratic lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Quadratic operator/(Quadratic lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Quadratic operator*(const Rational& lhs, Quadratic rhs) { return rhs *= lhs; }
    Quadratic operator-() const;

    /// Throws mismatched_disc when the fields differ.
    friend bool operator==(const Quadratic& lhs, const Quadratic& rhs);

    /// Fixed text form "x + y*sqrt(D)", each part rendered as a canonical rational.
    std::string str() const;

private:
    void require_same_field(const Quadratic& rhs, const char* op) const;

    Rational x_;
    Rational y_;
    Rational disc_;
};

Quadratic pow(const Quadratic& base, std::int64_t exp);

/// Exact sign in the real embedding with sqrt(disc) > 0; no floating point.
/// Throws nonreal_disc when disc < 0.
Sign sign(const Quadratic& v);

Quadratic abs(const Quadratic& v);

std::ostream& operator<<(std::ostream& os, const Quadratic& value);

} // namespace horadam
