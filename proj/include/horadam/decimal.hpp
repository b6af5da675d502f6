#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "horadam/quadratic.hpp"
#include "horadam/rational.hpp"

namespace horadam {

/// A rounded decimal: value = sign * 0.d1d2d3... * 10^(exponent + 1),
/// i.e. the first digit sits at 10^exponent.
struct Decimal {
    bool negative = false;
    std::string digits = "0";  // significant digits, no leading zeros
    int precision = 1;         // requested significant digits
    std::int64_t exponent = 0;

    bool is_zero() const { return digits == "0"; }

    /// Positional form for |value| in [1e-6, 1e18), otherwise "d.ddd" with an
    /// "eN" suffix.
    std::string str() const;
};

/// Working digits kept beyond the requested precision before rounding.
inline constexpr int kGuardDigits = 20;

/// Exact rational rendering: values whose expansion terminates within the
/// requested digits print exactly (trailing zeros trimmed); all others are
/// rounded half away from zero.
Decimal to_decimal(const Rational& value, int precision);

/// Faithful rendering of an element of a real quadratic field: the result is
/// within one unit in the last digit of the exact value. Throws nonreal_disc
/// for disc < 0 and precondition when precision < 1.
Decimal to_decimal(const Quadratic& value, int precision);

/// Rationals lo <= value <= hi with hi - lo <= 10^-digits.
std::pair<Rational, Rational> rational_bounds(const Quadratic& value, int digits);

} // namespace horadam
