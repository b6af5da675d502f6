#include "horadam/decimal.hpp"

#include "horadam/error.hpp"

namespace horadam {

namespace {

Integer ipow10(std::int64_t exp)
{
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exp));
    return p;
}

std::int64_t digit_count(const Integer& v)
{
    return static_cast<std::int64_t>(Integer(abs(v)).get_str().size());
}

Integer floor_div(const Integer& num, const Integer& den)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

// Round a positive integer T (the value times 10^scale) to `precision`
// significant digits, half away from zero. Returns the digits and exponent.
std::pair<Integer, std::int64_t> round_scaled(const Integer& scaled, std::int64_t scale, int precision)
{
    const std::int64_t d = digit_count(scaled);
    std::int64_t exponent = d - 1 - scale;
    if (d <= precision)
        return {scaled * ipow10(precision - d), exponent};
    const Integer unit = ipow10(d - precision);
    Integer q = floor_div(scaled, unit);
    const Integer r = scaled - q * unit;
    if (2 * r >= unit)
        ++q;
    if (q == ipow10(precision)) {
        q /= 10;
        ++exponent;
    }
    return {q, exponent};
}

// floor(|y| * sqrt(disc) * 10^scale) for y != 0 and disc > 0.
Integer floor_radical_scaled(const Rational& y, const Rational& disc, std::int64_t scale)
{
    const Integer yn = abs(y.num());
    Integer z = yn * yn * disc.num() * disc.den();
    Integer c = y.den() * disc.den();
    if (scale >= 0)
        z *= ipow10(2 * scale);
    else
        c *= ipow10(-scale);
    return floor_div(Integer(sqrt(z)), c);
}

// An integer within 2 of v * 10^scale.
Integer approx_scaled(const Quadratic& v, std::int64_t scale)
{
    const Rational xs = v.x() * pow10(scale);
    Integer result = floor_div(xs.num(), xs.den());
    const Integer radical = floor_radical_scaled(v.y(), v.disc(), scale);
    if (v.y().sign() > 0)
        result += radical;
    else
        result -= radical;
    return result;
}

std::int64_t magnitude_guess(const Quadratic& v)
{
    auto log10_estimate = [](const Rational& r) {
        if (r.is_zero())
            return std::int64_t{0};
        return digit_count(r.num()) - digit_count(r.den());
    };
    const std::int64_t ex = log10_estimate(v.x());
    const std::int64_t ey = log10_estimate(v.y()) + log10_estimate(v.disc()) / 2;
    return v.x().is_zero() ? ey : std::max(ex, ey);
}

} // namespace

std::string Decimal::str() const
{
    if (is_zero())
        return "0.0";
    std::string out = negative ? "-" : "";
    const auto len = static_cast<std::int64_t>(digits.size());
    if (exponent >= -6 && exponent < 18) {
        if (exponent >= 0) {
            if (len > exponent + 1) {
                out += digits.substr(0, static_cast<std::size_t>(exponent + 1));
                out += ".";
                out += digits.substr(static_cast<std::size_t>(exponent + 1));
            } else {
                out += digits;
                out += std::string(static_cast<std::size_t>(exponent + 1 - len), '0');
                out += ".0";
            }
        } else {
            out += "0.";
            out += std::string(static_cast<std::size_t>(-exponent - 1), '0');
            out += digits;
        }
        return out;
    }
    out += digits.substr(0, 1);
    out += ".";
    out += len > 1 ? digits.substr(1) : "0";
    out += "e" + std::to_string(exponent);
    return out;
}

Decimal to_decimal(const Rational& value, int precision)
{
    if (precision < 1)
        throw Error(ErrorKind::precondition, "decimal precision must be >= 1");
    Decimal out;
    out.precision = precision;
    if (value.is_zero())
        return out;
    out.negative = value.sign() < 0;
    const Rational a = value.abs();

    std::int64_t e = digit_count(a.num()) - digit_count(a.den());
    while (a >= pow10(e + 1))
        ++e;
    while (a < pow10(e))
        --e;

    const Rational scaled = a * pow10(precision - 1 - e);
    Integer q = floor_div(scaled.num(), scaled.den());
    const Rational rem = scaled - Rational(q);
    const bool exact = rem.is_zero();
    if (!exact && rem * Rational(2) >= Rational(1))
        ++q;
    if (q == ipow10(precision)) {
        q /= 10;
        ++e;
    }
    std::string digits = q.get_str();
    if (exact) {
        while (digits.size() > 1 && digits.back() == '0')
            digits.pop_back();
    }
    out.digits = std::move(digits);
    out.exponent = e;
    return out;
}

Decimal to_decimal(const Quadratic& value, int precision)
{
    if (precision < 1)
        throw Error(ErrorKind::precondition, "decimal precision must be >= 1");
    if (value.is_rational())
        return to_decimal(value.x(), precision);
    if (value.disc().sign() < 0)
        throw Error(ErrorKind::nonreal_disc, "decimal rendering of " + value.str());

    const bool negative = sign(value) == Sign::negative;
    const Quadratic a = negative ? -value : value;
    const std::int64_t wanted = precision + kGuardDigits;

    // Rescale until the approximation carries enough digits; cancellation
    // between x and y*sqrt(disc) can hide the magnitude from the first guess.
    std::int64_t scale = wanted - magnitude_guess(a);
    Integer scaled = approx_scaled(a, scale);
    for (;;) {
        const std::int64_t d = scaled > 0 ? digit_count(scaled) : 0;
        if (d >= wanted)
            break;
        scale += wanted - d + 1;
        scaled = approx_scaled(a, scale);
    }

    auto [q, exponent] = round_scaled(scaled, scale, precision);
    Decimal out;
    out.negative = negative;
    out.precision = precision;
    out.digits = q.get_str();
    out.exponent = exponent;
    return out;
}

std::pair<Rational, Rational> rational_bounds(const Quadratic& value, int digits)
{
    if (value.is_rational())
        return {value.x(), value.x()};
    if (value.disc().sign() < 0)
        throw Error(ErrorKind::nonreal_disc, "bounds of " + value.str());
    const Rational& y = value.y();
    const Integer y_ceiling = floor_div(abs(y.num()), y.den()) + 1;
    const std::int64_t scale = digits + digit_count(y_ceiling) + 1;
    const Integer unit_den = value.disc().den() * ipow10(scale);
    const Integer root = sqrt(Integer(value.disc().num() * value.disc().den() * ipow10(2 * scale)));
    const Rational root_lo(root, unit_den);
    const Rational root_hi(root + 1, unit_den);
    if (y.sign() > 0)
        return {value.x() + y * root_lo, value.x() + y * root_hi};
    return {value.x() + y * root_hi, value.x() + y * root_lo};
}

} // namespace horadam
