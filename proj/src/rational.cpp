#include "horadam/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "horadam/error.hpp"

namespace horadam {

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw Error(ErrorKind::division_by_zero, num.get_str() + " / 0");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_text = body.substr(0, slash);
    const std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text))
        throw Error(ErrorKind::parse, "not a rational: '" + std::string(text) + "'");
    Integer num(std::string(num_text), 10);
    Integer den(std::string(den_text), 10);
    if (den == 0)
        throw Error(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
    if (negative)
        num = -num;
    return Rational(num, den);
}

Rational Rational::abs() const
{
    return Rational(mpq_class(::abs(value_)));
}

Rational Rational::inverse() const
{
    if (is_zero())
        throw Error(ErrorKind::division_by_zero, "1 / 0");
    return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw Error(ErrorKind::division_by_zero, str() + " / " + rhs.str());
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-value_));
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs)
{
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string Rational::str() const
{
    return value_.get_str();
}

Rational pow(const Rational& base, std::int64_t exp)
{
    if (exp < 0) {
        if (base.is_zero())
            throw Error(ErrorKind::zero_to_negative_power, "0^" + std::to_string(exp));
        return pow(base.inverse(), -exp);
    }
    // Numerator and denominator stay coprime under powers.
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exp));
    return Rational(num, den);
}

Rational pow10(std::int64_t exp)
{
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exp < 0 ? -exp : exp));
    return exp < 0 ? Rational(Integer(1), p) : Rational(p);
}

Rational round_up(const Rational& value, std::int64_t digits)
{
    const Rational scaled = value * pow10(digits);
    Integer ceiling;
    mpz_cdiv_q(ceiling.get_mpz_t(), scaled.raw().get_num_mpz_t(), scaled.raw().get_den_mpz_t());
    return Rational(ceiling) / pow10(digits);
}

std::ostream& operator<<(std::ostream& os, const Rational& value)
{
    return os << value.str();
}

} // namespace horadam
