#include "horadam/quadratic.hpp"

#include <optional>
#include <ostream>

#include "horadam/error.hpp"

namespace horadam {

namespace {

std::optional<Rational> exact_sqrt(const Rational& r)
{
    if (r.sign() < 0)
        return std::nullopt;
    const Integer num = r.num();
    const Integer den = r.den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
        return std::nullopt;
    return Rational(Integer(sqrt(num)), Integer(sqrt(den)));
}

} // namespace

Quadratic::Quadratic(Rational x, Rational y, Rational disc) : x_(std::move(x)), y_(std::move(y)), disc_(std::move(disc))
{
    if (disc_.is_zero())
        throw Error(ErrorKind::zero_discriminant, "quadratic field with disc = 0");
    if (!y_.is_zero()) {
        if (auto root = exact_sqrt(disc_)) {
            x_ += y_ * *root;
            y_ = Rational();
        }
    }
}

Quadratic Quadratic::from_rational(Rational x, Rational disc)
{
    return Quadratic(std::move(x), Rational(), std::move(disc));
}

Quadratic Quadratic::sqrt_of(Rational disc)
{
    return Quadratic(Rational(), Rational(1), std::move(disc));
}

Quadratic Quadratic::conj() const
{
    return Quadratic(x_, -y_, disc_);
}

Rational Quadratic::norm() const
{
    return x_ * x_ - y_ * y_ * disc_;
}

Quadratic Quadratic::inverse() const
{
    if (is_zero())
        throw Error(ErrorKind::division_by_zero, "1 / (" + str() + ")");
    // y != 0 only for non-square disc, where the norm cannot vanish.
    const Rational n = norm();
    return Quadratic(x_ / n, -y_ / n, disc_);
}

void Quadratic::require_same_field(const Quadratic& rhs, const char* op) const
{
    if (disc_ != rhs.disc_)
        throw Error(ErrorKind::mismatched_disc,
                    std::string(op) + " across sqrt(" + disc_.str() + ") and sqrt(" + rhs.disc_.str() + ")");
}

Quadratic& Quadratic::operator+=(const Quadratic& rhs)
{
    require_same_field(rhs, "add");
    x_ += rhs.x_;
    y_ += rhs.y_;
    return *this;
}

Quadratic& Quadratic::operator-=(const Quadratic& rhs)
{
    require_same_field(rhs, "sub");
    x_ -= rhs.x_;
    y_ -= rhs.y_;
    return *this;
}

Quadratic& Quadratic::operator*=(const Quadratic& rhs)
{
    require_same_field(rhs, "mul");
    Rational x = x_ * rhs.x_ + y_ * rhs.y_ * disc_;
    Rational y = x_ * rhs.y_ + y_ * rhs.x_;
    x_ = std::move(x);
    y_ = std::move(y);
    return *this;
}

Quadratic& Quadratic::operator/=(const Quadratic& rhs)
{
    require_same_field(rhs, "div");
    if (rhs.is_zero())
        throw Error(ErrorKind::division_by_zero, "(" + str() + ") / 0");
    return *this *= rhs.inverse();
}

Quadratic& Quadratic::operator+=(const Rational& rhs)
{
    x_ += rhs;
    return *this;
}

Quadratic& Quadratic::operator-=(const Rational& rhs)
{
    x_ -= rhs;
    return *this;
}

Quadratic& Quadratic::operator*=(const Rational& rhs)
{
    x_ *= rhs;
    y_ *= rhs;
    return *this;
}

Quadratic& Quadratic::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw Error(ErrorKind::division_by_zero, "(" + str() + ") / 0");
    x_ /= rhs;
    y_ /= rhs;
    return *this;
}

Quadratic Quadratic::operator-() const
{
    return Quadratic(-x_, -y_, disc_);
}

bool operator==(const Quadratic& lhs, const Quadratic& rhs)
{
    lhs.require_same_field(rhs, "compare");
    return lhs.x_ == rhs.x_ && lhs.y_ == rhs.y_;
}

std::string Quadratic::str() const
{
    return x_.str() + " + " + y_.str() + "*sqrt(" + disc_.str() + ")";
}

Quadratic pow(const Quadratic& base, std::int64_t exp)
{
    if (exp < 0) {
        if (base.is_zero())
            throw Error(ErrorKind::zero_to_negative_power, "(" + base.str() + ")^" + std::to_string(exp));
        return pow(base.inverse(), -exp);
    }
    Quadratic result = Quadratic::from_rational(Rational(1), base.disc());
    Quadratic square = base;
    for (auto e = static_cast<std::uint64_t>(exp); e != 0; e >>= 1) {
        if (e & 1U)
            result *= square;
        if (e > 1)
            square *= square;
    }
    return result;
}

Sign sign(const Quadratic& v)
{
    if (v.disc().sign() < 0)
        throw Error(ErrorKind::nonreal_disc, "sign of " + v.str());
    const int sx = v.x().sign();
    const int sy = v.y().sign();
    auto as_sign = [](int s) { return s < 0 ? Sign::negative : s > 0 ? Sign::positive : Sign::zero; };
    if (sy == 0)
        return as_sign(sx);
    if (sx == 0 || sx == sy)
        return as_sign(sy);
    // Opposite signs: the larger of x^2 and y^2*disc wins. They cannot tie
    // because y != 0 implies disc is not a rational square.
    return v.x() * v.x() > v.y() * v.y() * v.disc() ? as_sign(sx) : as_sign(sy);
}

Quadratic abs(const Quadratic& v)
{
    return sign(v) == Sign::negative ? -v : v;
}

std::ostream& operator<<(std::ostream& os, const Quadratic& value)
{
    return os << value.str();
}

} // namespace horadam
