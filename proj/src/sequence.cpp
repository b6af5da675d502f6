#include "horadam/sequence.hpp"

#include <utility>

#include "horadam/error.hpp"

namespace horadam {

namespace {

void require_valid(const Rational& p, const Rational& q)
{
    if (q.is_zero())
        throw Error(ErrorKind::zero_q, "q = 0");
    if ((p * p - Rational(4) * q).is_zero())
        throw Error(ErrorKind::zero_discriminant, "p^2 - 4q = 0 for p = " + p.str() + ", q = " + q.str());
}

// (u_n, u_{n+1}) by fast doubling:
//   u_{2j}   = u_j * (2*u_{j+1} - p*u_j)
//   u_{2j+1} = u_{j+1}^2 - q*u_j^2
std::pair<Rational, Rational> lucas_pair(const Rational& p, const Rational& q, std::uint64_t n)
{
    Rational u0;
    Rational u1(1);
    int bit = 63;
    while (bit >= 0 && ((n >> bit) & 1U) == 0)
        --bit;
    for (; bit >= 0; --bit) {
        Rational even = u0 * (Rational(2) * u1 - p * u0);
        Rational odd = u1 * u1 - q * u0 * u0;
        if ((n >> bit) & 1U) {
            u1 = p * odd - q * even;
            u0 = std::move(odd);
        } else {
            u0 = std::move(even);
            u1 = std::move(odd);
        }
    }
    return {u0, u1};
}

std::uint64_t magnitude(std::int64_t n)
{
    return n < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
}

} // namespace

std::string_view to_string(SeqKind kind) noexcept
{
    switch (kind) {
    case SeqKind::W: return "W";
    case SeqKind::U: return "U";
    case SeqKind::V: return "V";
    }
    return "W";
}

std::optional<SeqKind> parse_seq_kind(std::string_view text) noexcept
{
    if (text == "W" || text == "w")
        return SeqKind::W;
    if (text == "U" || text == "u")
        return SeqKind::U;
    if (text == "V" || text == "v")
        return SeqKind::V;
    return std::nullopt;
}

HoradamParams::HoradamParams(Rational a, Rational b, Rational p, Rational q)
    : a_(std::move(a)),
      b_(std::move(b)),
      p_(std::move(p)),
      q_(std::move(q)),
      disc_((require_valid(p_, q_), p_ * p_ - Rational(4) * q_)),
      e_w_(p_ * a_ * b_ - q_ * a_ * a_ - b_ * b_),
      alpha_(Quadratic(p_ / Rational(2), Rational(1, 2), disc_)),
      beta_(Quadratic(p_ / Rational(2), Rational(-1, 2), disc_)),
      A_(Quadratic::from_rational(b_, disc_) - beta_ * a_),
      B_(Quadratic::from_rational(b_, disc_) - alpha_ * a_)
{
}

HoradamParams HoradamParams::lucas_u(const Rational& p, const Rational& q)
{
    return HoradamParams(Rational(0), Rational(1), p, q);
}

HoradamParams HoradamParams::lucas_v(const Rational& p, const Rational& q)
{
    return HoradamParams(Rational(2), p, p, q);
}

HoradamParams HoradamParams::of_kind(SeqKind kind, const Rational& a, const Rational& b, const Rational& p,
                                     const Rational& q)
{
    switch (kind) {
    case SeqKind::U: return lucas_u(p, q);
    case SeqKind::V: return lucas_v(p, q);
    case SeqKind::W: break;
    }
    return HoradamParams(a, b, p, q);
}

bool HoradamParams::has_dominant_root() const
{
    return disc_.sign() > 0 && p_.sign() > 0;
}

bool HoradamParams::matches(SeqKind kind) const
{
    switch (kind) {
    case SeqKind::U: return a_ == Rational(0) && b_ == Rational(1);
    case SeqKind::V: return a_ == Rational(2) && b_ == p_;
    case SeqKind::W: return true;
    }
    return true;
}

Rational term(const HoradamParams& params, std::int64_t n)
{
    const Rational& a = params.a();
    const Rational& b = params.b();
    const Rational& p = params.p();
    const Rational& q = params.q();
    const std::uint64_t m = magnitude(n);
    auto [u_m, u_next] = lucas_pair(p, q, m);
    // w_m = a*u_{m+1} + (b - p*a)*u_m
    Rational w_m = a * u_next + (b - p * a) * u_m;
    if (n >= 0)
        return w_m;
    const Rational v_m = Rational(2) * u_next - p * u_m;
    return (a * v_m - w_m) / pow(q, static_cast<std::int64_t>(m));
}

Rational lucas_u(const Rational& p, const Rational& q, std::int64_t n)
{
    require_valid(p, q);
    const std::uint64_t m = magnitude(n);
    Rational u = lucas_pair(p, q, m).first;
    if (n >= 0)
        return u;
    return -u / pow(q, static_cast<std::int64_t>(m));
}

Rational lucas_v(const Rational& p, const Rational& q, std::int64_t n)
{
    require_valid(p, q);
    const std::uint64_t m = magnitude(n);
    auto [u_m, u_next] = lucas_pair(p, q, m);
    Rational v = Rational(2) * u_next - p * u_m;
    if (n >= 0)
        return v;
    return v / pow(q, static_cast<std::int64_t>(m));
}

Rational product_identity_residual(const HoradamParams& params, std::int64_t n, std::int64_t r, std::int64_t s)
{
    const Rational lhs = term(params, n) * term(params, n + r + s) - term(params, n + r) * term(params, n + s);
    const Rational rhs =
        params.e_w() * pow(params.q(), n) * lucas_u(params.p(), params.q(), r) * lucas_u(params.p(), params.q(), s);
    return lhs - rhs;
}

std::int64_t nonvanishing_horizon(const HoradamParams& params)
{
    if (params.disc().sign() <= 0)
        throw Error(ErrorKind::precondition, "nonvanishing horizon needs disc > 0");
    if (params.p().sign() <= 0)
        throw Error(ErrorKind::precondition, "nonvanishing horizon needs p > 0");
    if (params.e_w().is_zero())
        throw Error(ErrorKind::precondition, "nonvanishing horizon needs e_w != 0");

    // w_n != 0 once ratio^n > threshold, with ratio = alpha^2/beta^2 > 1 and
    // threshold = B^2/A^2; A and B are nonzero because e_w = -A*B.
    const Quadratic ratio = params.alpha() * params.alpha() / (params.beta() * params.beta());
    const Quadratic threshold = params.B() * params.B() / (params.A() * params.A());
    auto holds = [&](std::int64_t n) { return sign(pow(ratio, n) - threshold) == Sign::positive; };

    std::int64_t bound = 0;
    if (!holds(0)) {
        std::int64_t lo = 0;
        std::int64_t hi = 1;
        while (!holds(hi)) {
            lo = hi;
            hi *= 2;
        }
        while (hi - lo > 1) {
            const std::int64_t mid = lo + (hi - lo) / 2;
            if (holds(mid))
                hi = mid;
            else
                lo = mid;
        }
        bound = hi;
    }
    while (bound > 0 && !term(params, bound - 1).is_zero())
        --bound;
    return bound;
}

const Rational& TermTable::operator()(std::int64_t n)
{
    if (values_.empty()) {
        first_ = n;
        values_.push_back(term(params_, n));
        values_.push_back(term(params_, n + 1));
    }
    const Rational& p = params_.p();
    const Rational& q = params_.q();
    while (n < first_) {
        values_.push_front((p * values_[0] - values_[1]) / q);
        --first_;
    }
    while (n >= first_ + static_cast<std::int64_t>(values_.size())) {
        const std::size_t size = values_.size();
        values_.push_back(p * values_[size - 1] - q * values_[size - 2]);
    }
    return values_[static_cast<std::size_t>(n - first_)];
}

} // namespace horadam
