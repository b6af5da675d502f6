#include "horadam/oracle.hpp"

#include <cmath>
#include <string>

#include <gmp.h>

#include "horadam/decimal.hpp"
#include "horadam/error.hpp"

namespace horadam::oracle {

namespace {

// Digits kept by the rounded-up powers inside the tail bound.
constexpr std::int64_t kBoundDigits = 60;

Rational signed_unit(int sign, std::int64_t i)
{
    return Rational(sign < 0 && i % 2 != 0 ? -1 : 1);
}

// Upper bound on base^exp for 0 <= base <= 1, kept on a 10^-kBoundDigits grid.
Rational pow_up(const Rational& base, std::int64_t exp)
{
    Rational result(1);
    Rational square = base;
    while (exp > 0) {
        if (exp & 1)
            result = round_up(result * square, kBoundDigits);
        exp >>= 1;
        if (exp > 0)
            square = round_up(square * square, kBoundDigits);
    }
    return result;
}

Rational upper_bound(const Quadratic& value)
{
    return rational_bounds(abs(value), static_cast<int>(kBoundDigits)).second;
}

// log2 |x| for nonzero x, good to double precision at any magnitude.
double log2_abs(const Rational& x)
{
    long num_exp = 0, den_exp = 0;
    const double num = mpz_get_d_2exp(&num_exp, x.raw().get_num_mpz_t());
    const double den = mpz_get_d_2exp(&den_exp, x.raw().get_den_mpz_t());
    return std::log2(std::fabs(num) / den) + static_cast<double>(num_exp - den_exp);
}

Rational quotient(const Rational& num, const Rational& a, std::int64_t ia, const Rational& b, std::int64_t ib)
{
    if (a.is_zero())
        throw Error(ErrorKind::zero_denominator, "direct summand", ia);
    if (b.is_zero())
        throw Error(ErrorKind::zero_denominator, "direct summand", ib);
    return num / (a * b);
}

Integer fibonacci(unsigned long n)
{
    Integer f;
    mpz_fib_ui(f.get_mpz_t(), n);
    return f;
}

} // namespace

Walk::Walk(const HoradamParams& params) : p_(params.p()), q_(params.q()), forward_{params.a(), params.b()} {}

Rational Walk::at(std::int64_t n)
{
    if (n >= 0) {
        while (static_cast<std::int64_t>(forward_.size()) <= n) {
            const std::size_t s = forward_.size();
            forward_.push_back(p_ * forward_[s - 1] - q_ * forward_[s - 2]);
        }
        return forward_[static_cast<std::size_t>(n)];
    }
    // w_{j-1} = (p*w_j - w_{j+1}) / q
    while (static_cast<std::int64_t>(backward_.size()) < -n) {
        const std::size_t s = backward_.size();
        const Rational& next = s == 0 ? forward_[0] : backward_[s - 1];
        const Rational& after = s == 0 ? forward_[1] : (s == 1 ? forward_[0] : backward_[s - 2]);
        backward_.push_back((p_ * next - after) / q_);
    }
    return backward_[static_cast<std::size_t>(-n - 1)];
}

Rational summand(const SumSpec& spec, Walk& w, Walk& u, Walk& v, std::int64_t i)
{
    const std::int64_t m = spec.m, k = spec.k, n = spec.n;
    const Rational& q = spec.params.q();
    auto pair = [&](Walk& seq, const Rational& weight, std::int64_t j1, std::int64_t j2) {
        return quotient(weight, seq.at(j1), j1, seq.at(j2), j2);
    };
    switch (spec.family) {
    case Family::T1_FIN:
    case Family::T1_EQ:
    case Family::C2_INF:
        return pair(w, pow(q, m * (i - k)), m * (i - k) + n, m * (i + k) + n);
    case Family::T8_SIGNED:
        return signed_unit(spec.sign, i) * pair(w, pow(q, m * (i - k)), m * (i - k) + n, m * (i + k) + n);
    case Family::C8_INF:
        return signed_unit(-1, i) * pair(w, pow(q, m * (i - k)), m * (i - k) + n, m * (i + k) + n);
    case Family::C1_FIN:
        return pair(w, pow(q, m * (i - k)), m * i, m * (i + 2 * k));
    case Family::T2_FIN:
    case Family::T2_EQ:
    case Family::C3_INF:
        return pair(w, pow(q, m * (i - k)), m * (i - k), m * (i + k));
    case Family::T3V_FIN:
        return pair(v, pow(q, m * (i - k)), m * (i - k), m * (i + k));
    case Family::T3U_FIN:
        return pair(u, pow(q, m * i), m * i, m * (i + 2 * k));
    case Family::T5_FIN:
    case Family::T5_INF:
        return pair(w, pow(q, m * i), m * i, m * (i + 2 * k));
    case Family::T9_FIN:
        return signed_unit(spec.sign, i) *
               pair(w, pow(q, m * (2 * i - k)), m * (2 * i - k) + n, m * (2 * i + k) + n);
    case Family::C9_INF:
        return pair(w, pow(q, m * (2 * i - k)), m * (2 * i - k) + n, m * (2 * i + k) + n);
    case Family::C9_INF_ALT:
        return signed_unit(-1, i) * pair(w, pow(q, m * (2 * i - k)), m * (2 * i - k) + n, m * (2 * i + k) + n);
    case Family::T11_FIN:
        return signed_unit(spec.sign, i) * pair(w, pow(q, m * (2 * i - k)), m * (2 * i - k), m * (2 * i + k));
    case Family::T11_INF:
        return pair(w, pow(q, m * (2 * i - k)), m * (2 * i - k), m * (2 * i + k));
    case Family::T11_INF_ALT:
        return signed_unit(-1, i) * pair(w, pow(q, m * (2 * i - k)), m * (2 * i - k), m * (2 * i + k));
    }
    throw Error(ErrorKind::bad_parameter, "unknown family");
}

Rational direct_finite(const SumSpec& spec)
{
    if (is_infinite(spec.family))
        throw Error(ErrorKind::bad_parameter, std::string(to_string(spec.family)) + " is an infinite family");
    if (spec.N < 0)
        throw Error(ErrorKind::bad_parameter, "N must be >= 0");
    const Rational& p = spec.params.p();
    const Rational& q = spec.params.q();
    Walk w(spec.params);
    Walk u(HoradamParams::lucas_u(p, q));
    Walk v(HoradamParams::lucas_v(p, q));
    const std::int64_t count = spec.family == Family::T8_SIGNED ? 2 * spec.N : spec.N;
    Rational sum;
    for (std::int64_t i = 1; i <= count; ++i)
        sum += summand(spec, w, u, v, i);
    return sum;
}

InfiniteSum direct_infinite(const SumSpec& spec, const Rational& tol)
{
    if (!is_infinite(spec.family))
        throw Error(ErrorKind::bad_parameter, std::string(to_string(spec.family)) + " is a finite family");
    const HoradamParams& params = spec.params;
    if (spec.m < 1)
        throw Error(ErrorKind::divergent_spec, "m must be >= 1");
    if (params.disc().sign() <= 0 || params.p().sign() <= 0)
        throw Error(ErrorKind::divergent_spec, "needs disc > 0 and p > 0");
    if (params.A().is_zero())
        throw Error(ErrorKind::divergent_spec, "A = 0, no dominant term");
    if (tol.sign() <= 0)
        throw Error(ErrorKind::precondition, "tolerance must be positive");

    const std::int64_t m = spec.m, k = spec.k;
    const bool doubled = spec.family == Family::C9_INF || spec.family == Family::C9_INF_ALT ||
                         spec.family == Family::T11_INF || spec.family == Family::T11_INF_ALT;
    const bool offset = spec.family == Family::C2_INF || spec.family == Family::C8_INF ||
                        spec.family == Family::C9_INF || spec.family == Family::C9_INF_ALT;
    const bool shifted = spec.family != Family::T5_INF;
    const std::int64_t step = doubled ? 2 * m : m;
    const std::int64_t gap = 2 * k * m;
    auto first_index = [&](std::int64_t i) {
        return m * ((doubled ? 2 : 1) * i - (shifted ? k : 0)) + (offset ? spec.n : 0);
    };

    const Rational rho = upper_bound(params.beta() / params.alpha());
    const Rational lambda = upper_bound(params.B() / params.A());
    const Rational rho_step = pow_up(rho, step);
    // Bound on |t_{i+1} / t_i| for every later pair once the first
    // denominator index is j >= 0; nullopt when the estimate is not below 1.
    auto ratio_bound = [&](std::int64_t j) -> std::optional<Rational> {
        const Rational lo1 = Rational(1) - lambda * pow_up(rho, j + step);
        const Rational lo2 = Rational(1) - lambda * pow_up(rho, j + gap + step);
        if (lo1.sign() <= 0 || lo2.sign() <= 0)
            return std::nullopt;
        const Rational hi1 = Rational(1) + lambda * pow_up(rho, j);
        const Rational hi2 = Rational(1) + lambda * pow_up(rho, j + gap);
        Rational r = rho_step * hi1 * hi2 / (lo1 * lo2);
        if (r >= Rational(1))
            return std::nullopt;
        return r;
    };

    Walk w(params);
    Walk u(HoradamParams::lucas_u(params.p(), params.q()));
    Walk v(HoradamParams::lucas_v(params.p(), params.q()));

    // Terms shrink like rho^{step i}; refuse up front when that rate cannot
    // reach tol within twice the cap, instead of grinding through it.
    const Rational first = summand(spec, w, u, v, 1);
    if (!first.is_zero() && !rho.is_zero() && tol < first.abs()) {
        const double per_term = -static_cast<double>(step) * log2_abs(rho);
        const double predicted = (log2_abs(first) - log2_abs(tol)) / per_term;
        if (per_term <= 0 || predicted > 2.0 * static_cast<double>(kMaxTerms))
            throw Error(ErrorKind::iteration_cap,
                        "about " + std::to_string(static_cast<long long>(predicted)) + " terms needed, cap is " +
                            std::to_string(kMaxTerms));
    }

    InfiniteSum out;
    // The ratio bound only shrinks as j grows, so one computed at an earlier
    // index stays valid; refresh it at doubling checkpoints.
    std::optional<Rational> r;
    std::int64_t refresh = 1;
    for (std::int64_t i = 1; i <= kMaxTerms; ++i) {
        const Rational t = summand(spec, w, u, v, i);
        out.partial += t;
        out.terms_used = i;
        const std::int64_t j = first_index(i);
        if (j < 0)
            continue;
        if (!r || i >= refresh) {
            if (auto fresh = ratio_bound(j))
                r = std::move(fresh);
            refresh = 2 * i;
        }
        if (!r)
            continue;
        Rational tail = t.abs() * *r / (Rational(1) - *r);
        if (tail <= tol) {
            out.tail_bound = std::move(tail);
            return out;
        }
    }
    throw Error(ErrorKind::iteration_cap, "no certified tail after " + std::to_string(kMaxTerms) + " terms");
}

const Rational& Window::at(std::int64_t j) const
{
    if (j < first || j >= first + static_cast<std::int64_t>(values.size()))
        throw Error(ErrorKind::window_underflow, "outside [" + std::to_string(first) + ", " +
                                                     std::to_string(first + static_cast<std::int64_t>(values.size())) +
                                                     ")",
                    j);
    return values[static_cast<std::size_t>(j - first)];
}

Rational telescope_residual(const Window& f, std::int64_t N, std::int64_t t, bool alternating)
{
    if (t < 0)
        throw Error(ErrorKind::precondition, "shift t must be >= 0");
    if (alternating && t % 2 != 0)
        throw Error(ErrorKind::precondition, "alternating telescoping needs an even shift");
    const int s = alternating ? -1 : 1;
    auto term = [&](std::int64_t i) { return signed_unit(s, i) * (f.at(i + t) - f.at(i)); };

    Rational lhs;
    if (N >= 0) {
        for (std::int64_t i = 1; i <= N; ++i)
            lhs += term(i);
    } else {
        for (std::int64_t i = N + 1; i <= 0; ++i)
            lhs -= term(i);
    }
    Rational rhs;
    for (std::int64_t i = 1; i <= t; ++i)
        rhs += signed_unit(s, i + N) * f.at(i + N) - signed_unit(s, i) * f.at(i);
    return lhs - rhs;
}

Rational good_direct(std::int64_t N)
{
    if (N < 0 || N > 20)
        throw Error(ErrorKind::range, "direct Good sum needs 0 <= N <= 20");
    Rational sum;
    for (std::int64_t i = 0; i <= N; ++i)
        sum += Rational(Integer(1), fibonacci(1UL << i));
    return sum;
}

Rational good_tail_bound(std::int64_t N)
{
    if (N < 0 || N > 20)
        throw Error(ErrorKind::range, "Good tail bound needs 0 <= N <= 20");
    return Rational(Integer(2), fibonacci(1UL << (N + 1)));
}

} // namespace horadam::oracle
