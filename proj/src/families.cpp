#include "horadam/families.hpp"

#include <array>
#include <string>

#include <gmp.h>

#include "horadam/error.hpp"

namespace horadam {

namespace {

constexpr std::array kFamilies = {
    Family::T1_FIN,  Family::T1_EQ,     Family::C1_FIN,     Family::C2_INF,  Family::T2_FIN,
    Family::T2_EQ,   Family::C3_INF,    Family::T3V_FIN,    Family::T3U_FIN, Family::T5_FIN,
    Family::T5_INF,  Family::T8_SIGNED, Family::C8_INF,     Family::T9_FIN,  Family::C9_INF,
    Family::C9_INF_ALT, Family::T11_FIN, Family::T11_INF,   Family::T11_INF_ALT,
};

// Denominator index pattern: the first denominator of summand i sits at
// m*(stride*i - (shift_k ? k : 0)) + (offset_n ? n : 0); the second is 2km
// further on, which is also the first denominator of summand i + span.
struct Shape {
    SeqKind seq;
    int stride;
    bool shift_k;
    bool offset_n;
};

Shape shape_of(Family family)
{
    switch (family) {
    case Family::T1_FIN:
    case Family::T1_EQ:
    case Family::C2_INF:
    case Family::T8_SIGNED:
    case Family::C8_INF: return {SeqKind::W, 1, true, true};
    case Family::C1_FIN: return {SeqKind::W, 1, false, false};
    case Family::T2_FIN:
    case Family::T2_EQ:
    case Family::C3_INF: return {SeqKind::W, 1, true, false};
    case Family::T3V_FIN: return {SeqKind::V, 1, true, false};
    case Family::T3U_FIN: return {SeqKind::U, 1, false, false};
    case Family::T5_FIN:
    case Family::T5_INF: return {SeqKind::W, 1, false, false};
    case Family::T9_FIN:
    case Family::C9_INF:
    case Family::C9_INF_ALT: return {SeqKind::W, 2, true, true};
    case Family::T11_FIN:
    case Family::T11_INF:
    case Family::T11_INF_ALT: return {SeqKind::W, 2, true, false};
    }
    return {SeqKind::W, 1, true, true};
}

bool needs_e_w(Family family)
{
    switch (family) {
    case Family::T1_EQ:
    case Family::T2_EQ:
    case Family::T3V_FIN:
    case Family::T3U_FIN: return false;
    default: return true;
    }
}

// Index whose u-value divides the prefactor: n, or mk for C1.
std::optional<std::int64_t> u_n_index(const SumSpec& spec)
{
    switch (spec.family) {
    case Family::T1_FIN:
    case Family::C2_INF:
    case Family::T8_SIGNED:
    case Family::C8_INF:
    case Family::T9_FIN:
    case Family::C9_INF:
    case Family::C9_INF_ALT: return spec.n;
    case Family::C1_FIN: return spec.m * spec.k;
    default: return std::nullopt;
    }
}

// Summand count of the finite left side.
std::int64_t length_of(const SumSpec& spec)
{
    return spec.family == Family::T8_SIGNED ? 2 * spec.N : spec.N;
}

std::int64_t span_of(const SumSpec& spec)
{
    return shape_of(spec.family).stride == 1 ? 2 * spec.k : spec.k;
}

std::int64_t first_denominator(const SumSpec& spec, std::int64_t i)
{
    const Shape s = shape_of(spec.family);
    return spec.m * (s.stride * i - (s.shift_k ? spec.k : 0)) + (s.offset_n ? spec.n : 0);
}

HoradamParams sequence_of(const SumSpec& spec, SeqKind seq)
{
    switch (seq) {
    case SeqKind::U: return HoradamParams::lucas_u(spec.params.p(), spec.params.q());
    case SeqKind::V: return HoradamParams::lucas_v(spec.params.p(), spec.params.q());
    case SeqKind::W: break;
    }
    return spec.params;
}

[[noreturn]] void bad_parameter(const std::string& what)
{
    throw Error(ErrorKind::bad_parameter, what);
}

void check_structure(const SumSpec& spec, SignParity parity)
{
    const Family family = spec.family;
    if (spec.k < 1)
        bad_parameter("k must be >= 1, got " + std::to_string(spec.k));
    if (is_infinite(family)) {
        if (spec.m < 1)
            throw Error(ErrorKind::divergent_spec, "infinite family needs m >= 1, got " + std::to_string(spec.m));
    } else {
        if (spec.m == 0)
            bad_parameter("m must be nonzero");
        if (spec.N < 0)
            bad_parameter("N must be >= 0, got " + std::to_string(spec.N));
    }
    if (spec.sign != 1 && spec.sign != -1)
        bad_parameter("sign must be +1 or -1");
    if (spec.sign == -1 && !is_signed(family))
        bad_parameter(std::string(to_string(family)) + " has no sign parameter");
    if (parity == SignParity::enforce) {
        const bool even_k = spec.k % 2 == 0;
        if ((family == Family::T9_FIN || family == Family::T11_FIN) && spec.sign == -1) {
            const bool telescopes = spec.N == 0 || spec.N == spec.k || (even_k && spec.N % 2 == 0);
            if (!telescopes)
                bad_parameter("alternating (2i-k) sum needs N = 0, N = k, or k and N even");
        }
        if ((family == Family::C9_INF_ALT || family == Family::T11_INF_ALT) && !even_k)
            bad_parameter("alternating (2i-k) limit needs even k");
    }
    if (uses_seeds(family) && !spec.params.matches(spec.kind))
        bad_parameter("seeds (a, b) do not match sequence kind " + std::string(to_string(spec.kind)));
    if (is_infinite(family) && !spec.params.has_dominant_root())
        throw Error(ErrorKind::divergent_spec, "infinite family needs disc > 0 and p > 0");
}

// Lazily computed terms of w, u and v for one spec.
class Terms {
public:
    explicit Terms(const SumSpec& spec)
        : w_(spec.params),
          u_(HoradamParams::lucas_u(spec.params.p(), spec.params.q())),
          v_(HoradamParams::lucas_v(spec.params.p(), spec.params.q())),
          q_(spec.params.q())
    {
    }

    const Rational& w(std::int64_t j) { return w_(j); }
    const Rational& u(std::int64_t j) { return u_(j); }
    const Rational& v(std::int64_t j) { return v_(j); }
    Rational qpow(std::int64_t j) const { return pow(q_, j); }

private:
    TermTable w_, u_, v_;
    Rational q_;
};

Rational sign_pow(int sign, std::int64_t i)
{
    return Rational(sign == -1 && (i % 2 != 0) ? -1 : 1);
}

Rational closed_finite(const SumSpec& spec, Terms& t)
{
    const std::int64_t m = spec.m, k = spec.k, n = spec.n, N = spec.N;
    const Rational& e = spec.params.e_w();
    const Rational u2km = t.u(2 * k * m);
    Rational sum;
    switch (spec.family) {
    case Family::T1_FIN:
    case Family::T8_SIGNED: {
        const std::int64_t len = length_of(spec);
        auto R = [&](std::int64_t i) { return t.w(m * (i - k)) / t.w(m * (i - k) + n); };
        for (std::int64_t i = 1; i <= 2 * k; ++i)
            sum += sign_pow(spec.sign, i) * (R(i) - R(i + len));
        return sum / (e * t.u(n) * u2km);
    }
    case Family::C1_FIN:
        for (std::int64_t i = 1; i <= 2 * k; ++i)
            sum += t.w(m * (i - k)) / t.w(m * i) - t.w(m * (i + N - k)) / t.w(m * (i + N));
        return sum / (e * t.u(m * k) * u2km);
    case Family::T2_FIN: {
        auto g = [&](std::int64_t i) { return t.w(m * (i - k) + 1) / t.w(m * (i - k)); };
        for (std::int64_t i = 1; i <= 2 * k; ++i)
            sum += g(i + N) - g(i);
        return sum / (e * u2km);
    }
    case Family::T3V_FIN: {
        auto h = [&](std::int64_t i) { return t.u(m * (i - k)) / t.v(m * (i - k)); };
        for (std::int64_t i = 1; i <= 2 * k; ++i)
            sum += h(i + N) - h(i);
        return sum / (Rational(2) * u2km);
    }
    case Family::T3U_FIN:
        for (std::int64_t i = 1; i <= 2 * k; ++i)
            sum += t.v(m * i) / t.u(m * i) - t.v(m * (i + N)) / t.u(m * (i + N));
        return sum / (Rational(2) * u2km);
    case Family::T5_FIN:
        for (std::int64_t i = 1; i <= 2 * k; ++i)
            sum += t.w(m * (i + N) + 1) / t.w(m * (i + N)) - t.w(m * i + 1) / t.w(m * i);
        return sum / (e * u2km);
    case Family::T9_FIN: {
        auto R2 = [&](std::int64_t i) { return t.w(m * (2 * i - k)) / t.w(m * (2 * i - k) + n); };
        for (std::int64_t i = 1; i <= k; ++i)
            sum += sign_pow(spec.sign, i) * (R2(i) - R2(i + N));
        return sum / (e * t.u(n) * u2km);
    }
    case Family::T11_FIN: {
        auto G2 = [&](std::int64_t i) { return t.w(m * (2 * i - k) + 1) / t.w(m * (2 * i - k)); };
        for (std::int64_t i = 1; i <= k; ++i)
            sum += sign_pow(spec.sign, i) * (G2(i + N) - G2(i));
        return sum / (e * u2km);
    }
    default: break;
    }
    bad_parameter(std::string(to_string(spec.family)) + " has no finite closed form");
}

Rational equivalent_finite(const SumSpec& spec, Terms& t)
{
    const std::int64_t m = spec.m, k = spec.k, n = spec.n, N = spec.N;
    const Rational u2km = t.u(2 * k * m);
    Rational sum;
    switch (spec.family) {
    case Family::T1_FIN:
    case Family::T1_EQ:
    case Family::T8_SIGNED: {
        const std::int64_t len = length_of(spec);
        for (std::int64_t i = 1; i <= 2 * k; ++i)
            sum += sign_pow(spec.sign, i) * t.qpow(m * i) / (t.w(m * (i - k) + n) * t.w(m * (i + len - k) + n));
        // The display carries q^{mi}; divide by q^{mk} to match q^{m(i-k)}.
        return t.u(m * len) * sum / (u2km * t.qpow(m * k));
    }
    case Family::C1_FIN:
        for (std::int64_t i = 1; i <= 2 * k; ++i)
            sum += t.qpow(m * i) / (t.w(m * i) * t.w(m * (i + N)));
        return t.u(m * N) * sum / (u2km * t.qpow(m * k));
    case Family::T2_FIN:
    case Family::T2_EQ:
        for (std::int64_t i = 1; i <= 2 * k; ++i)
            sum += t.qpow(m * i) / (t.w(m * (i - k)) * t.w(m * (i + N - k)));
        return t.u(m * N) * sum / (u2km * t.qpow(m * k));
    case Family::T3V_FIN:
        for (std::int64_t i = 1; i <= 2 * k; ++i)
            sum += t.qpow(m * (i - k)) / (t.v(m * (i - k)) * t.v(m * (i + N - k)));
        return t.u(m * N) * sum / u2km;
    case Family::T3U_FIN:
        for (std::int64_t i = 1; i <= 2 * k; ++i)
            sum += t.qpow(m * i) / (t.u(m * i) * t.u(m * (i + N)));
        return t.u(m * N) * sum / u2km;
    case Family::T5_FIN:
        for (std::int64_t i = 1; i <= 2 * k; ++i)
            sum += t.qpow(m * i) / (t.w(m * i) * t.w(m * (i + N)));
        return t.u(m * N) * sum / u2km;
    case Family::T9_FIN:
        for (std::int64_t i = 1; i <= k; ++i)
            sum += sign_pow(spec.sign, i) * t.qpow(2 * m * i) /
                   (t.w(m * (2 * i - k) + n) * t.w(m * (2 * (i + N) - k) + n));
        return t.u(2 * m * N) * sum / (u2km * t.qpow(m * k));
    case Family::T11_FIN:
        for (std::int64_t i = 1; i <= k; ++i)
            sum += sign_pow(spec.sign, i) * t.qpow(m * (2 * i - k)) /
                   (t.w(m * (2 * i - k)) * t.w(m * (2 * (i + N) - k)));
        return t.u(2 * m * N) * sum / u2km;
    default: break;
    }
    bad_parameter(std::string(to_string(spec.family)) + " has no finite alternative form");
}

Quadratic closed_infinite(const SumSpec& spec, Terms& t)
{
    const std::int64_t m = spec.m, k = spec.k, n = spec.n;
    const HoradamParams& params = spec.params;
    const Rational& e = params.e_w();
    const Rational& disc = params.disc();
    const Rational u2km = t.u(2 * k * m);
    auto R = [&](std::int64_t i) { return t.w(m * (i - k)) / t.w(m * (i - k) + n); };
    auto R2 = [&](std::int64_t i) { return t.w(m * (2 * i - k)) / t.w(m * (2 * i - k) + n); };
    auto G2 = [&](std::int64_t i) { return t.w(m * (2 * i - k) + 1) / t.w(m * (2 * i - k)); };
    Rational sum;
    switch (spec.family) {
    case Family::C2_INF: {
        for (std::int64_t i = 1; i <= 2 * k; ++i)
            sum += R(i);
        const Quadratic limit = pow(params.alpha(), -n) * Rational(2 * k);
        return (Quadratic::from_rational(sum, disc) - limit) / (e * t.u(n) * u2km);
    }
    case Family::C3_INF: {
        for (std::int64_t i = 1; i <= 2 * k; ++i)
            sum += t.w(m * (i - k) + 1) / t.w(m * (i - k));
        return (params.alpha() * Rational(2 * k) - sum) / (e * u2km);
    }
    case Family::T5_INF: {
        for (std::int64_t i = 1; i <= 2 * k; ++i)
            sum += t.w(m * i + 1) / t.w(m * i);
        return (params.alpha() * Rational(2 * k) - sum) / (e * u2km);
    }
    case Family::C8_INF: {
        for (std::int64_t i = 1; i <= 2 * k; ++i)
            sum += sign_pow(-1, i) * R(i);
        return Quadratic::from_rational(sum / (e * t.u(n) * u2km), disc);
    }
    case Family::C9_INF: {
        for (std::int64_t i = 1; i <= k; ++i)
            sum += R2(i);
        const Quadratic limit = pow(params.alpha(), -n) * Rational(k);
        return (Quadratic::from_rational(sum, disc) - limit) / (e * t.u(n) * u2km);
    }
    case Family::C9_INF_ALT: {
        for (std::int64_t i = 1; i <= k; ++i)
            sum += sign_pow(-1, i) * R2(i);
        return Quadratic::from_rational(sum / (e * t.u(n) * u2km), disc);
    }
    case Family::T11_INF: {
        for (std::int64_t i = 1; i <= k; ++i)
            sum += G2(i);
        return (params.alpha() * Rational(k) - sum) / (e * u2km);
    }
    case Family::T11_INF_ALT: {
        for (std::int64_t i = 1; i <= k; ++i)
            sum += sign_pow(-1, i - 1) * G2(i);
        return Quadratic::from_rational(sum / (e * u2km), disc);
    }
    default: break;
    }
    bad_parameter(std::string(to_string(spec.family)) + " is not an infinite family");
}

} // namespace

std::string_view to_string(Family family) noexcept
{
    switch (family) {
    case Family::T1_FIN: return "T1_FIN";
    case Family::T1_EQ: return "T1_EQ";
    case Family::C1_FIN: return "C1_FIN";
    case Family::C2_INF: return "C2_INF";
    case Family::T2_FIN: return "T2_FIN";
    case Family::T2_EQ: return "T2_EQ";
    case Family::C3_INF: return "C3_INF";
    case Family::T3V_FIN: return "T3V_FIN";
    case Family::T3U_FIN: return "T3U_FIN";
    case Family::T5_FIN: return "T5_FIN";
    case Family::T5_INF: return "T5_INF";
    case Family::T8_SIGNED: return "T8_SIGNED";
    case Family::C8_INF: return "C8_INF";
    case Family::T9_FIN: return "T9_FIN";
    case Family::C9_INF: return "C9_INF";
    case Family::C9_INF_ALT: return "C9_INF_ALT";
    case Family::T11_FIN: return "T11_FIN";
    case Family::T11_INF: return "T11_INF";
    case Family::T11_INF_ALT: return "T11_INF_ALT";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view text) noexcept
{
    for (Family f : kFamilies)
        if (to_string(f) == text)
            return f;
    return std::nullopt;
}

std::span<const Family> all_families() noexcept
{
    return kFamilies;
}

bool is_infinite(Family family) noexcept
{
    switch (family) {
    case Family::C2_INF:
    case Family::C3_INF:
    case Family::T5_INF:
    case Family::C8_INF:
    case Family::C9_INF:
    case Family::C9_INF_ALT:
    case Family::T11_INF:
    case Family::T11_INF_ALT: return true;
    default: return false;
    }
}

bool is_signed(Family family) noexcept
{
    return family == Family::T8_SIGNED || family == Family::T9_FIN || family == Family::T11_FIN;
}

bool uses_n(Family family) noexcept
{
    return shape_of(family).offset_n;
}

bool uses_seeds(Family family) noexcept
{
    return family != Family::T3U_FIN && family != Family::T3V_FIN;
}

ValidatedSpec validate(const SumSpec& spec, SignParity parity)
{
    check_structure(spec, parity);

    const Family family = spec.family;
    const Rational& p = spec.params.p();
    const Rational& q = spec.params.q();
    if (needs_e_w(family) && spec.params.e_w().is_zero())
        throw Error(ErrorKind::e_w_zero, "e_w = 0 (geometric sequence)");
    if (auto index = u_n_index(spec); index && lucas_u(p, q, *index).is_zero())
        throw Error(ErrorKind::u_n_zero, "u_" + std::to_string(*index) + " = 0");
    if (lucas_u(p, q, 2 * spec.k * spec.m).is_zero())
        throw Error(ErrorKind::u_2km_zero, "u_" + std::to_string(2 * spec.k * spec.m) + " = 0");

    ValidatedSpec out{spec, {}, std::nullopt};
    TermTable denominators(sequence_of(spec, shape_of(family).seq));
    auto screen = [&](std::int64_t j) {
        if (denominators(j).is_zero())
            throw Error(ErrorKind::zero_denominator, std::string(to_string(shape_of(family).seq)) + "-sequence term",
                        j);
        out.screened.push_back(j);
    };

    const std::int64_t span = span_of(spec);
    if (!is_infinite(family)) {
        for (std::int64_t i = 1; i <= span + length_of(spec); ++i)
            screen(first_denominator(spec, i));
        return out;
    }
    const std::int64_t horizon = nonvanishing_horizon(denominators.params());
    out.horizon = horizon;
    for (std::int64_t i = 1; i <= span || first_denominator(spec, i) < horizon; ++i)
        screen(first_denominator(spec, i));
    return out;
}

SumValue eval_finite_closed(const SumSpec& spec)
{
    if (is_infinite(spec.family))
        bad_parameter(std::string(to_string(spec.family)) + " is an infinite family");
    validate(spec);
    Terms terms(spec);
    const bool alternative = spec.family == Family::T1_EQ || spec.family == Family::T2_EQ;
    Rational value = alternative ? equivalent_finite(spec, terms) : closed_finite(spec, terms);
    return {Quadratic::from_rational(std::move(value), spec.params.disc()), spec.family, spec};
}

SumValue eval_finite_equivalent(const SumSpec& spec)
{
    if (is_infinite(spec.family))
        bad_parameter(std::string(to_string(spec.family)) + " is an infinite family");
    validate(spec);
    Terms terms(spec);
    return {Quadratic::from_rational(equivalent_finite(spec, terms), spec.params.disc()), spec.family, spec};
}

SumValue eval_infinite_closed(const SumSpec& spec, SignParity parity)
{
    if (!is_infinite(spec.family))
        bad_parameter(std::string(to_string(spec.family)) + " is a finite family");
    validate(spec, parity);
    Terms terms(spec);
    return {closed_infinite(spec, terms), spec.family, spec};
}

Rational byproduct_residual(int which, const Rational& p, const Rational& q, std::int64_t m, std::int64_t k,
                            std::int64_t N, bool printed_variant)
{
    if (which != 1 && which != 2)
        bad_parameter("relation must be 1 or 2");
    if (m == 0 || k < 1 || N < 0)
        bad_parameter("relation needs m != 0, k >= 1, N >= 0");
    TermTable u(HoradamParams::lucas_u(p, q));
    TermTable v(HoradamParams::lucas_v(p, q));
    auto nonzero = [](TermTable& table, std::int64_t j, const char* seq) -> const Rational& {
        const Rational& value = table(j);
        if (value.is_zero())
            throw Error(ErrorKind::zero_denominator, std::string(seq) + "-sequence term", j);
        return value;
    };

    Rational lhs, rhs;
    if (which == 1) {
        for (std::int64_t i = 1; i <= 2 * k; ++i) {
            const std::int64_t hi = m * (i + N - k);
            const std::int64_t lo = m * (i - k);
            lhs += u(hi) / nonzero(v, hi, "V") - u(lo) / nonzero(v, lo, "V");
            rhs += v(hi + 1) / v(hi) - v(lo + 1) / v(lo);
        }
        rhs *= Rational(2) / (p * p - Rational(4) * q);
    } else {
        const std::int64_t bump = printed_variant ? 1 : 0;
        for (std::int64_t i = 1; i <= 2 * k; ++i) {
            lhs += v(m * i) / nonzero(u, m * i, "U") - v(m * (i + N)) / nonzero(u, m * (i + N), "U");
            rhs += u(m * (i + N - k) + bump) / u(m * (i + N)) - u(m * (i - k)) / u(m * i);
        }
        rhs *= Rational(2) * pow(q, m * k) / nonzero(u, m * k, "U");
    }
    return lhs - rhs;
}

Rational classic_good(std::int64_t N)
{
    if (N < 0 || N > kMaxGoodN)
        throw Error(ErrorKind::range, "Good's formula needs 0 <= N <= " + std::to_string(kMaxGoodN));
    Integer top, below;
    mpz_fib2_ui(top.get_mpz_t(), below.get_mpz_t(), 1UL << N);
    return Rational(3) - Rational(below, top);
}

Quadratic classic_miller()
{
    return Quadratic(Rational(7, 2), Rational(-1, 2), Rational(5));
}

} // namespace horadam
