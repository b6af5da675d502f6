#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "horadam/quadratic.hpp"
#include "horadam/rational.hpp"
#include "horadam/sequence.hpp"

namespace horadam {

/// Catalog of reciprocal-sum families. *_FIN are finite sums over i = 1..N
/// (T8_SIGNED runs over 2N terms), *_INF are the limits N -> infinity.
/// T1_EQ and T2_EQ name the alternative "u_{mN} * ..." right sides of T1_FIN
/// and T2_FIN; the other finite families expose theirs through
/// eval_finite_equivalent.
///
/// Summands (s = +1 or -1 for the signed families, q-weights as shown):
///   T1   q^{m(i-k)}  / (w_{m(i-k)+n} w_{m(i+k)+n})
///   C1   q^{m(i-k)}  / (w_{mi} w_{m(i+2k)})                 (n = mk)
///   T2   q^{m(i-k)}  / (w_{m(i-k)} w_{m(i+k)})
///   T3V  q^{m(i-k)}  / (v_{m(i-k)} v_{m(i+k)})
///   T3U  q^{mi}      / (u_{mi} u_{m(i+2k)})
///   T5   q^{mi}      / (w_{mi} w_{m(i+2k)})
///   T8   s^i q^{m(i-k)}  / (w_{m(i-k)+n} w_{m(i+k)+n})     (i = 1..2N)
///   T9   s^i q^{m(2i-k)} / (w_{m(2i-k)+n} w_{m(2i+k)+n})
///   T11  s^i q^{m(2i-k)} / (w_{m(2i-k)} w_{m(2i+k)})
/// C2, C3, T5_INF, C9 and T11_INF are the plain limits of T1, T2, T5, T9 and
/// T11; C8, C9_INF_ALT and T11_INF_ALT the limits with s = -1.
enum class Family {
    T1_FIN,
    T1_EQ,
    C1_FIN,
    C2_INF,
    T2_FIN,
    T2_EQ,
    C3_INF,
    T3V_FIN,
    T3U_FIN,
    T5_FIN,
    T5_INF,
    T8_SIGNED,
    C8_INF,
    T9_FIN,
    C9_INF,
    C9_INF_ALT,
    T11_FIN,
    T11_INF,
    T11_INF_ALT,
};

std::string_view to_string(Family family) noexcept;
std::optional<Family> parse_family(std::string_view text) noexcept;
std::span<const Family> all_families() noexcept;

bool is_infinite(Family family) noexcept;
/// The sign field selects (+1)^i or (-1)^i.
bool is_signed(Family family) noexcept;
/// n is a free parameter (C1 fixes n = mk; the n = 0 families ignore it).
bool uses_n(Family family) noexcept;
/// The family reads (a, b); T3U and T3V only use the Lucas sequences of (p, q).
bool uses_seeds(Family family) noexcept;

struct SumSpec {
    HoradamParams params;
    SeqKind kind = SeqKind::W;
    Family family = Family::T1_FIN;
    std::int64_t m = 1;
    std::int64_t k = 1;
    std::int64_t n = 0;
    std::int64_t N = 0;
    int sign = 1;
};

/// The alternating (2i-k) identities telescope only when (-1)^k = 1, and the
/// finite ones also need N = 0, N = k, or N even. `enforce` rejects the other
/// cases as bad-parameter; `as_printed` evaluates the displayed right side
/// anyway, which is how the fixtures expose where it disagrees with the sum.
enum class SignParity { enforce, as_printed };

struct ValidatedSpec {
    SumSpec spec;
    /// Denominator indices checked nonzero (into v for T3V, u for T3U, w
    /// otherwise).
    std::vector<std::int64_t> screened;
    /// Infinite families: every denominator index >= this is nonzero by the
    /// Binet bound.
    std::optional<std::int64_t> horizon;
};

/// Structural checks first (m, k, N, sign, kind, divergence), then e_w,
/// u_n, u_2km and the denominator scan. Throws Error with the first failing
/// taxonomy entry.
ValidatedSpec validate(const SumSpec& spec, SignParity parity = SignParity::enforce);

struct SumValue {
    Quadratic exact;  // y = 0 for finite families
    Family family;
    SumSpec spec;
};

/// Closed right side of a finite family. For T1_EQ and T2_EQ this is the
/// alternative form.
SumValue eval_finite_closed(const SumSpec& spec);

/// The alternative "u_{mN}/u_{2km} * sum" right side of any finite family,
/// normalized to the same left side as eval_finite_closed.
SumValue eval_finite_equivalent(const SumSpec& spec);

SumValue eval_infinite_closed(const SumSpec& spec, SignParity parity = SignParity::enforce);

/// Relations between Lucas-sequence ratio sums obtained by equating two
/// closed forms of the same sum.
///   1: sum (u/v)(i+N-k) - (u/v)(i-k) = (2/disc) sum (v_{.+1}/v)(i+N-k) - (v_{.+1}/v)(i-k)
///   2: sum v_{mi}/u_{mi} - v_{m(i+N)}/u_{m(i+N)}
///        = (2 q^{mk}/u_{mk}) sum u_{m(i+N-k)}/u_{m(i+N)} - u_{m(i-k)}/u_{mi}
/// Returns left minus right, which is zero. With printed_variant the second
/// relation uses u_{m(i+N-k)+1} in the numerator, which does not hold.
Rational byproduct_residual(int which, const Rational& p, const Rational& q, std::int64_t m, std::int64_t k,
                            std::int64_t N, bool printed_variant = false);

/// Largest N accepted by classic_good; F_{2^N} has about 0.69 * 2^N bits.
inline constexpr std::int64_t kMaxGoodN = 24;

/// 3 - F_{2^N - 1} / F_{2^N}, the closed value of sum_{i=0}^N 1/F_{2^i} for
/// N >= 1. At N = 0 the formula gives 3 while the sum is 1.
Rational classic_good(std::int64_t N);

/// (7 - sqrt 5) / 2, the value of sum_{i>=0} 1/F_{2^i}.
Quadratic classic_miller();

} // namespace horadam
