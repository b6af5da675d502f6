#pragma once

#include <cstdint>
#include <vector>

#include "horadam/families.hpp"
#include "horadam/rational.hpp"
#include "horadam/sequence.hpp"

/// Brute-force evaluation of the left-hand sums, kept apart from the closed
/// forms: terms come from a plain recurrence walk, never from fast doubling.
namespace horadam::oracle {

/// Terms of one sequence produced by stepping the recurrence from (a, b).
class Walk {
public:
    explicit Walk(const HoradamParams& params);

    Rational at(std::int64_t n);

private:
    Rational p_, q_;
    std::int64_t first_ = 0;
    std::vector<Rational> forward_;   // w_0, w_1, ...
    std::vector<Rational> backward_;  // w_{-1}, w_{-2}, ...
};

/// The i-th summand of the family's left side (i >= 1), with sign and
/// q-weight. Throws zero_denominator when a denominator vanishes.
Rational summand(const SumSpec& spec, Walk& w, Walk& u, Walk& v, std::int64_t i);

/// Sum of the first N summands (2N for T8_SIGNED) by direct addition.
Rational direct_finite(const SumSpec& spec);

struct InfiniteSum {
    Rational partial;     // exact sum of the first terms_used summands
    Rational tail_bound;  // |value - partial| <= tail_bound
    std::int64_t terms_used = 0;
};

inline constexpr std::int64_t kMaxTerms = 100000;

/// Adds summands until a certified geometric bound on the remainder is at
/// most tol. The bound uses rational upper bounds on |beta/alpha| and |B/A|,
/// so it holds exactly. Throws divergent-spec when m < 1, disc <= 0, p <= 0
/// or A = 0, and iteration-cap after kMaxTerms summands.
InfiniteSum direct_infinite(const SumSpec& spec, const Rational& tol);

/// Values f(first), f(first+1), ... of some sequence.
struct Window {
    std::int64_t first = 0;
    std::vector<Rational> values;

    /// Throws window-underflow outside the stored range.
    const Rational& at(std::int64_t j) const;
};

/// Left minus right of the swap identity
///   sum_{i=1}^{N} s^i (f(i+t) - f(i)) = sum_{i=1}^{t} (s^{i+N} f(i+N) - s^i f(i)),
/// with s = -1 when alternating (t must then be even) and +1 otherwise.
/// Negative N reads sum_{i=1}^{N} as -sum_{i=N+1}^{0}. Zero when the window is
/// wide enough.
Rational telescope_residual(const Window& f, std::int64_t N, std::int64_t t, bool alternating);

/// sum_{i=0}^{N} 1/F_{2^i}, for 0 <= N <= 20.
Rational good_direct(std::int64_t N);

/// 2/F_{2^{N+1}}, an upper bound on sum_{i>N} 1/F_{2^i} for N >= 0.
Rational good_tail_bound(std::int64_t N);

} // namespace horadam::oracle
