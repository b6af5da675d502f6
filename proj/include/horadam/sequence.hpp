#pragma once

#include <cstdint>
#include <deque>
#include <string_view>
#include <optional>

#include "horadam/quadratic.hpp"
#include "horadam/rational.hpp"

namespace horadam {

/// W is the general sequence; U and V are the Lucas sequences of the first
/// and second kind, which force (a, b) = (0, 1) and (2, p).
enum class SeqKind { W, U, V };

std::string_view to_string(SeqKind kind) noexcept;
std::optional<SeqKind> parse_seq_kind(std::string_view text) noexcept;

/// One Horadam instance w_0 = a, w_1 = b, w_n = p*w_{n-1} - q*w_{n-2}, with
/// its derived constants computed exactly.
///
/// Construction rejects q = 0 and a zero discriminant. e_w = 0 (a geometric
/// sequence) is allowed here; evaluators that divide by e_w reject it.
class HoradamParams {
public:
    HoradamParams(Rational a, Rational b, Rational p, Rational q);

    static HoradamParams lucas_u(const Rational& p, const Rational& q);
    static HoradamParams lucas_v(const Rational& p, const Rational& q);
    static HoradamParams of_kind(SeqKind kind, const Rational& a, const Rational& b, const Rational& p,
                                 const Rational& q);

    const Rational& a() const noexcept { return a_; }
    const Rational& b() const noexcept { return b_; }
    const Rational& p() const noexcept { return p_; }
    const Rational& q() const noexcept { return q_; }
    /// p^2 - 4q.
    const Rational& disc() const noexcept { return disc_; }
    /// p*a*b - q*a^2 - b^2.
    const Rational& e_w() const noexcept { return e_w_; }
    /// (p + sqrt(disc)) / 2 and (p - sqrt(disc)) / 2.
    const Quadratic& alpha() const noexcept { return alpha_; }
    const Quadratic& beta() const noexcept { return beta_; }
    /// b - a*beta and b - a*alpha.
    const Quadratic& A() const noexcept { return A_; }
    const Quadratic& B() const noexcept { return B_; }

    /// disc > 0 and p > 0, which is exactly when |alpha| > |beta| holds in
    /// the real embedding.
    bool has_dominant_root() const;

    /// The instance matches the seeds the kind forces.
    bool matches(SeqKind kind) const;

    friend bool operator==(const HoradamParams& lhs, const HoradamParams& rhs)
    {
        return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_ && lhs.p_ == rhs.p_ && lhs.q_ == rhs.q_;
    }

private:
    Rational a_, b_, p_, q_;
    Rational disc_, e_w_;
    Quadratic alpha_, beta_, A_, B_;
};

/// w_n for any index. Non-negative n uses fast doubling on (u_n, u_{n+1});
/// negative n uses w_{-n} = (a*v_n - w_n) / q^n.
Rational term(const HoradamParams& params, std::int64_t n);

/// u_n(p, q) and v_n(p, q) for any integer n.
Rational lucas_u(const Rational& p, const Rational& q, std::int64_t n);
Rational lucas_v(const Rational& p, const Rational& q, std::int64_t n);

/// w_n*w_{n+r+s} - w_{n+r}*w_{n+s} - e_w*q^n*u_r*u_s; identically zero.
Rational product_identity_residual(const HoradamParams& params, std::int64_t n, std::int64_t r, std::int64_t s);

/// Smallest N0 >= 0 with w_n != 0 for every n >= N0.
///
/// Requires disc > 0, p > 0 and e_w != 0; throws precondition naming the
/// failed condition. The bound comes from |A|*|alpha|^n > |B|*|beta|^n decided
/// exactly on squares, then indices below it are scanned directly.
std::int64_t nonvanishing_horizon(const HoradamParams& params);

/// Memoized terms over a contiguous window, extended by the recurrence in
/// either direction from a fast-doubling seed. Not thread-safe; meant to live
/// inside a single evaluation.
class TermTable {
public:
    explicit TermTable(HoradamParams params) : params_(std::move(params)) {}

    const Rational& operator()(std::int64_t n);
    const HoradamParams& params() const noexcept { return params_; }

private:
    HoradamParams params_;
    std::int64_t first_ = 0;
    std::deque<Rational> values_;
};

} // namespace horadam
