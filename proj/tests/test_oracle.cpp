#include <random>

#include <gtest/gtest.h>

#include "horadam/error.hpp"
#include "horadam/families.hpp"
#include "horadam/oracle.hpp"

using namespace horadam;

namespace {

Rational R(long n, long d = 1)
{
    return Rational(Integer(n), Integer(d));
}

const HoradamParams kFib = HoradamParams::lucas_u(R(1), R(-1));
const HoradamParams kLuc = HoradamParams::lucas_v(R(1), R(-1));

SumSpec spec(const HoradamParams& params, Family family, std::int64_t m, std::int64_t k, std::int64_t n,
             std::int64_t N)
{
    return SumSpec{params, SeqKind::W, family, m, k, n, N, 1};
}

oracle::Window table(std::int64_t first, std::vector<Rational> values)
{
    return oracle::Window{first, std::move(values)};
}

} // namespace

TEST(Oracle, DirectFiniteExamples)
{
    EXPECT_EQ(oracle::direct_finite(spec(kFib, Family::T1_FIN, 1, 1, 1, 2)), R(1, 6));
    EXPECT_EQ(oracle::direct_finite(spec(kLuc, Family::T2_FIN, 1, 1, 0, 1)), R(1, 6));
    EXPECT_EQ(oracle::direct_finite(spec(kLuc, Family::T1_FIN, 1, 1, 1, 0)), R(0));
    try {
        oracle::direct_finite(spec(kFib, Family::T2_FIN, 1, 1, 0, 2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::zero_denominator);
        EXPECT_EQ(e.index(), 0);
    }
}

TEST(Oracle, DirectInfiniteBracketsClosedValue)
{
    const SumSpec fib = spec(kFib, Family::C2_INF, 1, 1, 1, 0);
    const auto sum = oracle::direct_infinite(fib, pow10(-12));
    const Quadratic closed = Quadratic(R(-2), R(1), R(5));
    EXPECT_LE(sum.tail_bound, pow10(-12));
    EXPECT_NE(sign(Quadratic::from_rational(sum.tail_bound, R(5)) - abs(closed - sum.partial)), Sign::negative);

    const SumSpec luc = spec(kLuc, Family::C9_INF, 1, 1, 1, 0);
    const auto sum9 = oracle::direct_infinite(luc, pow10(-20));
    const Quadratic closed9 = eval_infinite_closed(luc).exact;
    EXPECT_NE(sign(Quadratic::from_rational(sum9.tail_bound, R(5)) - abs(closed9 - sum9.partial)), Sign::negative);
}

TEST(Oracle, TailBoundHoldsAtSeveralCutoffs)
{
    // Tighter tolerances use more terms and the bracket holds at each.
    const SumSpec s = spec(HoradamParams(R(1), R(3), R(3), R(1)), Family::T11_INF, 2, 3, 0, 0);
    const Quadratic closed = eval_infinite_closed(s).exact;
    std::int64_t last = 0;
    for (int digits : {10, 20, 40, 80}) {
        const auto sum = oracle::direct_infinite(s, pow10(-digits));
        EXPECT_GE(sum.terms_used, last);
        last = sum.terms_used;
        EXPECT_NE(sign(Quadratic::from_rational(sum.tail_bound, closed.disc()) - abs(closed - sum.partial)),
                  Sign::negative)
            << digits;
    }
}

TEST(Oracle, DirectInfiniteErrors)
{
    auto kind = [](const SumSpec& s) {
        try {
            oracle::direct_infinite(s, pow10(-10));
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::parse;
    };
    EXPECT_EQ(kind(spec(kFib, Family::C2_INF, 0, 1, 1, 0)), ErrorKind::divergent_spec);
    EXPECT_EQ(kind(spec(HoradamParams(R(0), R(1), R(-1), R(-1)), Family::C2_INF, 1, 1, 1, 0)),
              ErrorKind::divergent_spec);
    EXPECT_EQ(kind(spec(HoradamParams(R(0), R(1), R(1), R(1)), Family::C2_INF, 1, 1, 1, 0)),
              ErrorKind::divergent_spec);
    EXPECT_EQ(kind(spec(kFib, Family::T1_FIN, 1, 1, 1, 0)), ErrorKind::bad_parameter);
}

TEST(Oracle, SlowConvergenceHitsIterationCap)
{
    // |beta/alpha| = 1000/1001 needs about 690000 terms for 1e-300.
    const SumSpec s = spec(HoradamParams(R(0), R(1), R(2001), R(1001000)), Family::T5_INF, 1, 1, 0, 0);
    try {
        oracle::direct_infinite(s, pow10(-300));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::iteration_cap);
    }
}

TEST(Oracle, TelescopeExamples)
{
    std::vector<Rational> squares;
    for (long i = -5; i <= 20; ++i)
        squares.push_back(R(i * i));
    EXPECT_TRUE(oracle::telescope_residual(table(-5, squares), 5, 3, false).is_zero());

    std::vector<Rational> reciprocals;
    for (long i = 1; i <= 20; ++i)
        reciprocals.push_back(R(1, i));
    EXPECT_TRUE(oracle::telescope_residual(table(1, reciprocals), 6, 1, false).is_zero());

    std::mt19937_64 rng(11);
    std::vector<Rational> random;
    for (int i = 0; i < 20; ++i)
        random.push_back(R(static_cast<long>(rng() % 199) - 99, static_cast<long>(rng() % 50) + 1));
    EXPECT_TRUE(oracle::telescope_residual(table(0, random), 4, 2, true).is_zero());
    EXPECT_TRUE(oracle::telescope_residual(table(-10, random), -4, 2, true).is_zero());
    EXPECT_TRUE(oracle::telescope_residual(table(-10, random), -3, 5, false).is_zero());
}

TEST(Oracle, TelescopeErrors)
{
    const oracle::Window w = table(1, {R(1), R(2), R(3)});
    try {
        oracle::telescope_residual(w, 5, 1, false);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::window_underflow);
    }
    EXPECT_THROW(oracle::telescope_residual(w, 1, 1, true), Error);
}

TEST(Oracle, GoodSums)
{
    EXPECT_EQ(oracle::good_direct(0), R(1));
    EXPECT_EQ(oracle::good_direct(1), R(2));
    EXPECT_EQ(oracle::good_direct(2), R(7, 3));
    EXPECT_EQ(oracle::good_direct(3), R(50, 21));
    EXPECT_THROW(oracle::good_direct(21), Error);
    for (std::int64_t N = 1; N <= 12; ++N)
        EXPECT_EQ(oracle::good_direct(N), classic_good(N)) << N;
    const Quadratic gap = abs(classic_miller() - oracle::good_direct(5));
    EXPECT_NE(sign(Quadratic::from_rational(oracle::good_tail_bound(5), R(5)) - gap), Sign::negative);
}
