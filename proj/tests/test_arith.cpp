#include <gtest/gtest.h>

#include "horadam/decimal.hpp"
#include "horadam/error.hpp"
#include "horadam/quadratic.hpp"
#include "horadam/rational.hpp"

using namespace horadam;

namespace {

template <class F>
ErrorKind kind_of(F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::parse;
}

} // namespace

TEST(Rational, CanonicalForm)
{
    EXPECT_EQ(Rational(Integer(6), Integer(-4)).str(), "-3/2");
    EXPECT_EQ(Rational(Integer(8), Integer(4)).str(), "2");
    EXPECT_EQ(Rational(Integer(0), Integer(-7)).str(), "0");
    EXPECT_EQ(Rational(Integer(2), Integer(4)), Rational(Integer(1), Integer(2)));
}

TEST(Rational, Parse)
{
    EXPECT_EQ(Rational::parse("-3/6"), Rational(Integer(-1), Integer(2)));
    EXPECT_EQ(Rational::parse("+12"), Rational(12));
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_EQ(kind_of([] { Rational::parse("1/0"); }), ErrorKind::parse);
    EXPECT_EQ(kind_of([] { Rational::parse("abc"); }), ErrorKind::parse);
    EXPECT_EQ(kind_of([] { Rational::parse(""); }), ErrorKind::parse);
    EXPECT_EQ(kind_of([] { Rational::parse("1.5"); }), ErrorKind::parse);
}

TEST(Rational, Arithmetic)
{
    const Rational a(Integer(1), Integer(3));
    const Rational b(Integer(1), Integer(6));
    EXPECT_EQ(a + b, Rational(Integer(1), Integer(2)));
    EXPECT_EQ(a - b, b);
    EXPECT_EQ(a * b, Rational(Integer(1), Integer(18)));
    EXPECT_EQ(a / b, Rational(2));
    EXPECT_LT(b, a);
    EXPECT_EQ((-a).abs(), a);
    EXPECT_EQ(a.inverse(), Rational(3));
}

TEST(Rational, DivisionByZeroNamesOperands)
{
    try {
        (void)(Rational(3) / Rational(0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::division_by_zero);
        EXPECT_NE(std::string(e.what()).find('3'), std::string::npos);
    }
    EXPECT_EQ(kind_of([] { (void)Rational(0).inverse(); }), ErrorKind::division_by_zero);
}

TEST(Rational, Powers)
{
    EXPECT_EQ(pow(Rational(Integer(-2), Integer(3)), 3), Rational(Integer(-8), Integer(27)));
    EXPECT_EQ(pow(Rational(2), -2), Rational(Integer(1), Integer(4)));
    EXPECT_EQ(pow(Rational(5), 0), Rational(1));
    EXPECT_EQ(kind_of([] { pow(Rational(0), -1); }), ErrorKind::zero_to_negative_power);
    EXPECT_EQ(pow10(-3), Rational(Integer(1), Integer(1000)));
}

TEST(Rational, RoundUpIsAnUpperBound)
{
    const Rational third(Integer(1), Integer(3));
    const Rational up = round_up(third, 5);
    EXPECT_EQ(up, Rational(Integer(33334), Integer(100000)));
    EXPECT_EQ(round_up(Rational(Integer(-1), Integer(3)), 2), Rational(Integer(-33), Integer(100)));
    EXPECT_EQ(round_up(Rational(Integer(1), Integer(4)), 2), Rational(Integer(1), Integer(4)));
}

TEST(Quadratic, FoldsSquareDiscriminant)
{
    const Quadratic v(Rational(1), Rational(2), Rational(9));
    EXPECT_TRUE(v.is_rational());
    EXPECT_EQ(v.x(), Rational(7));
    const Quadratic w(Rational(0), Rational(1), Rational(Integer(1), Integer(4)));
    EXPECT_EQ(w.x(), Rational(Integer(1), Integer(2)));
}

TEST(Quadratic, FieldOperations)
{
    const Quadratic phi(Rational(Integer(1), Integer(2)), Rational(Integer(1), Integer(2)), Rational(5));
    // phi^2 = phi + 1
    EXPECT_EQ(phi * phi, phi + Rational(1));
    EXPECT_EQ(phi.norm(), Rational(-1));
    EXPECT_EQ(phi * phi.inverse(), Quadratic::from_rational(Rational(1), Rational(5)));
    EXPECT_EQ(pow(phi, 10), Quadratic(Rational(Integer(123), Integer(2)), Rational(Integer(55), Integer(2)), Rational(5)));
    EXPECT_EQ(pow(phi, -1), phi - Rational(1));
    EXPECT_EQ(phi.str(), "1/2 + 1/2*sqrt(5)");
}

TEST(Quadratic, Errors)
{
    const Quadratic a = Quadratic::sqrt_of(Rational(5));
    const Quadratic b = Quadratic::sqrt_of(Rational(2));
    EXPECT_EQ(kind_of([&] { (void)(a + b); }), ErrorKind::mismatched_disc);
    EXPECT_EQ(kind_of([&] { (void)(a == b); }), ErrorKind::mismatched_disc);
    EXPECT_EQ(kind_of([] { Quadratic(Rational(1), Rational(1), Rational(0)); }), ErrorKind::zero_discriminant);
    EXPECT_EQ(kind_of([] { sign(Quadratic::sqrt_of(Rational(-3))); }), ErrorKind::nonreal_disc);
    EXPECT_EQ(kind_of([&] { (void)(a / Quadratic::from_rational(Rational(0), Rational(5))); }),
              ErrorKind::division_by_zero);
}

TEST(Quadratic, ExactSign)
{
    const Rational five(5);
    // 2.2360679... - 2236068/1000000 < 0 by about 2e-8.
    EXPECT_EQ(sign(Quadratic::sqrt_of(five) - Rational(Integer(2236068), Integer(1000000))), Sign::negative);
    EXPECT_EQ(sign(Quadratic::sqrt_of(five) - Rational(Integer(2236067), Integer(1000000))), Sign::positive);
    EXPECT_EQ(sign(Quadratic(Rational(-3), Rational(1), Rational(9))), Sign::zero);
    EXPECT_EQ(sign(Quadratic(Rational(3), Rational(-1), five)), Sign::positive);
    EXPECT_EQ(sign(Quadratic(Rational(-3), Rational(1), five)), Sign::negative);
}

TEST(Decimal, RationalRendering)
{
    EXPECT_EQ(to_decimal(Rational(Integer(1), Integer(6)), 30).str(), "0.166666666666666666666666666667");
    EXPECT_EQ(to_decimal(Rational(Integer(1), Integer(4)), 30).str(), "0.25");
    EXPECT_EQ(to_decimal(Rational(3), 10).str(), "3.0");
    EXPECT_EQ(to_decimal(Rational(0), 10).str(), "0.0");
    EXPECT_EQ(to_decimal(Rational(Integer(-2), Integer(3)), 5).str(), "-0.66667");
    EXPECT_EQ(to_decimal(Rational(Integer(999999), Integer(1000000)), 3).str(), "1.00");
    EXPECT_EQ(to_decimal(pow10(-30), 6).str(), "1.0e-30");
    EXPECT_EQ(to_decimal(Rational(Integer(1), Integer(3)) * pow10(20), 4).str(), "3.333e19");
}

TEST(Decimal, QuadraticRendering)
{
    const Quadratic v(Rational(-2), Rational(1), Rational(5));
    EXPECT_EQ(to_decimal(v, 12).str(), "0.236067977500");
    const Quadratic miller(Rational(Integer(7), Integer(2)), Rational(Integer(-1), Integer(2)), Rational(5));
    EXPECT_EQ(to_decimal(miller, 20).str(), "2.3819660112501051518");
    // Heavy cancellation: 1/(9 + 4 sqrt 5)^10 is tiny.
    const Quadratic tiny = pow(Quadratic(Rational(9), Rational(-4), Rational(5)), 10);
    EXPECT_EQ(to_decimal(tiny, 5).str(), "2.8890e-13");
    EXPECT_THROW(to_decimal(Quadratic::sqrt_of(Rational(-1)), 5), Error);
}

TEST(Decimal, RationalBounds)
{
    const Quadratic phi(Rational(Integer(1), Integer(2)), Rational(Integer(1), Integer(2)), Rational(5));
    const auto [lo, hi] = rational_bounds(phi, 40);
    EXPECT_LE(hi - lo, pow10(-40));
    EXPECT_NE(sign(phi - lo), Sign::negative);
    EXPECT_NE(sign(Quadratic::from_rational(hi, Rational(5)) - phi), Sign::negative);
    const Quadratic neg = -phi;
    const auto [nlo, nhi] = rational_bounds(neg, 30);
    EXPECT_NE(sign(neg - nlo), Sign::negative);
    EXPECT_NE(sign(Quadratic::from_rational(nhi, Rational(5)) - neg), Sign::negative);
}

TEST(ErrorTaxonomy, Names)
{
    EXPECT_EQ(to_string(ErrorKind::zero_denominator), "zero-denominator-at");
    EXPECT_EQ(to_string(ErrorKind::e_w_zero), "e_w-zero");
    EXPECT_EQ(to_string(ErrorKind::u_n_zero), "u_n-zero");
    EXPECT_EQ(to_string(ErrorKind::u_2km_zero), "u_2km-zero");
    EXPECT_EQ(to_string(ErrorKind::divergent_spec), "divergent-spec");
    EXPECT_EQ(to_string(ErrorKind::bad_parameter), "bad-parameter");
    const Error e(ErrorKind::zero_denominator, "W-sequence term", 0);
    EXPECT_EQ(std::string(e.what()), "zero-denominator-at(0): W-sequence term");
    EXPECT_EQ(e.index(), 0);
}
