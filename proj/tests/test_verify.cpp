#include <gtest/gtest.h>

#include "horadam/error.hpp"
#include "horadam/verify.hpp"

#ifndef HORADAM_GRID_DIR
#error "HORADAM_GRID_DIR must point at the shipped grids"
#endif

using namespace horadam;

namespace {

GridConfig fibonacci_grid()
{
    return parse_grid(R"(
a = 0
b = 1
p = 1
q = -1
m = 1, 2
k = 1, 2
n = 0..2
N = 1..5
families = T1_FIN
relations =
)");
}

} // namespace

TEST(Grid, ParsesShippedDefault)
{
    const GridConfig shipped = load_grid(std::string(HORADAM_GRID_DIR) + "/default.grid");
    const GridConfig builtin = default_grid();
    EXPECT_EQ(shipped.a, builtin.a);
    EXPECT_EQ(shipped.q, builtin.q);
    EXPECT_EQ(shipped.N, builtin.N);
    EXPECT_EQ(shipped.families, builtin.families);
    EXPECT_EQ(shipped.relations, builtin.relations);
    EXPECT_EQ(shipped.infinite_tol, builtin.infinite_tol);
}

TEST(Grid, ParseSyntax)
{
    const GridConfig g = parse_grid("p = 1/2, -3, 2..4  # comment\nfamilies = C2_INF, T9_FIN\ninfinite_tol = 2.5e-7\n");
    ASSERT_EQ(g.p.size(), 5U);
    EXPECT_EQ(g.p[0], Rational(Integer(1), Integer(2)));
    EXPECT_EQ(g.p[4], Rational(4));
    EXPECT_EQ(g.families, (std::vector<Family>{Family::C2_INF, Family::T9_FIN}));
    EXPECT_EQ(g.infinite_tol, Rational(Integer(25), Integer(100000000)));
    EXPECT_EQ(parse_grid("infinite_tol = 1/1000").infinite_tol, Rational(Integer(1), Integer(1000)));
}

TEST(Grid, ParseErrors)
{
    for (const char* bad : {"bogus = 1", "m = ", "m = 1..x", "families = T4", "p = 1/0", "no equals sign",
                            "relations = 3", "infinite_tol = 0", "infinite_tol = abc", "N = 5..2"}) {
        try {
            parse_grid(bad);
            ADD_FAILURE() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::parse) << bad;
        }
    }
    EXPECT_THROW(load_grid("/nonexistent/grid"), Error);
}

TEST(RunGrid, FibonacciGrid)
{
    const VerifyReport r = run_grid(fibonacci_grid());
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.total, 2 * 2 * 3 * 5);
    // n = 0 makes u_n vanish.
    EXPECT_EQ(r.skipped.at("u_n-zero"), 2 * 2 * 5);
    EXPECT_EQ(r.passed, r.total - r.skipped_total());
}

TEST(RunGrid, EmptyFamilies)
{
    GridConfig g = fibonacci_grid();
    g.families.clear();
    const VerifyReport r = run_grid(g);
    EXPECT_EQ(r.total, 0);
    EXPECT_TRUE(r.ok());
}

TEST(RunGrid, DeterministicSubset)
{
    GridConfig g = default_grid();
    g.max_cases = 300;
    g.seed = 42;
    VerifyOptions one_thread;
    one_thread.threads = 1;
    const auto a = to_json(run_grid(g, one_thread)).dump(2);
    const auto b = to_json(run_grid(g)).dump(2);
    EXPECT_EQ(a, b);
    EXPECT_EQ(to_json(run_grid(g)).at("total"), 300);
    g.seed = 43;
    EXPECT_NE(to_json(run_grid(g)).dump(2), a);
}

TEST(RunGrid, ReportsInjectedFault)
{
    GridConfig g = fibonacci_grid();
    g.families = {Family::T1_FIN, Family::C2_INF};
    VerifyOptions options;
    options.inject_fault = true;
    const VerifyReport r = run_grid(g, options);
    EXPECT_FALSE(r.ok());
    EXPECT_EQ(static_cast<std::int64_t>(r.failed.size()), r.total - r.skipped_total());
    const auto j = to_json(r);
    const auto& f = j.at("failed").at(0);
    EXPECT_TRUE(f.contains("lhs"));
    EXPECT_TRUE(f.contains("rhs"));
    EXPECT_TRUE(f.contains("abs_diff_decimal"));
    EXPECT_EQ(f.at("spec").at("family"), "T1_FIN");
}

TEST(RunGrid, ReportPartition)
{
    GridConfig g = default_grid();
    g.max_cases = 2000;
    const VerifyReport r = run_grid(g);
    EXPECT_EQ(r.total, r.passed + r.skipped_total() + static_cast<std::int64_t>(r.failed.size()));
    EXPECT_TRUE(r.ok());
    const auto j = to_json(r);
    EXPECT_EQ(nlohmann::json::parse(j.dump(2)).dump(2), j.dump(2));
}

TEST(Fixtures, AllPass)
{
    const VerifyReport r = run_fixtures();
    EXPECT_TRUE(r.ok());
    EXPECT_GT(r.passed, 100);
    for (const char* name : {"Fibonacci finite", "Lucas finite", "Fibonacci series", "Lucas series", "Lucas n=0 forms", "Lucas n=0 limit", "series 1",
                             "series 8", "Good", "Miller", "relation 2"})
        EXPECT_GT(r.passed_by_family.count(name), 0U) << name;
    bool printed_relation = false;
    for (const Finding& f : r.documented)
        printed_relation |= f.check == "relation 2 with +1 numerator";
    EXPECT_TRUE(printed_relation);
}

TEST(Fixtures, InjectedFaultFails)
{
    VerifyOptions options;
    options.inject_fault = true;
    EXPECT_FALSE(run_fixtures(options).ok());
}

TEST(ExactText, Forms)
{
    EXPECT_EQ(exact_text(Quadratic::from_rational(Rational(Integer(1), Integer(6)), Rational(5))), "1/6");
    EXPECT_EQ(exact_text(Quadratic(Rational(-2), Rational(1), Rational(5))), "-2 + 1*sqrt(5)");
}
