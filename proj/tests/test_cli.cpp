// Runs the horadam binary and checks output and exit codes.

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

#ifndef HORADAM_CLI
#error "HORADAM_CLI must name the CLI binary"
#endif

namespace {

struct Outcome {
    int code = -1;
    std::string out;
};

Outcome run(const std::string& args)
{
    const std::string cmd = std::string(HORADAM_CLI) + " " + args + " 2>&1";
    Outcome r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const std::string kFib = "--a 0 --b 1 --p 1 --q -1 --m 1 --k 1";

} // namespace

TEST(Cli, EvalFinite)
{
    const Outcome r = run("eval --family T1_FIN " + kFib + " --n 1 --N 2");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("1/6"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("0.166666666666666666666666666667"), std::string::npos) << r.out;
}

TEST(Cli, EvalInfinite)
{
    const Outcome r = run("eval --family C2_INF " + kFib + " --n 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("-2 + 1*sqrt(5)"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("0.2360679"), std::string::npos) << r.out;
}

TEST(Cli, EvalBothModes)
{
    const Outcome r = run("eval --family T9_FIN --a 2 --b 1 --p 1 --q -1 --m 2 --k 2 --n 1 --N 4 --sign - --mode both");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("diff:    0\n"), std::string::npos) << r.out;
    const Outcome inf = run("eval --family C8_INF " + kFib + " --n 2 --mode both --tol-digits 40");
    EXPECT_EQ(inf.code, 0) << inf.out;
    EXPECT_NE(inf.out.find("terms"), std::string::npos) << inf.out;
}

TEST(Cli, EvalKindSeeds)
{
    const Outcome r = run("eval --family T1_FIN --kind V --p 1 --q -1 --n 1 --N 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("1/4"), std::string::npos) << r.out;
}

TEST(Cli, ValidationExitCode)
{
    const Outcome r = run("eval --family T1_FIN " + kFib + " --n 0 --N 3");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("u_n-zero"), std::string::npos) << r.out;
    EXPECT_EQ(run("eval --family C2_INF --a 0 --b 1 --p 1 --q -1 --m -1 --k 1 --n 1").code, 2);
}

TEST(Cli, ParseExitCode)
{
    EXPECT_EQ(run("eval --family T1_FIN --a x --b 1 --p 1 --q -1 --n 1 --N 2").code, 3);
    EXPECT_EQ(run("eval --family NOPE " + kFib).code, 3);
    EXPECT_EQ(run("eval --family T1_FIN --p 1 --q -1 --n 1").code, 3);
    EXPECT_EQ(run("eval --family T1_FIN " + kFib + " --sign x").code, 3);
    EXPECT_EQ(run("eval --family T1_FIN " + kFib + " --bogus").code, 3);
    EXPECT_EQ(run("verify --grid /nonexistent.grid").code, 3);
    EXPECT_EQ(run("").code, 3);
}

TEST(Cli, JsonRoundTrip)
{
    for (const std::string args : {"eval --family C9_INF " + kFib + " --n 1 --mode both --json",
                                   std::string("classics --miller --json"), std::string("fixtures --json")}) {
        const Outcome r = run(args);
        ASSERT_EQ(r.code, 0) << args;
        const auto j = nlohmann::json::parse(r.out);
        EXPECT_EQ(j.dump(2) + "\n", r.out) << args;
    }
}

TEST(Cli, Classics)
{
    const Outcome good = run("classics --good 3");
    EXPECT_EQ(good.code, 0);
    EXPECT_NE(good.out.find("closed:  50/21"), std::string::npos) << good.out;
    EXPECT_NE(good.out.find("direct:  50/21"), std::string::npos) << good.out;
    EXPECT_NE(good.out.find("diff:    0"), std::string::npos) << good.out;
    const Outcome miller = run("classics --miller --precision 50");
    EXPECT_EQ(miller.code, 0);
    EXPECT_NE(miller.out.find("2.3819660112501051517954131656343618822796908201942"), std::string::npos)
        << miller.out;
    EXPECT_EQ(run("classics --good 99").code, 2);
    EXPECT_EQ(run("classics").code, 3);
}

TEST(Cli, VerifyExitCodes)
{
    const std::string grid = std::string(HORADAM_GRID_DIR) + "/smoke.grid";
    const Outcome ok = run("verify --grid " + grid);
    EXPECT_EQ(ok.code, 0) << ok.out;
    EXPECT_NE(ok.out.find("failed:  0"), std::string::npos) << ok.out;
    EXPECT_EQ(run("verify --grid " + grid + " --inject-fault").code, 1);
    EXPECT_EQ(run("fixtures").code, 0);
    EXPECT_EQ(run("fixtures --inject-fault").code, 1);

    const Outcome empty = run("verify --json --grid " + std::string(HORADAM_GRID_DIR) + "/empty.grid");
    EXPECT_EQ(empty.code, 0);
    EXPECT_EQ(nlohmann::json::parse(empty.out).at("total"), 0);
}
