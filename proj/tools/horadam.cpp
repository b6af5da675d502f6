// Command-line frontend for the reciprocal-sum evaluators.
//
// Exit codes: 0 success, 1 verification failures, 2 validation or range
// error, 3 parse or config error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "horadam/decimal.hpp"
#include "horadam/error.hpp"
#include "horadam/families.hpp"
#include "horadam/oracle.hpp"
#include "horadam/verify.hpp"

namespace {

using horadam::Error;
using horadam::ErrorKind;
using horadam::Family;
using horadam::Quadratic;
using horadam::Rational;
using nlohmann::json;

constexpr int kExitFailures = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitParse = 3;

struct EvalArgs {
    std::string family;
    std::optional<std::string> a, b;
    std::string p, q;
    std::string kind = "W";
    std::int64_t m = 1, k = 1, n = 0, N = 0;
    std::string sign = "+";
    std::string mode = "closed";
    int precision = 30;
    int tol_digits = 30;
    bool json = false;
};

struct VerifyArgs {
    std::optional<std::string> grid;
    std::optional<std::uint64_t> seed;
    unsigned threads = 0;
    bool json = false;
    bool inject_fault = false;
};

struct ClassicsArgs {
    std::optional<std::int64_t> good;
    bool miller = false;
    int precision = 30;
    bool json = false;
};

std::string decimal(const Quadratic& v, int precision)
{
    return horadam::to_decimal(v, precision).str();
}

std::string decimal(const Rational& v, int precision)
{
    return horadam::to_decimal(v, precision).str();
}

Rational parse_rational(const std::string& text, const char* flag)
{
    try {
        return Rational::parse(text);
    } catch (const Error& e) {
        throw Error(ErrorKind::parse, std::string(flag) + ": " + e.what());
    }
}

horadam::SumSpec build_spec(const EvalArgs& args)
{
    const auto family = horadam::parse_family(args.family);
    if (!family)
        throw Error(ErrorKind::parse, "unknown family '" + args.family + "'");
    const auto kind = horadam::parse_seq_kind(args.kind);
    if (!kind)
        throw Error(ErrorKind::parse, "unknown sequence kind '" + args.kind + "'");
    if (args.sign != "+" && args.sign != "-")
        throw Error(ErrorKind::parse, "--sign takes + or -");

    const Rational p = parse_rational(args.p, "--p");
    const Rational q = parse_rational(args.q, "--q");
    Rational a, b;
    if (args.a && args.b) {
        a = parse_rational(*args.a, "--a");
        b = parse_rational(*args.b, "--b");
    } else if (args.a || args.b) {
        throw Error(ErrorKind::parse, "--a and --b go together");
    } else if (*kind == horadam::SeqKind::U) {
        a = Rational(0);
        b = Rational(1);
    } else if (*kind == horadam::SeqKind::V) {
        a = Rational(2);
        b = p;
    } else if (horadam::uses_seeds(*family)) {
        throw Error(ErrorKind::parse, "--a and --b are required for kind W");
    } else {
        b = Rational(1);
    }
    return horadam::SumSpec{horadam::HoradamParams(a, b, p, q), *kind, *family, args.m, args.k, args.n, args.N,
                            args.sign == "-" ? -1 : 1};
}

int run_eval(const EvalArgs& args)
{
    const horadam::SumSpec spec = build_spec(args);
    const bool infinite = horadam::is_infinite(spec.family);
    const bool want_closed = args.mode != "direct";
    const bool want_direct = args.mode != "closed";
    const Rational& disc = spec.params.disc();

    json out;
    out["spec"] = horadam::to_json(spec);
    std::optional<Quadratic> closed;
    if (want_closed) {
        closed = infinite ? horadam::eval_infinite_closed(spec).exact : horadam::eval_finite_closed(spec).exact;
        out["closed"] = {{"exact", horadam::exact_text(*closed)}, {"decimal", decimal(*closed, args.precision)}};
    }
    if (want_direct) {
        if (infinite) {
            horadam::validate(spec);
            const auto sum = horadam::oracle::direct_infinite(spec, horadam::pow10(-args.tol_digits));
            out["direct"] = {{"partial_decimal", decimal(sum.partial, args.precision)},
                             {"tail_bound", decimal(sum.tail_bound, 6)},
                             {"terms_used", sum.terms_used}};
            if (closed)
                out["difference"] = decimal(abs(*closed - sum.partial), 6);
        } else {
            horadam::validate(spec);
            const Rational sum = horadam::oracle::direct_finite(spec);
            const Quadratic value = Quadratic::from_rational(sum, disc);
            out["direct"] = {{"exact", horadam::exact_text(value)}, {"decimal", decimal(value, args.precision)}};
            if (closed)
                out["difference"] = horadam::exact_text(*closed - value);
        }
    }

    if (args.json) {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (out.contains("closed")) {
        std::cout << "closed:  " << out["closed"]["exact"].get<std::string>() << "\n";
        std::cout << "         " << out["closed"]["decimal"].get<std::string>() << "\n";
    }
    if (out.contains("direct")) {
        const json& d = out["direct"];
        if (infinite) {
            std::cout << "partial: " << d["partial_decimal"].get<std::string>() << "\n";
            std::cout << "tail:    <= " << d["tail_bound"].get<std::string>() << " after "
                      << d["terms_used"].get<std::int64_t>() << " terms\n";
        } else {
            std::cout << "direct:  " << d["exact"].get<std::string>() << "\n";
            std::cout << "         " << d["decimal"].get<std::string>() << "\n";
        }
    }
    if (out.contains("difference"))
        std::cout << "diff:    " << out["difference"].get<std::string>() << "\n";
    return 0;
}

void print_findings(const char* title, const std::vector<horadam::Finding>& findings)
{
    if (findings.empty())
        return;
    std::cout << title << ":\n";
    for (const auto& f : findings) {
        std::cout << "  " << f.check << " " << f.spec.dump() << "\n";
        std::cout << "    lhs " << f.lhs << "\n    rhs " << f.rhs << "\n    |diff| " << f.abs_diff_decimal << "\n";
        if (!f.note.empty())
            std::cout << "    " << f.note << "\n";
    }
}

int report(const horadam::VerifyReport& r, bool as_json)
{
    if (as_json) {
        std::cout << horadam::to_json(r).dump(2) << "\n";
    } else {
        std::cout << "total:   " << r.total << "\n";
        std::cout << "passed:  " << r.passed << "\n";
        std::cout << "skipped: " << r.skipped_total() << "\n";
        for (const auto& [reason, count] : r.skipped)
            std::cout << "  " << reason << ": " << count << "\n";
        std::cout << "failed:  " << r.failed.size() << "\n";
        print_findings("failures", r.failed);
        print_findings("documented", r.documented);
    }
    return r.ok() ? 0 : kExitFailures;
}

int run_verify(const VerifyArgs& args)
{
    horadam::GridConfig config = args.grid ? horadam::load_grid(*args.grid) : horadam::default_grid();
    if (args.seed)
        config.seed = *args.seed;
    horadam::VerifyOptions options;
    options.inject_fault = args.inject_fault;
    options.threads = args.threads;
    return report(horadam::run_grid(config, options), args.json);
}

int run_fixtures(const VerifyArgs& args)
{
    horadam::VerifyOptions options;
    options.inject_fault = args.inject_fault;
    return report(horadam::run_fixtures(options), args.json);
}

int run_classics(const ClassicsArgs& args)
{
    json out;
    if (args.good) {
        const std::int64_t N = *args.good;
        const Rational closed = horadam::classic_good(N);
        out["closed"] = closed.str();
        if (N <= 20) {
            const Rational direct = horadam::oracle::good_direct(N);
            out["direct"] = direct.str();
            out["difference"] = (closed - direct).str();
        }
    } else {
        const Quadratic closed = horadam::classic_miller();
        const Rational direct = horadam::oracle::good_direct(12);
        out["closed"] = {{"exact", horadam::exact_text(closed)}, {"decimal", decimal(closed, args.precision)}};
        out["direct"] = {{"partial_decimal", decimal(direct, args.precision)},
                         {"tail_bound", decimal(horadam::oracle::good_tail_bound(12), 6)},
                         {"terms_used", 13}};
        out["difference"] = decimal(abs(closed - direct), 6);
    }
    if (args.json) {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    auto text = [](const json& j, const char* key) {
        return j[key].is_string() ? j[key].get<std::string>() : j[key]["exact"].get<std::string>();
    };
    std::cout << "closed:  " << text(out, "closed") << "\n";
    if (out["closed"].is_object())
        std::cout << "         " << out["closed"]["decimal"].get<std::string>() << "\n";
    if (out.contains("direct")) {
        if (out["direct"].is_string())
            std::cout << "direct:  " << out["direct"].get<std::string>() << "\n";
        else
            std::cout << "direct:  " << out["direct"]["partial_decimal"].get<std::string>() << " (sum to N = 12, tail <= "
                      << out["direct"]["tail_bound"].get<std::string>() << ")\n";
        std::cout << "diff:    " << out["difference"].get<std::string>() << "\n";
    } else {
        std::cout << "direct:  not computed for N > 20\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Closed forms of reciprocal Horadam sums, with exact verification"};
    app.require_subcommand(1);

    EvalArgs eval;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate one sum");
    eval_cmd->add_option("--family", eval.family, "Family id, e.g. T1_FIN or C2_INF")->required();
    eval_cmd->add_option("--a", eval.a, "Seed w_0 (num/den)");
    eval_cmd->add_option("--b", eval.b, "Seed w_1 (num/den)");
    eval_cmd->add_option("--p", eval.p, "Recurrence coefficient p")->required();
    eval_cmd->add_option("--q", eval.q, "Recurrence coefficient q")->required();
    eval_cmd->add_option("--kind", eval.kind, "W, U or V")->capture_default_str();
    eval_cmd->add_option("--m", eval.m)->capture_default_str();
    eval_cmd->add_option("--k", eval.k)->capture_default_str();
    eval_cmd->add_option("--n", eval.n)->capture_default_str();
    eval_cmd->add_option("--N", eval.N, "Upper limit of finite sums")->capture_default_str();
    eval_cmd->add_option("--sign", eval.sign, "+ or - for the signed families")->capture_default_str();
    eval_cmd->add_option("--mode", eval.mode)
        ->check(CLI::IsMember({"closed", "direct", "both"}))
        ->capture_default_str();
    eval_cmd->add_option("--precision", eval.precision, "Significant decimal digits")
        ->check(CLI::Range(1, 100000))
        ->capture_default_str();
    eval_cmd->add_option("--tol-digits", eval.tol_digits, "Direct infinite sums stop at tail <= 10^-D")
        ->check(CLI::Range(1, 1000))
        ->capture_default_str();
    eval_cmd->add_flag("--json", eval.json);

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run grid verification");
    verify_cmd->add_option("--grid", verify.grid, "Grid config file (default: built-in grid)");
    verify_cmd->add_option("--seed", verify.seed, "Override the config seed");
    verify_cmd->add_option("--threads", verify.threads, "Worker threads (0 = all cores)");
    verify_cmd->add_flag("--json", verify.json);
    verify_cmd->add_flag("--inject-fault", verify.inject_fault)->group("");

    VerifyArgs fixtures;
    auto* fixtures_cmd = app.add_subcommand("fixtures", "Check Fibonacci and Lucas specializations and classics");
    fixtures_cmd->add_flag("--json", fixtures.json);
    fixtures_cmd->add_flag("--inject-fault", fixtures.inject_fault)->group("");

    ClassicsArgs classics;
    auto* classics_cmd = app.add_subcommand("classics", "Good's finite sum or Miller's series");
    auto* good_opt = classics_cmd->add_option("--good", classics.good, "Upper limit N of Good's sum");
    auto* miller_opt = classics_cmd->add_flag("--miller", classics.miller);
    good_opt->excludes(miller_opt);
    classics_cmd->add_option("--precision", classics.precision)->check(CLI::Range(1, 100000))->capture_default_str();
    classics_cmd->add_flag("--json", classics.json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*eval_cmd)
            return run_eval(eval);
        if (*verify_cmd)
            return run_verify(verify);
        if (*fixtures_cmd)
            return run_fixtures(fixtures);
        if (!classics.good && !classics.miller) {
            std::cerr << "classics: give --good N or --miller\n";
            return kExitParse;
        }
        return run_classics(classics);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::parse ? kExitParse : kExitInvalid;
    }
}
