#include "horadam/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <thread>
#include <variant>

#include "horadam/decimal.hpp"
#include "horadam/error.hpp"
#include "horadam/oracle.hpp"
#include "horadam/sequence.hpp"

namespace horadam {

namespace {

using nlohmann::json;

// Digits used for abs_diff_decimal in findings.
constexpr int kReportDigits = 30;

[[noreturn]] void parse_error(std::size_t line, const std::string& what)
{
    throw Error(ErrorKind::parse, "grid line " + std::to_string(line) + ": " + what);
}

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_items(std::string_view value)
{
    std::vector<std::string> items;
    std::size_t start = 0;
    while (start <= value.size()) {
        const auto comma = value.find(',', start);
        const auto end = comma == std::string_view::npos ? value.size() : comma;
        items.push_back(trim(value.substr(start, end - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    if (items.size() == 1 && items[0].empty())
        items.clear();
    return items;
}

std::int64_t parse_int(const std::string& text, std::size_t line)
{
    std::int64_t value = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        parse_error(line, "not an integer: '" + text + "'");
    return value;
}

std::vector<std::int64_t> parse_int_list(std::string_view value, std::size_t line)
{
    std::vector<std::int64_t> out;
    for (const std::string& item : split_items(value)) {
        if (item.empty())
            parse_error(line, "empty list item");
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_int(item, line));
            continue;
        }
        const std::int64_t lo = parse_int(trim(item.substr(0, dots)), line);
        const std::int64_t hi = parse_int(trim(item.substr(dots + 2)), line);
        if (hi < lo)
            parse_error(line, "empty range '" + item + "'");
        if (hi - lo > 100000)
            parse_error(line, "range too long '" + item + "'");
        for (std::int64_t v = lo; v <= hi; ++v)
            out.push_back(v);
    }
    return out;
}

std::vector<Rational> parse_rational_list(std::string_view value, std::size_t line)
{
    std::vector<Rational> out;
    for (const std::string& item : split_items(value)) {
        if (item.find("..") != std::string::npos) {
            for (std::int64_t v : parse_int_list(item, line))
                out.emplace_back(static_cast<long>(v));
            continue;
        }
        try {
            out.push_back(Rational::parse(item));
        } catch (const Error& e) {
            parse_error(line, e.what());
        }
    }
    return out;
}

// "1e-30", "1/1000" or "0.001".
std::optional<Rational> tolerance_value(const std::string& text)
{
    std::string head = text;
    std::int64_t exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string::npos) {
        head = text.substr(0, e);
        const std::string tail = text.substr(e + 1);
        auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), exponent);
        if (ec != std::errc{} || ptr != tail.data() + tail.size())
            return std::nullopt;
    }
    if (const auto dot = head.find('.'); dot != std::string::npos) {
        exponent -= static_cast<std::int64_t>(head.size() - dot - 1);
        head.erase(dot, 1);
    }
    try {
        return Rational::parse(head) * pow10(exponent);
    } catch (const Error&) {
        return std::nullopt;
    }
}

template <class T>
void require_nonempty(const std::vector<T>& values, const std::string& key, std::size_t line)
{
    if (values.empty())
        parse_error(line, "'" + key + "' needs at least one value");
}

std::string decimal_text(const Quadratic& value)
{
    return to_decimal(value, kReportDigits).str();
}

std::string decimal_text(const Rational& value)
{
    return to_decimal(value, kReportDigits).str();
}

Quadratic embed(const Rational& value, const Rational& disc)
{
    return Quadratic::from_rational(value, disc);
}

// One enumerated grid case. Parameters are kept raw so invalid (p, q) can be
// reported as skips rather than aborting the enumeration.
struct Case {
    Rational a, b, p, q;
    Family family = Family::T1_FIN;
    int relation = 0;  // nonzero for a relation case
    std::int64_t m = 1, k = 1, n = 0, N = 0;
    int sign = 1;
};

struct Pass {
    std::string label;
};
struct Skip {
    std::string reason;
};
using Outcome = std::variant<Pass, Skip, Finding>;

json case_json(const Case& c)
{
    json j;
    if (c.relation != 0) {
        j["relation"] = c.relation;
        j["p"] = c.p.str();
        j["q"] = c.q.str();
        j["m"] = c.m;
        j["k"] = c.k;
        j["N"] = c.N;
        return j;
    }
    j["family"] = std::string(to_string(c.family));
    j["a"] = c.a.str();
    j["b"] = c.b.str();
    j["p"] = c.p.str();
    j["q"] = c.q.str();
    j["m"] = c.m;
    j["k"] = c.k;
    j["n"] = c.n;
    j["N"] = c.N;
    j["sign"] = c.sign;
    return j;
}

Finding mismatch(const std::string& check, json spec, const Quadratic& lhs, const Quadratic& rhs,
                 std::string note = {})
{
    Finding f;
    f.check = check;
    f.spec = std::move(spec);
    f.lhs = exact_text(lhs);
    f.rhs = exact_text(rhs);
    f.abs_diff_decimal = lhs.disc() == rhs.disc() ? decimal_text(abs(lhs - rhs)) : "n/a";
    f.note = std::move(note);
    return f;
}

Rational fault(const VerifyOptions& options)
{
    return options.inject_fault ? Rational(1, 1000) : Rational(0);
}

Outcome check_finite(const SumSpec& spec, const json& id, const VerifyOptions& options)
{
    const Rational closed = eval_finite_closed(spec).exact.x() + fault(options);
    const Rational direct = oracle::direct_finite(spec);
    const Rational equivalent = eval_finite_equivalent(spec).exact.x();
    const Rational& disc = spec.params.disc();
    if (closed != direct)
        return mismatch("closed = direct", id, embed(closed, disc), embed(direct, disc));
    if (equivalent != direct)
        return mismatch("alternative = direct", id, embed(equivalent, disc), embed(direct, disc));
    return Pass{std::string(to_string(spec.family))};
}

// |closed - partial| <= tail <= tol, decided exactly.
std::optional<Finding> bracket(const std::string& check, const json& id, const Quadratic& closed,
                               const oracle::InfiniteSum& sum, const Rational& tol)
{
    const Quadratic gap = abs(closed - sum.partial);
    const bool inside = sign(Quadratic::from_rational(sum.tail_bound, closed.disc()) - gap) != Sign::negative;
    if (inside && sum.tail_bound <= tol)
        return std::nullopt;
    Finding f = mismatch(check, id, closed, embed(sum.partial, closed.disc()));
    f.note = "tail bound " + decimal_text(sum.tail_bound) + " after " + std::to_string(sum.terms_used) + " terms";
    return f;
}

Outcome check_infinite(const SumSpec& spec, const json& id, const Rational& tol, const VerifyOptions& options)
{
    const Quadratic closed = eval_infinite_closed(spec).exact + fault(options);
    const oracle::InfiniteSum sum = oracle::direct_infinite(spec, tol);
    if (auto f = bracket("closed brackets partial", id, closed, sum, tol))
        return *f;
    return Pass{std::string(to_string(spec.family))};
}

Outcome check_case(const Case& c, const GridConfig& config, const VerifyOptions& options)
{
    const json id = case_json(c);
    try {
        if (c.relation != 0) {
            const Rational residual = byproduct_residual(c.relation, c.p, c.q, c.m, c.k, c.N);
            if (!residual.is_zero())
                return mismatch("relation residual = 0", id, embed(residual, Rational(5)),
                                embed(Rational(0), Rational(5)));
            return Pass{"relation " + std::to_string(c.relation)};
        }
        SumSpec spec{HoradamParams(c.a, c.b, c.p, c.q), SeqKind::W, c.family, c.m, c.k, c.n, c.N, c.sign};
        if (is_infinite(c.family))
            return check_infinite(spec, id, config.infinite_tol, options);
        return check_finite(spec, id, options);
    } catch (const Error& e) {
        return Skip{std::string(to_string(e.kind()))};
    }
}

std::vector<Case> enumerate(const GridConfig& config)
{
    std::vector<Case> cases;
    for (Family family : config.families) {
        const bool seeds = uses_seeds(family);
        const std::size_t a_count = seeds ? config.a.size() : 1;
        const std::size_t b_count = seeds ? config.b.size() : 1;
        const std::vector<std::int64_t> ns = uses_n(family) ? config.n : std::vector<std::int64_t>{0};
        const std::vector<std::int64_t> Ns = is_infinite(family) ? std::vector<std::int64_t>{0} : config.N;
        const std::vector<int> signs = is_signed(family) ? std::vector<int>{1, -1} : std::vector<int>{1};
        for (const Rational& p : config.p)
            for (const Rational& q : config.q)
                for (std::size_t ia = 0; ia < a_count; ++ia)
                    for (std::size_t ib = 0; ib < b_count; ++ib)
                        for (std::int64_t m : config.m)
                            for (std::int64_t k : config.k)
                                for (std::int64_t n : ns)
                                    for (std::int64_t N : Ns)
                                        for (int s : signs) {
                                            Case c;
                                            c.a = seeds ? config.a[ia] : Rational(0);
                                            c.b = seeds ? config.b[ib] : Rational(1);
                                            c.p = p;
                                            c.q = q;
                                            c.family = family;
                                            c.m = m;
                                            c.k = k;
                                            c.n = n;
                                            c.N = N;
                                            c.sign = s;
                                            cases.push_back(std::move(c));
                                        }
    }
    for (int relation : config.relations)
        for (const Rational& p : config.p)
            for (const Rational& q : config.q)
                for (std::int64_t m : config.m)
                    for (std::int64_t k : config.k)
                        for (std::int64_t N : config.N) {
                            Case c;
                            c.p = p;
                            c.q = q;
                            c.relation = relation;
                            c.m = m;
                            c.k = k;
                            c.N = N;
                            cases.push_back(std::move(c));
                        }
    return cases;
}

// Seeded subset of `count` cases, kept in enumeration order. The generator's
// raw output is reduced by modulo so the choice does not depend on the
// standard library's distribution implementations.
std::vector<Case> select(std::vector<Case> cases, std::int64_t count, std::uint64_t seed)
{
    if (count <= 0 || count >= static_cast<std::int64_t>(cases.size()))
        return cases;
    std::vector<std::size_t> order(cases.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::mt19937_64 rng(seed);
    const auto wanted = static_cast<std::size_t>(count);
    for (std::size_t i = 0; i < wanted; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng() % (order.size() - i));
        std::swap(order[i], order[j]);
    }
    order.resize(wanted);
    std::sort(order.begin(), order.end());
    std::vector<Case> out;
    out.reserve(wanted);
    for (std::size_t i : order)
        out.push_back(std::move(cases[i]));
    return out;
}

void tally(VerifyReport& report, Outcome outcome)
{
    ++report.total;
    if (auto* pass = std::get_if<Pass>(&outcome)) {
        ++report.passed;
        ++report.passed_by_family[pass->label];
    }
    else if (auto* skip = std::get_if<Skip>(&outcome))
        ++report.skipped[skip->reason];
    else
        report.failed.push_back(std::move(std::get<Finding>(outcome)));
}

// Fixture bookkeeping: each check either passes or adds a failure.
class FixtureRun {
public:
    explicit FixtureRun(VerifyReport& report) : report_(report) {}

    void check(const std::string& name, json id, const std::function<std::optional<Finding>()>& body)
    {
        ++report_.total;
        try {
            if (auto f = body()) {
                f->check = name;
                f->spec = std::move(id);
                report_.failed.push_back(std::move(*f));
            } else {
                ++report_.passed;
                ++report_.passed_by_family[name];
            }
        } catch (const Error& e) {
            Finding f;
            f.check = name;
            f.spec = std::move(id);
            f.note = e.what();
            report_.failed.push_back(std::move(f));
        }
    }

    void document(Finding f) { report_.documented.push_back(std::move(f)); }

private:
    VerifyReport& report_;
};

std::optional<Finding> all_equal(std::initializer_list<Quadratic> values)
{
    const Quadratic& first = *values.begin();
    for (const Quadratic& v : values)
        if (!(v == first))
            return mismatch("", json(), first, v);
    return std::nullopt;
}

json fixture_id(const std::string& name, std::int64_t m, std::optional<std::int64_t> n, std::optional<std::int64_t> N)
{
    json j;
    j["fixture"] = name;
    j["m"] = m;
    if (n)
        j["n"] = *n;
    if (N)
        j["N"] = *N;
    return j;
}

// Fibonacci and Lucas instances of (p, q) = (1, -1).
struct Classic {
    HoradamParams fib = HoradamParams::lucas_u(Rational(1), Rational(-1));
    HoradamParams luc = HoradamParams::lucas_v(Rational(1), Rational(-1));
    Rational five = Rational(5);

    Rational F(std::int64_t j) const { return term(fib, j); }
    Rational L(std::int64_t j) const { return term(luc, j); }
    const Quadratic& phi() const { return fib.alpha(); }
    Quadratic phi_pow(std::int64_t j) const { return pow(fib.alpha(), j); }
    Quadratic q(const Rational& r) const { return Quadratic::from_rational(r, five); }

    SumSpec spec(bool lucas, Family family, std::int64_t m, std::int64_t k, std::int64_t n, std::int64_t N) const
    {
        return SumSpec{lucas ? luc : fib, lucas ? SeqKind::V : SeqKind::U, family, m, k, n, N, 1};
    }
};

Rational parity(std::int64_t m)
{
    return Rational(m % 2 == 0 ? 1 : -1);
}

void finite_specializations(FixtureRun& run, const Classic& c, const VerifyOptions& options)
{
    const Rational perturb = fault(options);
    for (std::int64_t m = 1; m <= 3; ++m)
        for (std::int64_t n = 1; n <= 3; ++n)
            for (std::int64_t N = 1; N <= 5; ++N) {
                run.check("Fibonacci finite", fixture_id("Fibonacci finite", m, n, N), [&]() -> std::optional<Finding> {
                    const SumSpec s = c.spec(false, Family::T1_FIN, m, 1, n, N);
                    const Rational printed = (c.F(m * (N + 1)) / c.F(m * (N + 1) + n) + c.F(m * N) / c.F(m * N + n) -
                                              c.F(m) / c.F(m + n)) /
                                             (c.F(n) * c.F(2 * m));
                    return all_equal({c.q(printed), c.q(eval_finite_closed(s).exact.x() + perturb),
                                      c.q(oracle::direct_finite(s))});
                });
                run.check("Lucas finite", fixture_id("Lucas finite", m, n, N), [&]() -> std::optional<Finding> {
                    const SumSpec s = c.spec(true, Family::T1_FIN, m, 1, n, N);
                    const Rational printed = (Rational(2) / c.L(n) + c.L(m) / c.L(m + n) - c.L(m * N) / c.L(m * N + n) -
                                              c.L(m * (N + 1)) / c.L(m * (N + 1) + n)) /
                                             (Rational(5) * c.F(n) * c.F(2 * m));
                    return all_equal({c.q(printed), c.q(eval_finite_closed(s).exact.x() + perturb),
                                      c.q(oracle::direct_finite(s))});
                });
            }
    for (std::int64_t m = 1; m <= 3; ++m)
        for (std::int64_t N = 1; N <= 5; ++N)
            run.check("Lucas n=0 forms", fixture_id("Lucas n=0 finite", m, std::nullopt, N),
                      [&]() -> std::optional<Finding> {
                          const SumSpec s = c.spec(true, Family::T2_FIN, m, 1, 0, N);
                          const Rational ratio_form =
                              (c.L(m * (N + 1) + 1) / c.L(m * (N + 1)) + c.L(m * N + 1) / c.L(m * N) -
                               c.L(m + 1) / c.L(m) - Rational(1, 2)) /
                              (Rational(5) * c.F(2 * m));
                          const Rational mixed_form = (c.F(m * (N + 1)) / c.L(m * (N + 1)) +
                                                       c.F(m * N) / c.L(m * N) - c.F(m) / c.L(m)) /
                                                      (Rational(2) * c.F(2 * m));
                          return all_equal({c.q(ratio_form), c.q(mixed_form),
                                            c.q(eval_finite_closed(s).exact.x() + perturb),
                                            c.q(oracle::direct_finite(s))});
                      });
}

// General value (times `factor`) against the printed right side, then the
// oracle against the general value when the spec is admissible.
void infinite_fixture(FixtureRun& run, const std::string& name, json id, const SumSpec& spec, const Rational& factor,
                      const Quadratic& printed, const VerifyOptions& options)
{
    const Rational tol = pow10(-40);
    run.check(name, id, [&]() -> std::optional<Finding> {
        const Quadratic general = eval_infinite_closed(spec, SignParity::as_printed).exact * factor + fault(options);
        if (auto f = all_equal({printed, general}))
            return f;
        bool admissible = true;
        try {
            validate(spec);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::bad_parameter)
                throw;
            admissible = false;
        }
        if (!admissible) {
            // The displayed value follows the formula but not the series;
            // record how far the series actually lands from it.
            const oracle::InfiniteSum sum = oracle::direct_infinite(spec, tol);
            const Quadratic series = Quadratic::from_rational(sum.partial * factor, printed.disc());
            Finding f = mismatch(name, id, series, printed,
                                 "series sum (lhs, decimal, within 1e-40) differs from the displayed value "
                                 "(rhs); the alternating identity needs even k");
            f.lhs = to_decimal(series, 40).str();
            run.document(std::move(f));
            return std::nullopt;
        }
        oracle::InfiniteSum sum = oracle::direct_infinite(spec, tol);
        sum.partial *= factor;
        return bracket(name, id, general, sum, tol);
    });
}

void infinite_specializations(FixtureRun& run, const Classic& c, const VerifyOptions& options)
{
    const Rational one(1);
    for (std::int64_t m = 1; m <= 3; ++m)
        for (std::int64_t n = 1; n <= 3; ++n) {
            const Quadratic inv_phi_n = c.phi_pow(-n);
            const Rational fib_pre = one / (c.F(n) * c.F(2 * m));
            const Rational luc_pre = one / (Rational(5) * c.F(n) * c.F(2 * m));
            const Rational fib_pre4 = one / (c.F(n) * c.F(4 * m));
            const Rational luc_pre4 = one / (Rational(5) * c.F(n) * c.F(4 * m));

            infinite_fixture(run, "Fibonacci series", fixture_id("Fibonacci series", m, n, std::nullopt),
                             c.spec(false, Family::C2_INF, m, 1, n, 0), one,
                             (inv_phi_n * Rational(2) - c.F(m) / c.F(m + n)) * fib_pre, options);
            infinite_fixture(run, "Lucas series", fixture_id("Lucas series", m, n, std::nullopt),
                             c.spec(true, Family::C2_INF, m, 1, n, 0), one,
                             (c.q(Rational(2) / c.L(n) + c.L(m) / c.L(m + n)) - inv_phi_n * Rational(2)) * luc_pre,
                             options);

            const struct {
                const char* name;
                bool lucas;
                Family family;
                std::int64_t k;
                Quadratic printed;
            } series[] = {
                {"series 1", false, Family::C9_INF, 1, (inv_phi_n - c.F(m) / c.F(m + n)) * (parity(m) * fib_pre)},
                {"series 2", false, Family::C9_INF, 2, (inv_phi_n * Rational(2) - c.F(2 * m) / c.F(2 * m + n)) * fib_pre4},
                {"series 3", true, Family::C9_INF, 1, (c.q(c.L(m) / c.L(m + n)) - inv_phi_n) * (parity(m) * luc_pre)},
                {"series 4", true, Family::C9_INF, 2,
                 (c.q(Rational(2) / c.L(n) + c.L(2 * m) / c.L(2 * m + n)) - inv_phi_n * Rational(2)) * luc_pre4},
                {"series 5", false, Family::C9_INF_ALT, 1, c.q(parity(m) * c.F(m) * fib_pre / c.F(m + n))},
                {"series 6", false, Family::C9_INF_ALT, 2, c.q(-c.F(2 * m) * fib_pre4 / c.F(2 * m + n))},
                {"series 7", true, Family::C9_INF_ALT, 1, c.q(-parity(m) * c.L(m) * luc_pre / c.L(m + n))},
                {"series 8", true, Family::C9_INF_ALT, 2,
                 c.q((c.L(2 * m) / c.L(2 * m + n) - Rational(2) / c.L(n)) * luc_pre4)},
            };
            for (const auto& s : series) {
                // The listed sums drop the q-weight, which is (-1)^{mk} here.
                const Rational factor = s.k % 2 == 0 ? one : parity(m);
                infinite_fixture(run, s.name, fixture_id(s.name, m, n, std::nullopt),
                                 c.spec(s.lucas, s.family, m, s.k, n, 0), factor, s.printed, options);
            }
        }
    for (std::int64_t m = 1; m <= 3; ++m) {
        const Quadratic ratio_form =
            (c.phi() * Rational(2) - c.L(m + 1) / c.L(m) - Rational(1, 2)) / (Rational(5) * c.F(2 * m));
        const Quadratic mixed_form = Quadratic::sqrt_of(c.five).inverse() / c.F(2 * m) -
                                     c.q(one / (Rational(2) * c.L(m) * c.L(m)));
        run.check("Lucas n=0 forms", fixture_id("Lucas n=0 infinite", m, std::nullopt, std::nullopt),
                  [&]() { return all_equal({ratio_form, mixed_form}); });
        infinite_fixture(run, "Lucas n=0 limit", fixture_id("Lucas n=0 limit", m, std::nullopt, std::nullopt),
                         c.spec(true, Family::C3_INF, m, 1, 0, 0), one, ratio_form, options);
    }
}

void classics(FixtureRun& run, const VerifyOptions& options)
{
    const Rational perturb = fault(options);
    for (std::int64_t N = 1; N <= 12; ++N)
        run.check("Good", fixture_id("Good", 0, std::nullopt, N), [&]() -> std::optional<Finding> {
            return all_equal({Quadratic::from_rational(classic_good(N) + perturb, Rational(5)),
                              Quadratic::from_rational(oracle::good_direct(N), Rational(5))});
        });
    {
        Finding f = mismatch("Good at N = 0", fixture_id("Good", 0, std::nullopt, 0),
                             Quadratic::from_rational(classic_good(0), Rational(5)),
                             Quadratic::from_rational(oracle::good_direct(0), Rational(5)),
                             "the closed formula (lhs) holds only for N >= 1; the sum (rhs) is 1");
        run.document(std::move(f));
    }
    run.check("Miller", json{{"fixture", "Miller"}}, [&]() -> std::optional<Finding> {
        const Quadratic miller = classic_miller() + perturb;
        const oracle::InfiniteSum sum{oracle::good_direct(12), oracle::good_tail_bound(12), 13};
        return bracket("Miller", json(), miller, sum, pow10(-30));
    });

    const Rational p(1), q(-1);
    run.check("relation 2", json{{"fixture", "relation 2"}, {"m", 2}, {"k", 1}, {"N", 4}},
              [&]() -> std::optional<Finding> {
                  const Rational r = byproduct_residual(2, p, q, 2, 1, 4) + perturb;
                  if (r.is_zero())
                      return std::nullopt;
                  return mismatch("", json(), Quadratic::from_rational(r, Rational(5)),
                                  Quadratic::from_rational(Rational(0), Rational(5)));
              });
    const Rational printed = byproduct_residual(2, p, q, 2, 1, 4, true);
    run.document(mismatch("relation 2 with +1 numerator", json{{"fixture", "relation 2"}, {"m", 2}, {"k", 1}, {"N", 4}},
                          Quadratic::from_rational(printed, Rational(5)),
                          Quadratic::from_rational(Rational(0), Rational(5)),
                          "residual (lhs) of the +1 variant is nonzero"));
}

} // namespace

GridConfig default_grid()
{
    GridConfig g;
    g.a = {Rational(0), Rational(1), Rational(2)};
    g.b = g.a;
    g.p = {Rational(1), Rational(2), Rational(3)};
    g.q = {Rational(-2), Rational(-1), Rational(1), Rational(2)};
    g.m = {1, 2, 3};
    g.k = {1, 2, 3};
    g.n = {1, 2};
    g.N = {0, 1, 2, 3, 4, 5, 6};
    g.families.assign(all_families().begin(), all_families().end());
    g.relations = {1, 2};
    return g;
}

GridConfig parse_grid(std::string_view text)
{
    GridConfig g = default_grid();
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const std::string body = trim(std::string_view(raw).substr(0, hash));
        if (body.empty())
            continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            parse_error(line, "expected 'key = values'");
        const std::string key = trim(std::string_view(body).substr(0, eq));
        const std::string value = trim(std::string_view(body).substr(eq + 1));

        if (key == "a" || key == "b" || key == "p" || key == "q") {
            auto list = parse_rational_list(value, line);
            require_nonempty(list, key, line);
            (key == "a" ? g.a : key == "b" ? g.b : key == "p" ? g.p : g.q) = std::move(list);
        } else if (key == "m" || key == "k" || key == "n" || key == "N") {
            auto list = parse_int_list(value, line);
            require_nonempty(list, key, line);
            (key == "m" ? g.m : key == "k" ? g.k : key == "n" ? g.n : g.N) = std::move(list);
        } else if (key == "families") {
            g.families.clear();
            for (const std::string& item : split_items(value)) {
                if (item == "all") {
                    g.families.assign(all_families().begin(), all_families().end());
                    continue;
                }
                auto family = parse_family(item);
                if (!family)
                    parse_error(line, "unknown family '" + item + "'");
                g.families.push_back(*family);
            }
        } else if (key == "relations") {
            g.relations.clear();
            for (std::int64_t r : parse_int_list(value, line)) {
                if (r != 1 && r != 2)
                    parse_error(line, "relation must be 1 or 2");
                g.relations.push_back(static_cast<int>(r));
            }
        } else if (key == "infinite_tol") {
            auto tol = tolerance_value(value);
            if (!tol)
                parse_error(line, "bad tolerance '" + value + "'");
            g.infinite_tol = std::move(*tol);
            if (g.infinite_tol.sign() <= 0)
                parse_error(line, "infinite_tol must be positive");
        } else if (key == "seed") {
            const std::int64_t seed = parse_int(value, line);
            if (seed < 0)
                parse_error(line, "seed must be >= 0");
            g.seed = static_cast<std::uint64_t>(seed);
        } else if (key == "max_cases") {
            g.max_cases = parse_int(value, line);
            if (g.max_cases < 0)
                parse_error(line, "max_cases must be >= 0");
        } else {
            parse_error(line, "unknown key '" + key + "'");
        }
    }
    return g;
}

GridConfig load_grid(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::parse, "cannot read grid file " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_grid(text.str());
}

std::int64_t VerifyReport::skipped_total() const
{
    std::int64_t total = 0;
    for (const auto& [reason, count] : skipped)
        total += count;
    return total;
}

json to_json(const SumSpec& spec)
{
    json j;
    j["family"] = std::string(to_string(spec.family));
    j["kind"] = std::string(to_string(spec.kind));
    j["a"] = spec.params.a().str();
    j["b"] = spec.params.b().str();
    j["p"] = spec.params.p().str();
    j["q"] = spec.params.q().str();
    j["m"] = spec.m;
    j["k"] = spec.k;
    j["n"] = spec.n;
    j["N"] = spec.N;
    j["sign"] = spec.sign;
    return j;
}

namespace {

json finding_json(const Finding& f)
{
    json j;
    j["check"] = f.check;
    j["spec"] = f.spec;
    j["lhs"] = f.lhs;
    j["rhs"] = f.rhs;
    j["abs_diff_decimal"] = f.abs_diff_decimal;
    if (!f.note.empty())
        j["note"] = f.note;
    return j;
}

} // namespace

json to_json(const VerifyReport& report)
{
    json j;
    j["total"] = report.total;
    j["passed"] = report.passed;
    j["skipped"] = json::object();
    for (const auto& [reason, count] : report.skipped)
        j["skipped"][reason] = count;
    j["passed_by_family"] = json::object();
    for (const auto& [label, count] : report.passed_by_family)
        j["passed_by_family"][label] = count;
    j["failed"] = json::array();
    for (const Finding& f : report.failed)
        j["failed"].push_back(finding_json(f));
    j["documented"] = json::array();
    for (const Finding& f : report.documented)
        j["documented"].push_back(finding_json(f));
    return j;
}

VerifyReport run_grid(const GridConfig& config, const VerifyOptions& options)
{
    const std::vector<Case> cases = select(enumerate(config), config.max_cases, config.seed);
    std::vector<Outcome> outcomes(cases.size());

    unsigned threads = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(cases.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++)
            outcomes[i] = check_case(cases[i], config, options);
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    pool.clear();

    VerifyReport report;
    for (Outcome& outcome : outcomes)
        tally(report, std::move(outcome));
    return report;
}

VerifyReport run_fixtures(const VerifyOptions& options)
{
    VerifyReport report;
    FixtureRun run(report);
    const Classic c;
    finite_specializations(run, c, options);
    infinite_specializations(run, c, options);
    classics(run, options);
    return report;
}

std::string exact_text(const Quadratic& value)
{
    if (value.is_rational())
        return value.x().str();
    return value.str();
}

} // namespace horadam
