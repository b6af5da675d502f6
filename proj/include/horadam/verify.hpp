#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "horadam/families.hpp"
#include "horadam/rational.hpp"

namespace horadam {

/// Parameter lists swept by run_grid. Every list except families and
/// relations must be nonempty.
struct GridConfig {
    std::vector<Rational> a, b, p, q;
    std::vector<std::int64_t> m, k, n, N;
    std::vector<Family> families;
    /// Which of the two Lucas-sequence relations to sweep over (p, q, m, k, N).
    std::vector<int> relations;
    Rational infinite_tol = pow10(-30);
    std::uint64_t seed = 0;
    /// 0 runs every case; otherwise a seeded random subset of this size.
    std::int64_t max_cases = 0;
};

/// The shipped desk-scale grid.
GridConfig default_grid();

/// Flat text format, one "key = v1, v2, ..." per line, '#' starts a comment.
/// Integer lists accept "lo..hi" ranges; a, b, p, q accept "num/den";
/// families accepts names or "all"; infinite_tol accepts "1e-30" or "num/den".
/// Keys left out keep their default_grid() value. Throws Error(parse).
GridConfig parse_grid(std::string_view text);
GridConfig load_grid(const std::filesystem::path& path);

/// One failed or documented check. lhs and rhs are exact renderings.
struct Finding {
    std::string check;
    nlohmann::json spec;
    std::string lhs;
    std::string rhs;
    std::string abs_diff_decimal;
    std::string note;
};

struct VerifyReport {
    std::int64_t total = 0;
    std::int64_t passed = 0;
    std::map<std::string, std::int64_t> skipped;
    /// Passed checks per family name ("relation 1", fixture names, ...).
    std::map<std::string, std::int64_t> passed_by_family;
    std::vector<Finding> failed;
    /// Known disagreements between a displayed formula and the oracle. Kept
    /// out of total, passed and failed.
    std::vector<Finding> documented;

    std::int64_t skipped_total() const;
    bool ok() const { return failed.empty(); }
};

nlohmann::json to_json(const VerifyReport& report);
nlohmann::json to_json(const SumSpec& spec);

struct VerifyOptions {
    /// Perturbs every closed value; used to check that the harness notices.
    bool inject_fault = false;
    /// 0 picks the hardware concurrency.
    unsigned threads = 0;
};

/// Validates every enumerated case and checks the valid ones: finite families
/// by exact equality of closed, direct and alternative forms; infinite
/// families by |closed - partial| <= tail <= infinite_tol; relations by a zero
/// residual. Deterministic for a given config.
VerifyReport run_grid(const GridConfig& config, const VerifyOptions& options = {});

/// Hard-coded Fibonacci and Lucas specializations compared against the
/// general evaluators, plus the Good and Miller classics.
VerifyReport run_fixtures(const VerifyOptions& options = {});

/// Exact text of a value: "num/den" for rationals, "x + y*sqrt(D)" otherwise.
std::string exact_text(const Quadratic& value);

} // namespace horadam
