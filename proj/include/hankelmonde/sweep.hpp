#pragma once

// Verification sweeps over a grid of parameter tuples. Each tuple runs the
// requested checks independently on a small worker pool; results are
// collected in grid order.

#include "hankelmonde/generators.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hankelmonde {

inline constexpr int kReportFormatVersion = 1;

struct Range {
    unsigned lo = 1;
    unsigned hi = 1;
};

/// "a..b" or "a". Throws InvalidArgument on anything else.
Range parse_range(const std::string& text);

/// Deliberate corruption of a generated matrix, for negative controls.
enum class FaultTarget { CalAbar, K };

struct Fault {
    FaultTarget target = FaultTarget::CalAbar;
    std::size_t row = 0;
    std::size_t col = 0;
    Rational delta{1};
};

/// "calAbar:i,j" or "K:i,j". Throws InvalidArgument otherwise.
Fault parse_fault(const std::string& text);

/// m with delta added at (row, col); unchanged if that entry does not exist.
PolyMatrix apply_fault(PolyMatrix m, const Fault& fault);

enum class ReportFormat { Json, Csv };

struct SweepConfig {
    Range q_range{1, 3};
    Range r_range{1, 3};
    Range mu_range{1, 3};
    Range nu_range{1, 3};
    std::vector<std::string> checks = all_checks_default();
    std::size_t sample_count = 3;
    std::uint64_t seed = 20240101;
    std::string output_path;
    ReportFormat format = ReportFormat::Json;
    unsigned workers = 0; // 0: hardware concurrency
    std::optional<Fault> fault;

    /// Throws InvalidArgument on an empty or zero-based range, sample_count 0
    /// or an unknown check label.
    void validate() const;

    static std::vector<std::string> all_checks_default();
};

/// The 15 identity labels, then rank, det, kernelN0, kernelN, kernelM, rightinv.
const std::vector<std::string>& check_labels();

/// Overrides cfg.seed from HANKELMONDE_SEED when set. Throws InvalidArgument
/// if the variable is not an unsigned integer.
void apply_env_overrides(SweepConfig& cfg);

struct CheckResult {
    std::string check;
    Params params;
    bool holds = false;
    std::string detail;
    std::chrono::nanoseconds elapsed{0};
};

struct SweepReport {
    std::vector<CheckResult> results;
    std::size_t tuple_count = 0;

    std::size_t failed() const;
    bool all_passed() const { return failed() == 0; }
};

/// Runs one check for one tuple. Checks that do not apply to the tuple
/// (det away from mu = r, nu = q) return std::nullopt.
std::optional<CheckResult> run_check(const std::string& check, const Params& p,
                                     const std::vector<Rational>& points, const std::optional<Fault>& fault);

SweepReport run_sweep(const SweepConfig& cfg);

nlohmann::json report_to_json(const SweepConfig& cfg, const SweepReport& report);
std::string report_to_csv(const SweepReport& report);

} // namespace hankelmonde
