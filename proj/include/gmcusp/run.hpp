#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gmcusp/config.hpp"
#include "gmcusp/diagnostics.hpp"
#include "gmcusp/integrate.hpp"

namespace gmcusp {

/// Environment variable that replaces `output.dir` when set and non-empty.
inline constexpr const char* kOutputDirEnv = "GMCUSP_OUTPUT_DIR";

std::filesystem::path resolve_output_directory(const OutputConfig& output);

struct VortexLevel {
    int nx = 0;
    ErrorNorms norms;
};

struct RunReport {
    std::string case_key;
    RunConfig config;

    long steps = 0;
    double final_time = 0.0;
    double wall_seconds = 0.0;
    long fallback_cells = 0;

    bool blowup = false;
    double blowup_time = 0.0;
    std::optional<CellIndex> blowup_cell;
    std::string blowup_message;

    /// Sum over interior cells of (rho, rho u, rho v, E) times the cell area.
    std::array<double, 4> totals{};

    std::vector<VortexLevel> vortex_levels;
    std::vector<AccuracyOrders> vortex_orders;

    std::optional<InstabilityMetrics> metrics;
    /// Set when a row has no shock crossing; counts as blow-up evidence.
    std::optional<std::string> shock_not_found;

    std::vector<std::filesystem::path> snapshots;
    std::filesystem::path output_directory;

    /// Human-readable summary.
    std::string summary() const;
    /// One `key = value` line per quantity, doubles at 17 significant digits.
    std::string key_values() const;
    /// 0 for a completed run, 2 after a positivity failure.
    int exit_code() const noexcept { return blowup ? 2 : 0; }
};

/// Initializes the case, integrates it, writes snapshots and report.txt into
/// the output directory and returns the report. Progress lines go to `log`
/// when given.
RunReport run(const RunConfig& config, std::ostream* log = nullptr);

}  // namespace gmcusp
