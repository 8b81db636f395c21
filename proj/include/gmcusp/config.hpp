#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gmcusp/cases.hpp"
#include "gmcusp/solver.hpp"

namespace gmcusp {

enum class SnapshotFormat { Csv, Vtk };

struct OutputConfig {
    std::filesystem::path directory = "output";
    /// Snapshot cadence; with neither set only the final state is written.
    std::optional<long> every_steps;
    std::optional<double> every_time;
    std::vector<SnapshotFormat> formats{SnapshotFormat::Csv};
};

struct DiagnosticsConfig {
    /// Extra vortex runs, each doubling the resolution of the previous one.
    int refinements = 1;
    bool instability_metrics = true;
    bool totals = true;
};

struct RunConfig {
    CaseSpec case_spec;
    SchemeConfig scheme;
    double gamma = 1.4;
    OutputConfig output;
    DiagnosticsConfig diagnostics;

    /// Throws ConfigError on out-of-range values.
    void validate() const;
};

/// Parses the plain-text run configuration:
///
///     # comment
///     case = riemann1
///     grid = 400x400
///     [output]
///     formats = csv, vtk
///
/// Keys inside `[section]` are addressed as `section.key`; the dotted form
/// is also accepted at top level. `case` is required and may appear
/// anywhere; the case supplies defaults for grid, t_final, cfl and order.
/// `overrides` are `key=value` strings applied after the file, in order.
RunConfig parse_config(std::string_view text, const std::vector<std::string>& overrides = {});

RunConfig load_config(const std::filesystem::path& path, const std::vector<std::string>& overrides = {});

std::string_view scheme_key(Scheme scheme) noexcept;
std::string_view order_key(Order order) noexcept;
std::string_view limiter_key(Limiter limiter) noexcept;
std::string_view cfl_rule_key(CflRule rule) noexcept;

}  // namespace gmcusp
