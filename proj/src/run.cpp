#include "gmcusp/run.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "gmcusp/snapshot.hpp"

namespace gmcusp {
namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string snapshot_name(const std::string& stem, SnapshotFormat format) {
    return stem + std::string(snapshot_extension(format));
}

std::string step_stem(long step) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "snapshot_%06ld", step);
    return buf;
}

}  // namespace

std::filesystem::path resolve_output_directory(const OutputConfig& output) {
    if (const char* env = std::getenv(kOutputDirEnv); env && *env) return env;
    return output.directory;
}

std::string RunReport::summary() const {
    std::ostringstream out;
    const Grid& g = config.case_spec.grid;
    out << "case " << case_key << " on " << g.nx << "x" << g.ny << ", scheme " << scheme_key(config.scheme.scheme)
        << ", " << order_key(config.scheme.order) << " order, cfl " << short_num(config.scheme.cfl) << " ("
        << cfl_rule_key(config.scheme.effective_cfl_rule()) << ")\n";
    out << "  " << steps << " steps to t = " << short_num(final_time) << " in " << short_num(wall_seconds) << " s";
    if (fallback_cells > 0) out << ", " << fallback_cells << " first-order fallbacks";
    out << "\n";
    if (blowup) {
        out << "  BLOW-UP at t = " << short_num(blowup_time);
        if (blowup_cell) out << " in cell (" << blowup_cell->i << ", " << blowup_cell->j << ")";
        out << ": " << blowup_message << "\n";
    }
    if (config.diagnostics.totals)
        out << "  totals: mass " << short_num(totals[0]) << ", x-momentum " << short_num(totals[1]) << ", y-momentum "
            << short_num(totals[2]) << ", energy " << short_num(totals[3]) << "\n";
    for (std::size_t k = 0; k < vortex_levels.size(); ++k) {
        const VortexLevel& l = vortex_levels[k];
        out << "  vortex " << l.nx << "^2: L1 " << short_num(l.norms.l1) << ", Linf " << short_num(l.norms.linf);
        if (k > 0)
            out << ", orders " << short_num(vortex_orders[k - 1].l1) << " / " << short_num(vortex_orders[k - 1].linf);
        out << "\n";
    }
    if (metrics)
        out << "  shock: mean position " << short_num(metrics->mean_shock_position) << " cells, stddev "
            << short_num(metrics->shock_position_stddev) << " cells, max |v| behind "
            << short_num(metrics->max_transverse_velocity) << (metrics->blowup ? " (non-physical states)" : "")
            << "\n";
    if (shock_not_found) out << "  shock: " << *shock_not_found << "\n";
    for (const auto& s : snapshots) out << "  wrote " << s.string() << "\n";
    return out.str();
}

std::string RunReport::key_values() const {
    std::ostringstream out;
    auto kv = [&](const std::string& key, const std::string& value) { out << key << " = " << value << "\n"; };
    const Grid& g = config.case_spec.grid;
    kv("case", case_key);
    kv("scheme", std::string(scheme_key(config.scheme.scheme)));
    kv("order", std::string(order_key(config.scheme.order)));
    kv("limiter", std::string(limiter_key(config.scheme.limiter)));
    kv("cfl", num(config.scheme.cfl));
    kv("cfl_rule", std::string(cfl_rule_key(config.scheme.effective_cfl_rule())));
    kv("gamma", num(config.gamma));
    kv("nx", std::to_string(g.nx));
    kv("ny", std::to_string(g.ny));
    kv("steps", std::to_string(steps));
    kv("final_time", num(final_time));
    kv("wall_seconds", num(wall_seconds));
    kv("fallback_cells", std::to_string(fallback_cells));
    kv("blowup", blowup ? "true" : "false");
    if (blowup) {
        kv("blowup_time", num(blowup_time));
        if (blowup_cell) {
            kv("blowup_i", std::to_string(blowup_cell->i));
            kv("blowup_j", std::to_string(blowup_cell->j));
        }
    }
    if (config.diagnostics.totals) {
        kv("total_mass", num(totals[0]));
        kv("total_momentum_x", num(totals[1]));
        kv("total_momentum_y", num(totals[2]));
        kv("total_energy", num(totals[3]));
    }
    for (std::size_t k = 0; k < vortex_levels.size(); ++k) {
        const std::string n = std::to_string(vortex_levels[k].nx);
        kv("vortex_l1_" + n, num(vortex_levels[k].norms.l1));
        kv("vortex_linf_" + n, num(vortex_levels[k].norms.linf));
        if (k > 0) {
            kv("vortex_order_l1_" + n, num(vortex_orders[k - 1].l1));
            kv("vortex_order_linf_" + n, num(vortex_orders[k - 1].linf));
        }
    }
    if (metrics || shock_not_found) kv("shock_found", shock_not_found ? "false" : "true");
    if (metrics) {
        kv("shock_position_mean", num(metrics->mean_shock_position));
        kv("shock_position_stddev", num(metrics->shock_position_stddev));
        kv("max_transverse_velocity", num(metrics->max_transverse_velocity));
    }
    return out.str();
}

RunReport run(const RunConfig& config, std::ostream* log) {
    config.validate();
    const GasModel gas(config.gamma);
    RunReport report;
    report.config = config;
    report.case_key = std::string(case_key(config.case_spec.name));
    report.output_directory = resolve_output_directory(config.output);

    std::error_code ec;
    std::filesystem::create_directories(report.output_directory, ec);
    if (ec || !std::filesystem::is_directory(report.output_directory))
        throw IoError("cannot create output directory " + report.output_directory.string());

    auto emit = [&](const Field& field, const std::string& stem) {
        for (SnapshotFormat f : config.output.formats) {
            const auto path = report.output_directory / snapshot_name(stem, f);
            write_snapshot(field, gas, path, f);
            report.snapshots.push_back(path);
        }
    };

    CaseSetup setup = init_case(config.case_spec, gas);
    const auto start = std::chrono::steady_clock::now();
    double next_time = config.output.every_time.value_or(0.0);
    const StepObserver observer = [&](const Field& field, long step) {
        bool write = config.output.every_steps && step % *config.output.every_steps == 0;
        if (config.output.every_time && field.time() >= next_time) {
            write = true;
            while (next_time <= field.time()) next_time += *config.output.every_time;
        }
        if (write) emit(field, step_stem(step));
        if (log && step % 1000 == 0) *log << "  step " << step << ", t = " << short_num(field.time()) << "\n";
    };
    IntegrationResult result = integrate(std::move(setup.field), config.scheme, setup.bcs, gas,
                                         {config.case_spec.t_final, config.case_spec.max_steps}, observer);
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.steps = result.steps;
    report.final_time = result.field.time();
    report.fallback_cells = result.fallback_cells;
    report.blowup = result.blowup;
    report.blowup_time = result.blowup_time;
    report.blowup_cell = result.blowup_cell;
    report.blowup_message = result.blowup_message;
    report.totals = result.field.totals().c;
    emit(result.field, "final");

    if (config.case_spec.name == CaseName::IsentropicVortex && !result.blowup) {
        report.vortex_levels.push_back(
            {config.case_spec.grid.nx,
             error_norms(result.field, exact_vortex_solution(config.case_spec, gas, result.field.time()))});
        CaseSpec level = config.case_spec;
        for (int r = 0; r < config.diagnostics.refinements; ++r) {
            level = with_resolution(level, 2 * level.grid.nx, 2 * level.grid.ny);
            if (log) *log << "  refinement " << level.grid.nx << "x" << level.grid.ny << "\n";
            CaseSetup s = init_case(level, gas);
            const IntegrationResult fine =
                integrate(std::move(s.field), config.scheme, s.bcs, gas, {level.t_final, level.max_steps});
            if (fine.blowup) break;
            report.vortex_levels.push_back(
                {level.grid.nx, error_norms(fine.field, exact_vortex_solution(level, gas, fine.field.time()))});
            const auto& prev = report.vortex_levels[report.vortex_levels.size() - 2].norms;
            report.vortex_orders.push_back(order_of_accuracy(prev, report.vortex_levels.back().norms));
        }
    }

    if (config.case_spec.is_instability_case() && config.diagnostics.instability_metrics) {
        try {
            report.metrics = instability_metrics(result.field, config.case_spec, gas);
        } catch (const ShockNotFound& e) {
            report.shock_not_found = e.what();
        }
    }

    const auto report_path = report.output_directory / "report.txt";
    std::ofstream out(report_path, std::ios::trunc);
    out << report.summary() << "\n" << report.key_values();
    out.close();
    if (!out) throw IoError("failed writing " + report_path.string());
    return report;
}

}  // namespace gmcusp
