#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gmcusp/checks.hpp"
#include "gmcusp/run.hpp"

namespace {

int solve(const std::string& config_path, const std::vector<std::string>& overrides, bool quiet) {
    const gmcusp::RunConfig config = gmcusp::load_config(config_path, overrides);
    const gmcusp::RunReport report = gmcusp::run(config, quiet ? nullptr : &std::cerr);
    std::cout << report.summary() << "\n" << report.key_values();
    return report.exit_code();
}

int list_cases() {
    for (gmcusp::CaseName name : gmcusp::all_cases()) {
        const gmcusp::CaseSpec spec = gmcusp::default_case(name);
        std::printf("%-15s %dx%d  %s\n", std::string(gmcusp::case_key(name)).c_str(), spec.grid.nx, spec.grid.ny,
                    std::string(gmcusp::case_description(name)).c_str());
    }
    return 0;
}

int check(double gamma) {
    const gmcusp::GasModel gas(gamma);
    bool ok = true;
    for (const gmcusp::CheckResult& r : gmcusp::run_invariant_checks(gas)) {
        std::printf("%s  %-34s %.3e (tolerance %.0e)\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.measured,
                    r.tolerance);
        ok = ok && r.passed;
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-volume Euler solver with two-state and corner-coupled K-CUSP-X fluxes"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> overrides;
    bool quiet = false;
    auto* solve_cmd = app.add_subcommand("solve", "Run the case described by a config file");
    solve_cmd->add_option("config", config_path, "Config file")->required()->check(CLI::ExistingFile);
    solve_cmd->add_option("--override,-o", overrides, "key=value applied after the file (repeatable)");
    solve_cmd->add_flag("--quiet,-q", quiet, "No progress output");

    app.add_subcommand("cases", "List the built-in cases");

    double gamma = 1.4;
    auto* check_cmd = app.add_subcommand("check", "Run the built-in invariant checks");
    check_cmd->add_option("--gamma", gamma, "Ratio of specific heats")->check(CLI::Range(1.0001, 10.0));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve_cmd) return solve(config_path, overrides, quiet);
        if (app.got_subcommand("cases")) return list_cases();
        if (*check_cmd) return check(gamma);
    } catch (const gmcusp::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
