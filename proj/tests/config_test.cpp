#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "gmcusp/config.hpp"

using namespace gmcusp;

namespace {

std::string error_of(std::string_view text, const std::vector<std::string>& overrides = {}) {
    try {
        (void)parse_config(text, overrides);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

bool contains(const std::string& s, std::string_view part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("minimal config takes the case defaults") {
    const RunConfig c = parse_config("case = riemann1\n");
    CHECK(c.case_spec.name == CaseName::RiemannProblem1);
    CHECK(c.case_spec.grid.nx == 2000);
    CHECK(c.case_spec.grid.ny == 2000);
    CHECK(c.case_spec.t_final == 1.05);
    CHECK(c.scheme.cfl == 0.95);
    CHECK(c.scheme.scheme == Scheme::GenuinelyMultidimensional);
    CHECK(c.scheme.order == Order::Second);
    CHECK(c.scheme.limiter == Limiter::Minmod);
    CHECK(c.scheme.cfl_rule == CflRule::Auto);
    CHECK(c.gamma == 1.4);
    CHECK(c.output.directory == "output");
    CHECK(c.output.formats == std::vector<SnapshotFormat>{SnapshotFormat::Csv});
    CHECK(c.diagnostics.refinements == 0);

    const RunConfig odd = parse_config("case = odd_even");
    CHECK(odd.scheme.order == Order::First);
    CHECK(odd.case_spec.order == Order::First);
    CHECK(parse_config("case = vortex").diagnostics.refinements == 1);
}

TEST_CASE("full config") {
    const RunConfig c = parse_config(R"(
# standing shock with the two-state flux
case = standing_shock
scheme = two_state   # trailing comment
order = first
limiter = van_leer
cfl = 0.8
cfl_rule = per_axis
grid = 60x30
max_steps = 500
t_final = inf
shock_mach = 4
perturbation = 1e-2

[output]
dir = out/ss
every_steps = 100
formats = csv, vtk

[diagnostics]
instability_metrics = no
totals = false
)");
    CHECK(c.case_spec.name == CaseName::StandingShock);
    CHECK(c.scheme.scheme == Scheme::TwoState);
    CHECK(c.case_spec.scheme == Scheme::TwoState);
    CHECK(c.scheme.order == Order::First);
    CHECK(c.scheme.limiter == Limiter::VanLeer);
    CHECK(c.scheme.cfl == 0.8);
    CHECK(c.case_spec.cfl == 0.8);
    CHECK(c.scheme.cfl_rule == CflRule::PerAxis);
    CHECK(c.case_spec.grid.nx == 60);
    CHECK(c.case_spec.grid.ny == 30);
    CHECK(c.case_spec.grid.x_hi() == doctest::Approx(50.0));
    CHECK(*c.case_spec.max_steps == 500);
    CHECK(std::isinf(c.case_spec.t_final));
    CHECK(c.case_spec.shock_mach == 4.0);
    CHECK(c.case_spec.perturbation == 0.01);
    CHECK(c.output.directory == "out/ss");
    CHECK(*c.output.every_steps == 100);
    CHECK_FALSE(c.output.every_time.has_value());
    CHECK(c.output.formats == std::vector<SnapshotFormat>{SnapshotFormat::Csv, SnapshotFormat::Vtk});
    CHECK_FALSE(c.diagnostics.instability_metrics);
    CHECK_FALSE(c.diagnostics.totals);
}

TEST_CASE("overrides apply after the file") {
    const RunConfig c = parse_config("case = vortex\ngrid = 32x32\n", {"grid=16x16", "scheme = two_state", "output.dir=x"});
    CHECK(c.case_spec.grid.nx == 16);
    CHECK(c.scheme.scheme == Scheme::TwoState);
    CHECK(c.output.directory == "x");
    CHECK(parse_config("case = vortex", {"case=riemann2"}).case_spec.name == CaseName::RiemannProblem2);
    CHECK(parse_config("case = vortex", {"diagnostics.refinements=3"}).diagnostics.refinements == 3);
}

TEST_CASE("config errors") {
    CHECK(contains(error_of("case = riemann1\ncfl = 1.5\n"), "line 2"));
    CHECK(contains(error_of("case = riemann1\ncfl = 1.5\n"), "cfl"));
    CHECK(contains(error_of("case = riemann1", {"cfl=0"}), "override 'cfl=0'"));
    CHECK(contains(error_of("grid = 10x10"), "missing required key 'case'"));
    CHECK(contains(error_of("case = sod"), "unknown case 'sod'"));
    CHECK(contains(error_of("case = sod"), "riemann1"));
    CHECK(contains(error_of("case = vortex\nfoo = 1\n"), "line 2: key 'foo': unknown key"));
    CHECK(contains(error_of("case = vortex\n[output]\nfoo = 1\n"), "'output.foo'"));
    CHECK(contains(error_of("case = vortex\ncfl = 0.3\ncfl = 0.4\n"), "duplicate of line 2"));
    CHECK(contains(error_of("case = vortex\njust words\n"), "line 2"));
    CHECK(contains(error_of("case = vortex\n[output\n"), "unterminated"));
    CHECK(contains(error_of("case = vortex\ncfl =\n"), "missing value"));
    CHECK(contains(error_of("case = vortex", {"cfl"}), "expected key=value"));
    CHECK_FALSE(error_of("case = vortex\ngrid = 3x10\n").empty());
    CHECK_FALSE(error_of("case = vortex\ngrid = 10by10\n").empty());
    CHECK_FALSE(error_of("case = vortex\ngamma = 1\n").empty());
    CHECK_FALSE(error_of("case = vortex\ncfl = abc\n").empty());
    CHECK_FALSE(error_of("case = vortex\ncfl = 0.5x\n").empty());
    CHECK_FALSE(error_of("case = vortex\nscheme = roe\n").empty());
    CHECK_FALSE(error_of("case = vortex\nmax_steps = -1\n").empty());
    CHECK_FALSE(error_of("case = dmr\nshock_mach = 1\n").empty());
    CHECK_FALSE(error_of("case = standing_shock\nperturbation = 1\n").empty());
    CHECK_FALSE(error_of("case = vortex\n[output]\nevery_steps = 0\n").empty());
    CHECK_FALSE(error_of("case = vortex\n[output]\nformats = png\n").empty());
    CHECK_FALSE(error_of("case = vortex\n[diagnostics]\ntotals = maybe\n").empty());
    CHECK_FALSE(error_of("case = vortex\nt_final = inf\n").empty());
}

TEST_CASE("load_config") {
    const auto dir = std::filesystem::temp_directory_path() / "gmcusp_config_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "run.cfg";
    std::ofstream(path) << "case = dmr\ngrid = 96x24\n";
    const RunConfig c = load_config(path, {"cfl=0.5"});
    CHECK(c.case_spec.name == CaseName::DoubleMachReflection);
    CHECK(c.case_spec.grid.nx == 96);
    CHECK(c.scheme.cfl == 0.5);
    CHECK_THROWS_AS(load_config(dir / "missing.cfg"), IoError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("enum keys") {
    CHECK(scheme_key(Scheme::TwoState) == "two_state");
    CHECK(scheme_key(Scheme::GenuinelyMultidimensional) == "gm");
    CHECK(order_key(Order::First) == "first");
    CHECK(limiter_key(Limiter::VanLeer) == "van_leer");
    CHECK(cfl_rule_key(CflRule::Combined) == "combined");
}
