#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gmcusp/boundary.hpp"
#include "gmcusp/field.hpp"
#include "gmcusp/solver.hpp"

namespace gmcusp {

enum class CaseName {
    IsentropicVortex,
    RiemannProblem1,
    RiemannProblem2,
    DoubleMachReflection,
    OddEvenDecoupling,
    StandingShock,
};

/// Config/CLI key of a case ("vortex", "riemann1", ...).
std::string_view case_key(CaseName name) noexcept;
std::optional<CaseName> parse_case_name(std::string_view key) noexcept;
const std::vector<CaseName>& all_cases();
std::string_view case_description(CaseName name) noexcept;

struct CaseSpec {
    CaseName name = CaseName::IsentropicVortex;
    Grid grid;
    double t_final = 0.0;
    /// Step budget; the run stops at whichever of t_final / max_steps comes first.
    std::optional<long> max_steps;
    double cfl = 0.5;
    std::optional<Scheme> scheme;
    std::optional<Order> order;
    std::optional<Limiter> limiter;

    double vortex_strength = 5.0;
    double shock_mach = 0.0;
    /// Relative density seed of the instability cases; 0 disables it.
    double perturbation = 0.0;

    /// Throws ConfigError when grid or parameters do not fit the case.
    void validate() const;
    bool is_instability_case() const noexcept {
        return name == CaseName::OddEvenDecoupling || name == CaseName::StandingShock;
    }
};

/// Defaults of each case at its published resolution.
CaseSpec default_case(CaseName name);

/// Same physical setup with an nx x ny grid over the case's domain.
CaseSpec with_resolution(CaseSpec spec, int nx, int ny);

struct CaseSetup {
    Field field;
    BoundarySpec bcs;
};

CaseSetup init_case(const CaseSpec& spec, const GasModel& gas);

/// Initial vortex translated by (t, t) with periodic wrap.
Field exact_vortex_solution(const CaseSpec& spec, const GasModel& gas, double time);

/// Quadrant states of the two-dimensional Riemann problems, in the order
/// (x>0,y>0), (x>0,y<0), (x<0,y>0), (x<0,y<0).
struct QuadrantStates {
    PrimitiveState upper_right;
    PrimitiveState lower_right;
    PrimitiveState upper_left;
    PrimitiveState lower_left;
};
QuadrantStates riemann_quadrants(CaseName name);

/// Normal shock of Mach number `mach` relative to the upstream gas.
struct ShockJump {
    PrimitiveState upstream;
    PrimitiveState downstream;
    double shock_speed = 0.0;  ///< lab-frame speed of the shock
};

/// Shock moving at mach * a into the quiescent `upstream` state; the
/// downstream velocity is the lab-frame post-shock velocity.
ShockJump moving_shock(const PrimitiveState& upstream, double mach, const GasModel& gas);

/// Stationary shock: `upstream` carries the supersonic inflow velocity.
ShockJump standing_shock(const PrimitiveState& upstream, const GasModel& gas);

/// Steady 1D profile of a standing shock under the first-order two-state
/// x-flux, with supersonic inflow on the left.
struct SteadyShockProfile {
    std::vector<ConservedState> cells;
    /// Fixed outflow state that keeps the profile steady. It absorbs the
    /// decaying post-shock oscillation, so on short domains it departs from
    /// the Rankine-Hugoniot downstream state by about 1e-8.
    PrimitiveState outflow;
};

/// The shock starts in cell nx/2 as the conserved blend
/// (1 - fraction) * upstream + fraction * downstream. After a short explicit
/// relaxation the profile is solved for exact steadiness with the density
/// of the shock cell held at the blended value. Throws ConfigError if no
/// steady profile is found.
SteadyShockProfile steady_shock_profile(const ShockJump& jump, int nx, double fraction, const GasModel& gas);

/// Density levels and orientation used by the shock-instability metrics.
struct ShockProfile {
    double rho_upstream = 0.0;
    double rho_downstream = 0.0;
    bool downstream_is_left = false;
};

ShockProfile shock_profile(const CaseSpec& spec, const GasModel& gas);

/// Post-shock state of the instability case (reference for the transverse
/// velocity threshold).
ShockJump instability_shock(const CaseSpec& spec, const GasModel& gas);

}  // namespace gmcusp
