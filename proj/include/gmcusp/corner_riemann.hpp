#pragma once

// Four-state Riemann fluxes at a cell corner under the rectangular simple
// wave model. Quadrant naming follows the corner's own frame: LD is the
// lower-left cell, RU the upper-right one.
//
// Every y-directional quantity is computed by transposing the corner
// (x <-> y, u <-> v, LU <-> RD) and reusing the x-directional formula, which
// makes the two directions exact mirror images of each other.

#include "gmcusp/euler.hpp"

namespace gmcusp {

struct CornerStates {
    PrimitiveState lu;
    PrimitiveState ld;
    PrimitiveState ru;
    PrimitiveState rd;
};

/// Roe-averaged state between two cells (sqrt(rho) weights on velocity and
/// total enthalpy).
struct RoeAverage {
    double rho = 0.0;
    double u = 0.0;
    double v = 0.0;
    double h = 0.0;  ///< total specific enthalpy
    double a = 0.0;
};

struct WaveSpeeds2D {
    double s_l = 0.0;
    double s_r = 0.0;
    double s_d = 0.0;
    double s_u = 0.0;
    double a_bar = 0.0;  ///< mean sound speed of the four states
    bool degenerate_x = false;  ///< x-speeds replaced by -/+ a_bar
    bool degenerate_y = false;  ///< y-speeds replaced by -/+ a_bar
};

enum class Regime { Subsonic, SupersonicPlus, SupersonicMinus };

struct CornerVelocities {
    double u_bar = 0.0;
    double v_bar = 0.0;
    Regime regime_x = Regime::Subsonic;
    Regime regime_y = Regime::Subsonic;
};

struct CornerFlux {
    FluxVector f_star;
    FluxVector g_star;
};

RoeAverage roe_average(const PrimitiveState& left, const PrimitiveState& right, const GasModel& gas) noexcept;

/// Mirror the corner across its diagonal.
CornerStates transpose(const CornerStates& s) noexcept;
WaveSpeeds2D transpose(const WaveSpeeds2D& w) noexcept;

/// Bounding signal speeds from single-state and Roe-averaged eigenvalues,
/// before the degenerate-flow overrides.
WaveSpeeds2D bounding_wave_speeds(const CornerStates& states, const GasModel& gas) noexcept;

/// Bounding speeds with the degenerate overrides applied: a vanishing
/// u_bar (v_bar) replaces the x (y) speeds by -/+ a_bar. The test uses
/// u_bar, v_bar computed from the bounding speeds.
WaveSpeeds2D corner_wave_speeds(const CornerStates& states, const GasModel& gas) noexcept;

/// Wave-speed averaged convection velocities; supersonic in +x means
/// S_L == 0, in -x means S_R == 0 (likewise for y).
CornerVelocities corner_convection_velocities(const CornerStates& states, const WaveSpeeds2D& speeds) noexcept;

FluxVector corner_convective_flux(const CornerStates& states, const WaveSpeeds2D& speeds,
                                  const CornerVelocities& vels, Axis axis) noexcept;

FluxVector corner_pressure_flux(const CornerStates& states, const WaveSpeeds2D& speeds, const GasModel& gas,
                                Axis axis) noexcept;

CornerFlux corner_flux(const CornerStates& states, const GasModel& gas) noexcept;

}  // namespace gmcusp
