#pragma once

// Two-state convective/pressure split flux at the midpoint of a cell face.
// All functions below the axis-generic `midpoint_flux` work in the x-normal
// frame: `left` and `right` are the states on either side of an x-face.

#include "gmcusp/euler.hpp"

namespace gmcusp {

/// Relative tolerance of the stationary-flow test |u_bar| <= tol * max(a_bar, 1).
inline constexpr double kStationaryTolerance = 1e-12;

struct WaveSpeeds1D {
    double s_l = 0.0;  ///< left signal speed, <= 0
    double s_r = 0.0;  ///< right signal speed, >= 0
    double u_star = 0.0;
    double c_star = 0.0;
    double a_bar = 0.0;  ///< (a_L + a_R) / 2
    bool stationary = false;
};

enum class Side { Left, Right };

struct UpwindFactors {
    Side side = Side::Left;
    double u_bar = 0.0;  ///< (u_L + u_R) / 2
    double m_k = 0.0;    ///< mass-flux factor
    double a_k = 0.0;    ///< signal-relative speed u_k - S_k
};

bool is_stationary(double u_bar, double a_bar) noexcept;

WaveSpeeds1D wave_speeds_1d(const PrimitiveState& left, const PrimitiveState& right, const GasModel& gas) noexcept;

UpwindFactors upwind_factors(const PrimitiveState& left, const PrimitiveState& right,
                             const WaveSpeeds1D& speeds) noexcept;

/// M_k a_k W_k, upwinded on the sign of the average face-normal velocity.
FluxVector convective_midpoint_flux(const PrimitiveState& left, const PrimitiveState& right,
                                    const WaveSpeeds1D& speeds) noexcept;

/// HLL-type pressure flux whose dissipation carries only pressure
/// differences, so a stationary contact produces no diffusion.
FluxVector pressure_midpoint_flux(const PrimitiveState& left, const PrimitiveState& right, const WaveSpeeds1D& speeds,
                                  const GasModel& gas) noexcept;

/// Full two-state flux normal to a face along `axis`. For Y, `left` is the
/// lower state and `right` the upper one.
FluxVector midpoint_flux(const PrimitiveState& left, const PrimitiveState& right, const GasModel& gas,
                         Axis axis) noexcept;

}  // namespace gmcusp
