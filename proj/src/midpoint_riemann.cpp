#include "gmcusp/midpoint_riemann.hpp"

#include <algorithm>
#include <cmath>

namespace gmcusp {

bool is_stationary(double u_bar, double a_bar) noexcept {
    return std::abs(u_bar) <= kStationaryTolerance * std::max(a_bar, 1.0);
}

WaveSpeeds1D wave_speeds_1d(const PrimitiveState& left, const PrimitiveState& right, const GasModel& gas) noexcept {
    const double gm1 = gas.gamma_minus_one();
    const double a_l = sound_speed(left, gas);
    const double a_r = sound_speed(right, gas);

    WaveSpeeds1D w;
    w.a_bar = 0.5 * (a_l + a_r);
    w.u_star = 0.5 * (left.u + right.u) + (a_l - a_r) / gm1;
    w.c_star = w.a_bar + 0.25 * gm1 * (left.u - right.u);
    w.s_l = std::min({0.0, left.u - a_l, w.u_star - w.c_star});
    w.s_r = std::max({0.0, right.u + a_r, w.u_star + w.c_star});

    if (is_stationary(0.5 * (left.u + right.u), w.a_bar)) {
        w.stationary = true;
        w.s_l = -w.a_bar;
        w.s_r = w.a_bar;
    }
    return w;
}

UpwindFactors upwind_factors(const PrimitiveState& left, const PrimitiveState& right,
                             const WaveSpeeds1D& speeds) noexcept {
    UpwindFactors f;
    f.u_bar = 0.5 * (left.u + right.u);
    if (f.u_bar >= 0.0) {
        f.side = Side::Left;
        f.m_k = f.u_bar / (f.u_bar - speeds.s_l);
        f.a_k = left.u - speeds.s_l;
    } else {
        f.side = Side::Right;
        f.m_k = f.u_bar / (f.u_bar - speeds.s_r);
        f.a_k = right.u - speeds.s_r;
    }
    return f;
}

FluxVector convective_midpoint_flux(const PrimitiveState& left, const PrimitiveState& right,
                                    const WaveSpeeds1D& speeds) noexcept {
    const UpwindFactors f = upwind_factors(left, right, speeds);
    if (f.u_bar == 0.0) return {};
    const PrimitiveState& k = f.side == Side::Left ? left : right;
    return (f.m_k * f.a_k) * advected_quantities(k);
}

FluxVector pressure_midpoint_flux(const PrimitiveState& left, const PrimitiveState& right, const WaveSpeeds1D& speeds,
                                  const GasModel& gas) noexcept {
    const double s_l = speeds.s_l;
    const double s_r = speeds.s_r;
    const double width = s_r - s_l;
    const double a2 = speeds.a_bar * speeds.a_bar;

    const FluxVector f2_l = pressure_flux(left, gas, Axis::X);
    const FluxVector f2_r = pressure_flux(right, gas, Axis::X);

    // Isentropic substitute for the jump in U: density differences replaced
    // by pressure differences over a_bar^2.
    const double dp = left.p - right.p;
    const FluxVector jump{{dp, left.p * left.u - right.p * right.u, left.p * left.v - right.p * right.v,
                           0.5 * a2 * dp + 0.5 * (left.p * left.q2() - right.p * right.q2())}};

    FluxVector dissipation = ((s_r + s_l) / (2.0 * width)) * (f2_l - f2_r);
    dissipation -= (s_r * s_l / (a2 * width)) * jump;

    return 0.5 * (f2_l + f2_r) + dissipation;
}

FluxVector midpoint_flux(const PrimitiveState& left, const PrimitiveState& right, const GasModel& gas,
                         Axis axis) noexcept {
    if (axis == Axis::Y) return swap_xy(midpoint_flux(swap_xy(left), swap_xy(right), gas, Axis::X));
    const WaveSpeeds1D speeds = wave_speeds_1d(left, right, gas);
    return convective_midpoint_flux(left, right, speeds) + pressure_midpoint_flux(left, right, speeds, gas);
}

}  // namespace gmcusp
