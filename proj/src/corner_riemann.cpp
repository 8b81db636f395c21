#include "gmcusp/corner_riemann.hpp"

#include <algorithm>
#include <cmath>

#include "gmcusp/midpoint_riemann.hpp"

namespace gmcusp {
namespace {

struct XSpeeds {
    double s_l;
    double s_r;
};

// x-speeds of the corner; the y-speeds are the x-speeds of the transposed corner.
XSpeeds bounding_x_speeds(const CornerStates& s, const GasModel& gas) noexcept {
    const RoeAverage up = roe_average(s.lu, s.ru, gas);
    const RoeAverage down = roe_average(s.ld, s.rd, gas);
    const double a_lu = sound_speed(s.lu, gas);
    const double a_ld = sound_speed(s.ld, gas);
    const double a_ru = sound_speed(s.ru, gas);
    const double a_rd = sound_speed(s.rd, gas);

    XSpeeds x;
    x.s_r = std::max({0.0, s.ru.u + a_ru, s.rd.u + a_rd, up.u + up.a, down.u + down.a});
    x.s_l = std::min({0.0, s.lu.u - a_lu, s.ld.u - a_ld, up.u - up.a, down.u - down.a});
    return x;
}

struct XVelocity {
    double u_bar;
    Regime regime;
};

XVelocity x_convection_velocity(const CornerStates& s, const WaveSpeeds2D& w) noexcept {
    const double height = w.s_u - w.s_d;
    if (w.s_l == 0.0) return {(s.lu.u * w.s_u - s.ld.u * w.s_d) / height, Regime::SupersonicPlus};
    if (w.s_r == 0.0) return {(s.ru.u * w.s_u - s.rd.u * w.s_d) / height, Regime::SupersonicMinus};
    return {(s.lu.u * w.s_u - s.ld.u * w.s_d + s.ru.u * w.s_u - s.rd.u * w.s_d) / (2.0 * height),
            Regime::Subsonic};
}

FluxVector x_convective_flux(const CornerStates& s, const WaveSpeeds2D& w, double u_bar) noexcept {
    if (u_bar == 0.0) return {};
    const bool from_left = u_bar > 0.0;
    const PrimitiveState& k1 = from_left ? s.lu : s.ru;
    const PrimitiveState& k2 = from_left ? s.ld : s.rd;
    FluxVector f = w.s_u * advected_quantities(k1) - w.s_d * advected_quantities(k2);
    return (u_bar / (w.s_u - w.s_d)) * f;
}

// Isentropic substitute for U_k: (p, pu, pv, e*) with e* = a^2 p/(g-1) + p q^2/2.
FluxVector pressure_substitute(const PrimitiveState& s, double a2, const GasModel& gas) noexcept {
    return {{s.p, s.p * s.u, s.p * s.v, a2 * s.p / gas.gamma_minus_one() + 0.5 * s.p * s.q2()}};
}

FluxVector x_pressure_flux(const CornerStates& s, const WaveSpeeds2D& w, const GasModel& gas) noexcept {
    const double width = w.s_r - w.s_l;
    const double height = w.s_u - w.s_d;
    const double a2 = w.a_bar * w.a_bar;

    const FluxVector f_lu = pressure_flux(s.lu, gas, Axis::X);
    const FluxVector f_ld = pressure_flux(s.ld, gas, Axis::X);
    const FluxVector f_ru = pressure_flux(s.ru, gas, Axis::X);
    const FluxVector f_rd = pressure_flux(s.rd, gas, Axis::X);

    FluxVector f_left = w.s_u * f_lu - w.s_d * f_ld;
    FluxVector f_right = w.s_u * f_ru - w.s_d * f_rd;
    for (std::size_t k = 0; k < 4; ++k) {
        f_left[k] /= height;
        f_right[k] /= height;
    }

    const FluxVector jump =
        w.s_u * (pressure_substitute(s.lu, a2, gas) - pressure_substitute(s.ru, a2, gas)) -
        w.s_d * (pressure_substitute(s.ld, a2, gas) - pressure_substitute(s.rd, a2, gas));

    FluxVector dissipation = ((w.s_r + w.s_l) / (2.0 * width)) * (f_left - f_right);
    dissipation -= (w.s_r * w.s_l / (width * height * a2)) * jump;

    // Transverse coupling through the y-directional pressure fluxes.
    const FluxVector g_cross = pressure_flux(s.ru, gas, Axis::Y) - pressure_flux(s.lu, gas, Axis::Y) +
                               pressure_flux(s.ld, gas, Axis::Y) - pressure_flux(s.rd, gas, Axis::Y);

    return 0.5 * (f_left + f_right) + dissipation - (2.0 * w.s_r * w.s_l / (width * height)) * g_cross;
}

}  // namespace

RoeAverage roe_average(const PrimitiveState& left, const PrimitiveState& right, const GasModel& gas) noexcept {
    const double gm1 = gas.gamma_minus_one();
    const double wl = std::sqrt(left.rho);
    const double wr = std::sqrt(right.rho);
    const double h_l = gas.gamma() * left.p / (gm1 * left.rho) + 0.5 * left.q2();
    const double h_r = gas.gamma() * right.p / (gm1 * right.rho) + 0.5 * right.q2();

    RoeAverage avg;
    avg.rho = wl * wr;
    avg.u = (wl * left.u + wr * right.u) / (wl + wr);
    avg.v = (wl * left.v + wr * right.v) / (wl + wr);
    avg.h = (wl * h_l + wr * h_r) / (wl + wr);
    avg.a = std::sqrt(std::max(0.0, gm1 * (avg.h - 0.5 * (avg.u * avg.u + avg.v * avg.v))));
    return avg;
}

CornerStates transpose(const CornerStates& s) noexcept {
    return {swap_xy(s.rd), swap_xy(s.ld), swap_xy(s.ru), swap_xy(s.lu)};
}

WaveSpeeds2D transpose(const WaveSpeeds2D& w) noexcept {
    return {w.s_d, w.s_u, w.s_l, w.s_r, w.a_bar, w.degenerate_y, w.degenerate_x};
}

WaveSpeeds2D bounding_wave_speeds(const CornerStates& states, const GasModel& gas) noexcept {
    const XSpeeds x = bounding_x_speeds(states, gas);
    const XSpeeds y = bounding_x_speeds(transpose(states), gas);
    WaveSpeeds2D w;
    w.s_l = x.s_l;
    w.s_r = x.s_r;
    w.s_d = y.s_l;
    w.s_u = y.s_r;
    w.a_bar = 0.25 * (sound_speed(states.lu, gas) + sound_speed(states.ru, gas) + sound_speed(states.ld, gas) +
                      sound_speed(states.rd, gas));
    return w;
}

WaveSpeeds2D corner_wave_speeds(const CornerStates& states, const GasModel& gas) noexcept {
    WaveSpeeds2D w = bounding_wave_speeds(states, gas);
    const CornerVelocities provisional = corner_convection_velocities(states, w);
    if (is_stationary(provisional.u_bar, w.a_bar)) {
        w.s_l = -w.a_bar;
        w.s_r = w.a_bar;
        w.degenerate_x = true;
    }
    if (is_stationary(provisional.v_bar, w.a_bar)) {
        w.s_d = -w.a_bar;
        w.s_u = w.a_bar;
        w.degenerate_y = true;
    }
    return w;
}

CornerVelocities corner_convection_velocities(const CornerStates& states, const WaveSpeeds2D& speeds) noexcept {
    const XVelocity x = x_convection_velocity(states, speeds);
    const XVelocity y = x_convection_velocity(transpose(states), transpose(speeds));
    return {x.u_bar, y.u_bar, x.regime, y.regime};
}

FluxVector corner_convective_flux(const CornerStates& states, const WaveSpeeds2D& speeds,
                                  const CornerVelocities& vels, Axis axis) noexcept {
    if (axis == Axis::X) return x_convective_flux(states, speeds, vels.u_bar);
    return swap_xy(x_convective_flux(transpose(states), transpose(speeds), vels.v_bar));
}

FluxVector corner_pressure_flux(const CornerStates& states, const WaveSpeeds2D& speeds, const GasModel& gas,
                                Axis axis) noexcept {
    if (axis == Axis::X) return x_pressure_flux(states, speeds, gas);
    return swap_xy(x_pressure_flux(transpose(states), transpose(speeds), gas));
}

CornerFlux corner_flux(const CornerStates& states, const GasModel& gas) noexcept {
    const WaveSpeeds2D speeds = corner_wave_speeds(states, gas);
    const CornerVelocities vels = corner_convection_velocities(states, speeds);
    CornerFlux out;
    out.f_star = corner_convective_flux(states, speeds, vels, Axis::X) +
                 corner_pressure_flux(states, speeds, gas, Axis::X);
    out.g_star = corner_convective_flux(states, speeds, vels, Axis::Y) +
                 corner_pressure_flux(states, speeds, gas, Axis::Y);
    return out;
}

}  // namespace gmcusp
