#pragma once

// State vectors, ideal-gas closure and the convective/pressure split of the
// two-dimensional Euler fluxes.

#include <array>
#include <cmath>
#include <cstddef>

#include "gmcusp/errors.hpp"

namespace gmcusp {

enum class Axis { X, Y };

/// Ideal gas with constant ratio of specific heats.
class GasModel {
public:
    GasModel() = default;
    explicit GasModel(double gamma);

    double gamma() const noexcept { return gamma_; }
    double gamma_minus_one() const noexcept { return gamma_ - 1.0; }

private:
    double gamma_ = 1.4;
};

/// Four-component vector laid out like the conserved variables:
/// mass, x-momentum, y-momentum, energy.
struct FluxVector {
    std::array<double, 4> c{};

    constexpr double& operator[](std::size_t k) noexcept { return c[k]; }
    constexpr double operator[](std::size_t k) const noexcept { return c[k]; }

    constexpr FluxVector& operator+=(const FluxVector& o) noexcept {
        for (std::size_t k = 0; k < 4; ++k) c[k] += o.c[k];
        return *this;
    }
    constexpr FluxVector& operator-=(const FluxVector& o) noexcept {
        for (std::size_t k = 0; k < 4; ++k) c[k] -= o.c[k];
        return *this;
    }
    constexpr FluxVector& operator*=(double s) noexcept {
        for (auto& x : c) x *= s;
        return *this;
    }

    friend constexpr FluxVector operator+(FluxVector a, const FluxVector& b) noexcept { return a += b; }
    friend constexpr FluxVector operator-(FluxVector a, const FluxVector& b) noexcept { return a -= b; }
    friend constexpr FluxVector operator*(FluxVector a, double s) noexcept { return a *= s; }
    friend constexpr FluxVector operator*(double s, FluxVector a) noexcept { return a *= s; }
    friend constexpr bool operator==(const FluxVector&, const FluxVector&) = default;

    bool is_finite() const noexcept {
        for (double x : c)
            if (!std::isfinite(x)) return false;
        return true;
    }
};

/// Cell-averaged conserved variables U = (rho, rho u, rho v, rho e).
struct ConservedState {
    double rho = 0.0;
    double mx = 0.0;
    double my = 0.0;
    double E = 0.0;

    constexpr FluxVector as_vector() const noexcept { return {{rho, mx, my, E}}; }
    static constexpr ConservedState from_vector(const FluxVector& f) noexcept {
        return {f[0], f[1], f[2], f[3]};
    }
    friend constexpr bool operator==(const ConservedState&, const ConservedState&) = default;
};

/// Working variables of every flux formula.
struct PrimitiveState {
    double rho = 1.0;
    double u = 0.0;
    double v = 0.0;
    double p = 1.0;

    /// u^2 + v^2.
    constexpr double q2() const noexcept { return u * u + v * v; }
    constexpr double velocity(Axis axis) const noexcept { return axis == Axis::X ? u : v; }

    bool is_valid() const noexcept {
        return std::isfinite(rho) && std::isfinite(u) && std::isfinite(v) && std::isfinite(p) && rho > 0.0 &&
               p > 0.0;
    }
    friend constexpr bool operator==(const PrimitiveState&, const PrimitiveState&) = default;
};

struct SplitFlux {
    FluxVector convective;
    FluxVector pressure;
};

/// Mirror across the diagonal: exchanges the velocity components.
constexpr PrimitiveState swap_xy(const PrimitiveState& s) noexcept { return {s.rho, s.v, s.u, s.p}; }
/// Exchanges the two momentum rows.
constexpr FluxVector swap_xy(const FluxVector& f) noexcept { return {{f[0], f[2], f[1], f[3]}}; }

ConservedState primitive_to_conserved(const PrimitiveState& prim, const GasModel& gas) noexcept;

/// Throws PositivityError when the recovered density or pressure is not positive.
PrimitiveState conserved_to_primitive(const ConservedState& cons, const GasModel& gas);

inline double sound_speed(const PrimitiveState& prim, const GasModel& gas) noexcept {
    return std::sqrt(gas.gamma() * prim.p / prim.rho);
}

/// Advected vector W = (rho, rho u, rho v, rho q^2 / 2).
constexpr FluxVector advected_quantities(const PrimitiveState& s) noexcept {
    return {{s.rho, s.rho * s.u, s.rho * s.v, 0.5 * s.rho * s.q2()}};
}

/// Pressure part of the flux along `axis`: (0, p, 0, g/(g-1) p u) for X.
inline FluxVector pressure_flux(const PrimitiveState& s, const GasModel& gas, Axis axis) noexcept {
    const double h = gas.gamma() / gas.gamma_minus_one();
    if (axis == Axis::X) return {{0.0, s.p, 0.0, h * s.p * s.u}};
    return {{0.0, 0.0, s.p, h * s.p * s.v}};
}

inline FluxVector convective_flux(const PrimitiveState& s, Axis axis) noexcept {
    return s.velocity(axis) * advected_quantities(s);
}

SplitFlux split_flux(const PrimitiveState& prim, const GasModel& gas, Axis axis) noexcept;

/// Unsplit Euler flux F (axis X) or G (axis Y).
FluxVector euler_flux(const PrimitiveState& prim, const GasModel& gas, Axis axis) noexcept;

}  // namespace gmcusp
