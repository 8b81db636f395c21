#include "gmcusp/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "gmcusp/corner_riemann.hpp"
#include "gmcusp/midpoint_riemann.hpp"

namespace gmcusp {
namespace {

double max_abs(const FluxVector& f) noexcept {
    double m = 0.0;
    for (double c : f.c) m = std::max(m, std::abs(c));
    return m;
}

double relative_flux_error(const PrimitiveState& s, const GasModel& gas) {
    const CornerFlux corner = corner_flux({s, s, s, s}, gas);
    double worst = 0.0;
    for (Axis axis : {Axis::X, Axis::Y}) {
        const FluxVector exact = euler_flux(s, gas, axis);
        const double scale = std::max(max_abs(exact), std::numeric_limits<double>::min());
        const FluxVector& c = axis == Axis::X ? corner.f_star : corner.g_star;
        worst = std::max({worst, max_abs(midpoint_flux(s, s, gas, axis) - exact) / scale,
                          max_abs(c - exact) / scale});
    }
    return worst;
}

double random_in(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Field run_steps(Field field, const SchemeConfig& config, const BoundarySpec& bcs, const GasModel& gas, int steps) {
    for (int n = 0; n < steps; ++n) {
        const double dt = compute_time_step(field, config, gas);
        field = advance(field, config, bcs, gas, dt);
    }
    return field;
}

}  // namespace

double stationary_contact_drift(Scheme scheme, const GasModel& gas, int steps) {
    const Grid g = Grid::span(100, 4, 0.0, 1.0, 0.0, 0.04);
    Field field(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) field.set_primitive(i, j, {g.xc(i) < 0.5 ? 1.0 : 0.125, 0.0, 0.0, 1.0}, gas);
    SchemeConfig config;
    config.scheme = scheme;
    config.order = Order::First;
    BoundarySpec bcs = BoundarySpec::all(Transmissive{});
    bcs.bottom = Periodic{};
    bcs.top = Periodic{};
    const Field end = run_steps(field, config, bcs, gas, steps);
    double drift = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) drift = std::max(drift, std::abs(end(i, j).rho - field(i, j).rho));
    return drift;
}

double free_stream_drift(const SchemeConfig& config, const GasModel& gas, int steps) {
    const Grid g = Grid::span(16, 12, 0.0, 1.0, 0.0, 0.75);
    Field field(g);
    const PrimitiveState s{1.3, 0.45, -0.3, 0.8};
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) field.set_primitive(i, j, s, gas);
    const Field end = run_steps(field, config, BoundarySpec::all(Periodic{}), gas, steps);
    const FluxVector ref = field(0, 0).as_vector();
    double drift = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) drift = std::max(drift, max_abs(end(i, j).as_vector() - ref) / max_abs(ref));
    return drift;
}

double conservation_drift(const SchemeConfig& config, const GasModel& gas, int steps) {
    const Grid g = Grid::span(24, 20, 0.0, 1.0, 0.0, 1.0);
    Field field(g);
    const double tau = 2.0 * std::numbers::pi;
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const double x = g.xc(i);
            const double y = g.yc(j);
            field.set_primitive(i, j,
                                {1.0 + 0.3 * std::sin(tau * x) * std::cos(tau * y), 0.4 + 0.2 * std::sin(tau * y),
                                 -0.3 + 0.25 * std::cos(tau * (x + y)), 1.0 + 0.2 * std::cos(tau * x)},
                                gas);
        }
    }
    const Field end = run_steps(field, config, BoundarySpec::all(Periodic{}), gas, steps);
    const FluxVector before = field.totals();
    const FluxVector after = end.totals();
    // Momentum totals can be small; scale every component by the mass/energy magnitude.
    const double scale = std::max(std::abs(before[0]), std::abs(before[3]));
    return max_abs(after - before) / scale;
}

double flux_consistency_error(const GasModel& gas, int samples, unsigned seed) {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int n = 0; n < samples; ++n) {
        const PrimitiveState s{random_in(rng, 0.05, 10.0), random_in(rng, -5.0, 5.0), random_in(rng, -5.0, 5.0),
                               random_in(rng, 0.05, 10.0)};
        worst = std::max(worst, relative_flux_error(s, gas));
    }
    return worst;
}

double supersonic_flux_error(const GasModel& gas, double mach, int samples, unsigned seed) {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int n = 0; n < samples; ++n) {
        PrimitiveState s{random_in(rng, 0.05, 10.0), 0.0, 0.0, random_in(rng, 0.05, 10.0)};
        s.u = mach * sound_speed(s, gas);
        const FluxVector exact = euler_flux(s, gas, Axis::X);
        const double scale = max_abs(exact);
        worst = std::max({worst, max_abs(midpoint_flux(s, s, gas, Axis::X) - exact) / scale,
                          max_abs(corner_flux({s, s, s, s}, gas).f_star - exact) / scale});
    }
    return worst;
}

std::vector<CheckResult> run_invariant_checks(const GasModel& gas) {
    std::vector<CheckResult> out;
    auto add = [&](std::string name, double measured, double tolerance) {
        out.push_back({std::move(name), measured <= tolerance, measured, tolerance});
    };
    for (Scheme scheme : {Scheme::TwoState, Scheme::GenuinelyMultidimensional}) {
        const std::string tag = scheme == Scheme::TwoState ? " [two_state]" : " [gm]";
        SchemeConfig config;
        config.scheme = scheme;
        add("stationary contact" + tag, stationary_contact_drift(scheme, gas), 1e-12);
        add("free stream" + tag, free_stream_drift(config, gas), 1e-13);
        add("conservation" + tag, conservation_drift(config, gas), 1e-12);
    }
    add("flux consistency", flux_consistency_error(gas), 1e-13);
    add("supersonic one-sidedness", supersonic_flux_error(gas), 1e-14);
    return out;
}

}  // namespace gmcusp
