#include "gmcusp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gmcusp/midpoint_riemann.hpp"

namespace gmcusp {

void SchemeConfig::validate() const {
    if (!(cfl > 0.0 && cfl <= 1.0)) {
        std::ostringstream msg;
        msg << "cfl must lie in (0, 1], got " << cfl;
        throw ConfigError(msg.str());
    }
}

double limit_slope(double left_diff, double right_diff, Limiter limiter) noexcept {
    if (left_diff * right_diff <= 0.0) return 0.0;
    switch (limiter) {
        case Limiter::Minmod:
            return left_diff > 0.0 ? std::min(left_diff, right_diff) : std::max(left_diff, right_diff);
        case Limiter::VanLeer:
            return 2.0 * left_diff * right_diff / (left_diff + right_diff);
    }
    return 0.0;
}

namespace {

PrimitiveState limited_slope(const PrimitiveState& minus, const PrimitiveState& c, const PrimitiveState& plus,
                             Limiter limiter) noexcept {
    return {limit_slope(c.rho - minus.rho, plus.rho - c.rho, limiter),
            limit_slope(c.u - minus.u, plus.u - c.u, limiter), limit_slope(c.v - minus.v, plus.v - c.v, limiter),
            limit_slope(c.p - minus.p, plus.p - c.p, limiter)};
}

PrimitiveState extrapolate(const PrimitiveState& c, const PrimitiveState& sx, const PrimitiveState& sy, double fx,
                           double fy) noexcept {
    return {c.rho + fx * sx.rho + fy * sy.rho, c.u + fx * sx.u + fy * sy.u, c.v + fx * sx.v + fy * sy.v,
            c.p + fx * sx.p + fy * sy.p};
}

void check_interior(const Field& field, const GasModel& gas) {
    const Grid& g = field.grid();
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) (void)field.primitive(i, j, gas);
}

}  // namespace

Reconstruction::Reconstruction(const Grid& grid) : grid_(grid), center_(grid.padded_size()) {}

PrimitiveState Reconstruction::at(int i, int j, int di, int dj) const noexcept {
    const std::size_t k = grid_.index(i, j);
    if (slope_x_.empty()) return center_[k];
    return extrapolate(center_[k], slope_x_[k], slope_y_[k], 0.5 * di, 0.5 * dj);
}

Reconstruction reconstruct(const Field& field, const SchemeConfig& config, const GasModel& gas) {
    const Grid& g = field.grid();
    Reconstruction rec(g);
    for (int j = -g.ghost; j < g.ny + g.ghost; ++j)
        for (int i = -g.ghost; i < g.nx + g.ghost; ++i) rec.center_[g.index(i, j)] = field.primitive(i, j, gas);

    if (config.order == Order::First) return rec;

    rec.slope_x_.assign(g.padded_size(), PrimitiveState{0.0, 0.0, 0.0, 0.0});
    rec.slope_y_.assign(g.padded_size(), PrimitiveState{0.0, 0.0, 0.0, 0.0});
    const bool corners_used = config.scheme == Scheme::GenuinelyMultidimensional;

    for (int j = -1; j <= g.ny; ++j) {
        for (int i = -1; i <= g.nx; ++i) {
            const std::size_t k = g.index(i, j);
            const PrimitiveState& c = rec.center_[k];
            const PrimitiveState sx =
                limited_slope(rec.center_[g.index(i - 1, j)], c, rec.center_[g.index(i + 1, j)], config.limiter);
            const PrimitiveState sy =
                limited_slope(rec.center_[g.index(i, j - 1)], c, rec.center_[g.index(i, j + 1)], config.limiter);

            bool valid = true;
            if (corners_used) {
                for (double fx : {-0.5, 0.5})
                    for (double fy : {-0.5, 0.5}) valid = valid && extrapolate(c, sx, sy, fx, fy).is_valid();
            } else {
                for (double f : {-0.5, 0.5}) {
                    valid = valid && extrapolate(c, sx, sy, f, 0.0).is_valid();
                    valid = valid && extrapolate(c, sx, sy, 0.0, f).is_valid();
                }
            }
            if (valid) {
                rec.slope_x_[k] = sx;
                rec.slope_y_[k] = sy;
            } else {
                ++rec.fallback_cells_;
            }
        }
    }
    return rec;
}

FluxVector assemble_interface_flux(const FluxVector& corner_a, const FluxVector& mid,
                                   const FluxVector& corner_b) noexcept {
    FluxVector out;
    for (std::size_t k = 0; k < 4; ++k) out[k] = mid[k] + ((corner_a[k] - mid[k]) + (corner_b[k] - mid[k])) / 6.0;
    return out;
}

CornerStates corner_states(const Reconstruction& rec, int ci, int cj) noexcept {
    CornerStates s;
    s.ld = rec.at(ci - 1, cj - 1, 1, 1);
    s.rd = rec.at(ci, cj - 1, -1, 1);
    s.lu = rec.at(ci - 1, cj, 1, -1);
    s.ru = rec.at(ci, cj, -1, -1);
    return s;
}

InterfaceFluxes compute_interface_fluxes(const Reconstruction& rec, const SchemeConfig& config, const GasModel& gas,
                                         CornerSource corners) {
    const Grid& g = rec.grid();
    const int nx = g.nx;
    const int ny = g.ny;

    InterfaceFluxes out;
    out.nx = nx;
    out.ny = ny;
    out.fx.resize(static_cast<std::size_t>(nx + 1) * ny);
    out.fy.resize(static_cast<std::size_t>(nx) * (ny + 1));

    for (int j = 0; j < ny; ++j)
        for (int i = 0; i <= nx; ++i) out.x_face(i, j) = midpoint_flux(rec.east(i - 1, j), rec.west(i, j), gas, Axis::X);
    for (int j = 0; j <= ny; ++j)
        for (int i = 0; i < nx; ++i)
            out.y_face(i, j) = midpoint_flux(rec.north(i, j - 1), rec.south(i, j), gas, Axis::Y);

    if (config.scheme == Scheme::TwoState) return out;

    if (corners == CornerSource::Midpoint) {
        for (auto& f : out.fx) f = assemble_interface_flux(f, f, f);
        for (auto& f : out.fy) f = assemble_interface_flux(f, f, f);
        return out;
    }

    const int cx = nx + 1;
    std::vector<CornerFlux> cf(static_cast<std::size_t>(cx) * (ny + 1));
    auto node = [&](int ci, int cj) -> CornerFlux& { return cf[static_cast<std::size_t>(cj) * cx + ci]; };
    for (int cj = 0; cj <= ny; ++cj)
        for (int ci = 0; ci <= nx; ++ci) node(ci, cj) = corner_flux(corner_states(rec, ci, cj), gas);

    for (int j = 0; j < ny; ++j)
        for (int i = 0; i <= nx; ++i)
            out.x_face(i, j) = assemble_interface_flux(node(i, j + 1).f_star, out.x_face(i, j), node(i, j).f_star);
    for (int j = 0; j <= ny; ++j)
        for (int i = 0; i < nx; ++i)
            out.y_face(i, j) = assemble_interface_flux(node(i + 1, j).g_star, out.y_face(i, j), node(i, j).g_star);
    return out;
}

CflRule SchemeConfig::effective_cfl_rule() const noexcept {
    if (cfl_rule != CflRule::Auto) return cfl_rule;
    return scheme == Scheme::TwoState ? CflRule::Combined : CflRule::PerAxis;
}

double compute_time_step(const Field& field, const SchemeConfig& config, const GasModel& gas, double t_end) {
    const Grid& g = field.grid();
    const bool combined = config.effective_cfl_rule() == CflRule::Combined;
    double dt = std::numeric_limits<double>::infinity();
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const PrimitiveState s = field.primitive(i, j, gas);
            const double a = sound_speed(s, gas);
            const double tx = g.dx / (std::abs(s.u) + a);
            const double ty = g.dy / (std::abs(s.v) + a);
            dt = std::min(dt, combined ? 1.0 / (1.0 / tx + 1.0 / ty) : std::min(tx, ty));
        }
    }
    dt *= config.cfl;
    const double remaining = t_end - field.time();
    if (remaining < dt) dt = std::max(remaining, 0.0);
    return dt;
}

Field euler_step(const Field& field, const SchemeConfig& config, const BoundarySpec& bcs, const GasModel& gas,
                 double dt, StepStats* stats, CornerSource corners) {
    Field work = field;
    apply_boundary_conditions(work, bcs, field.time(), gas);
    const Reconstruction rec = reconstruct(work, config, gas);
    if (stats) stats->fallback_cells += rec.fallback_cells();
    const InterfaceFluxes flux = compute_interface_fluxes(rec, config, gas, corners);

    const Grid& g = work.grid();
    const double rx = dt / g.dx;
    const double ry = dt / g.dy;
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            FluxVector u = work(i, j).as_vector();
            u += rx * (flux.x_face(i, j) - flux.x_face(i + 1, j));
            u += ry * (flux.y_face(i, j) - flux.y_face(i, j + 1));
            work(i, j) = ConservedState::from_vector(u);
        }
    }
    work.set_time(field.time() + dt);
    check_interior(work, gas);
    return work;
}

Field advance(const Field& field, const SchemeConfig& config, const BoundarySpec& bcs, const GasModel& gas, double dt,
              StepStats* stats) {
    if (config.order == Order::First) return euler_step(field, config, bcs, gas, dt, stats);

    const Field stage1 = euler_step(field, config, bcs, gas, dt, stats);
    const Field stage2 = euler_step(stage1, config, bcs, gas, dt, stats);
    Field out = field;
    const Grid& g = out.grid();
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            out(i, j) = ConservedState::from_vector(0.5 * (field(i, j).as_vector() + stage2(i, j).as_vector()));
    out.set_time(field.time() + dt);
    check_interior(out, gas);
    return out;
}

}  // namespace gmcusp
