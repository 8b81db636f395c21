#pragma once

#include <limits>
#include <vector>

#include "gmcusp/boundary.hpp"
#include "gmcusp/corner_riemann.hpp"
#include "gmcusp/field.hpp"

namespace gmcusp {

enum class Scheme { TwoState, GenuinelyMultidimensional };
enum class Order { First, Second };
enum class Limiter { Minmod, VanLeer };

/// How the Courant number maps to a time step.
///  PerAxis:  dt = cfl * min(dx / (|u| + a), dy / (|v| + a))
///  Combined: dt = cfl / max((|u| + a) / dx + (|v| + a) / dy)
///  Auto:     PerAxis for the corner-coupled scheme, Combined for TwoState,
///            whose unsplit update is only stable under the summed bound.
enum class CflRule { Auto, PerAxis, Combined };

struct SchemeConfig {
    Scheme scheme = Scheme::GenuinelyMultidimensional;
    Order order = Order::Second;
    double cfl = 0.5;
    Limiter limiter = Limiter::Minmod;
    CflRule cfl_rule = CflRule::Auto;

    /// The rule Auto resolves to for this scheme.
    CflRule effective_cfl_rule() const noexcept;

    /// Throws ConfigError unless 0 < cfl <= 1.
    void validate() const;
};

double limit_slope(double left_diff, double right_diff, Limiter limiter) noexcept;

/// Piecewise-linear reconstruction of the primitive variables. Slopes are
/// undivided (per cell width) and stored for the cells of the ring
/// [-1, nx] x [-1, ny], which covers every face and corner of the interior.
class Reconstruction {
public:
    Reconstruction(const Grid& grid);

    const Grid& grid() const noexcept { return grid_; }

    const PrimitiveState& center(int i, int j) const noexcept { return center_[grid_.index(i, j)]; }

    /// Value at the face midpoint on side (di, dj) in {(+-1, 0), (0, +-1)}
    /// or at the corner (di, dj) in {-1, +1}^2.
    PrimitiveState at(int i, int j, int di, int dj) const noexcept;

    PrimitiveState east(int i, int j) const noexcept { return at(i, j, 1, 0); }
    PrimitiveState west(int i, int j) const noexcept { return at(i, j, -1, 0); }
    PrimitiveState north(int i, int j) const noexcept { return at(i, j, 0, 1); }
    PrimitiveState south(int i, int j) const noexcept { return at(i, j, 0, -1); }

    /// Cells that reverted to piecewise-constant data in this reconstruction.
    int fallback_cells() const noexcept { return fallback_cells_; }

private:
    friend Reconstruction reconstruct(const Field&, const SchemeConfig&, const GasModel&);

    Grid grid_;
    std::vector<PrimitiveState> center_;
    std::vector<PrimitiveState> slope_x_;
    std::vector<PrimitiveState> slope_y_;
    int fallback_cells_ = 0;
};

/// Requires filled ghost layers. First order gives piecewise-constant data;
/// second order limited linear data, falling back to first order in any cell
/// whose face (two-state) or corner (multidimensional) values would lose
/// positivity. Throws PositivityError if a cell average itself is invalid.
Reconstruction reconstruct(const Field& field, const SchemeConfig& config, const GasModel& gas);

/// Simpson combination (corner_a + 4 mid + corner_b) / 6, evaluated as
/// mid + ((corner_a - mid) + (corner_b - mid)) / 6 so that equal inputs
/// return `mid` bitwise.
FluxVector assemble_interface_flux(const FluxVector& corner_a, const FluxVector& mid,
                                   const FluxVector& corner_b) noexcept;

/// Total numerical fluxes through every interior face.
/// fx(i, j): face x = x0 + i dx between cells (i-1, j) and (i, j), i in [0, nx].
/// fy(i, j): face y = y0 + j dy between cells (i, j-1) and (i, j), j in [0, ny].
struct InterfaceFluxes {
    int nx = 0;
    int ny = 0;
    std::vector<FluxVector> fx;
    std::vector<FluxVector> fy;

    FluxVector& x_face(int i, int j) noexcept { return fx[static_cast<std::size_t>(j) * (nx + 1) + i]; }
    const FluxVector& x_face(int i, int j) const noexcept { return fx[static_cast<std::size_t>(j) * (nx + 1) + i]; }
    FluxVector& y_face(int i, int j) noexcept { return fy[static_cast<std::size_t>(j) * nx + i]; }
    const FluxVector& y_face(int i, int j) const noexcept { return fy[static_cast<std::size_t>(j) * nx + i]; }
};

/// Corner states at grid node (ci, cj), i.e. the point (x0 + ci dx, y0 + cj dy).
CornerStates corner_states(const Reconstruction& rec, int ci, int cj) noexcept;

enum class CornerSource {
    Riemann,   ///< four-state corner solutions
    Midpoint,  ///< corner contributions replaced by the face's own midpoint flux
};

InterfaceFluxes compute_interface_fluxes(const Reconstruction& rec, const SchemeConfig& config, const GasModel& gas,
                                         CornerSource corners = CornerSource::Riemann);

/// CFL-limited step (see CflRule), clipped so that time + dt does not pass
/// `t_end`.
double compute_time_step(const Field& field, const SchemeConfig& config, const GasModel& gas,
                         double t_end = std::numeric_limits<double>::infinity());

struct StepStats {
    int fallback_cells = 0;
};

/// One forward-Euler update U + dt L(U) with ghosts filled at field.time().
Field euler_step(const Field& field, const SchemeConfig& config, const BoundarySpec& bcs, const GasModel& gas,
                 double dt, StepStats* stats = nullptr, CornerSource corners = CornerSource::Riemann);

/// Advance by dt: forward Euler for first order, two-stage SSP Runge-Kutta
/// for second order. Throws PositivityError with the cell index when the
/// update produces an invalid state.
Field advance(const Field& field, const SchemeConfig& config, const BoundarySpec& bcs, const GasModel& gas, double dt,
              StepStats* stats = nullptr);

}  // namespace gmcusp
