#pragma once

#include "gmcusp/cases.hpp"
#include "gmcusp/field.hpp"

namespace gmcusp {

/// Density error norms; l1 is the arithmetic mean of |rho - rho_exact| over cells.
struct ErrorNorms {
    double l1 = 0.0;
    double linf = 0.0;
    double dx = 0.0;
};

/// Throws ShapeError when the two fields live on different grids.
ErrorNorms error_norms(const Field& field, const Field& exact);

/// Observed order between two refinement levels,
/// (log10 eta_fine - log10 eta_coarse) / (log10 dx_fine - log10 dx_coarse).
/// Throws DomainError on zero norms or equal spacings.
double order_of_accuracy(double coarse_norm, double coarse_dx, double fine_norm, double fine_dx);

struct AccuracyOrders {
    double l1 = 0.0;
    double linf = 0.0;
};
AccuracyOrders order_of_accuracy(const ErrorNorms& coarse, const ErrorNorms& fine);

struct InstabilityMetrics {
    /// Max |v| over cells more than 5 cells downstream of the mean shock position.
    double max_transverse_velocity = 0.0;
    /// Population standard deviation of the per-row shock position, in cells.
    double shock_position_stddev = 0.0;
    /// Mean shock position in cell-index units (cell i has its center at i).
    double mean_shock_position = 0.0;
    bool blowup = false;
};

/// Distance behind the mean shock position beyond which |v| is sampled.
inline constexpr double kDownstreamOffsetCells = 5.0;

/// Shock position of row j: first crossing (scanning in +x) of the mean of
/// the upstream and downstream densities, linearly interpolated between
/// cell centers. Throws ShockNotFound if the row has no crossing; a field
/// with non-finite or non-positive states reports blowup instead.
InstabilityMetrics instability_metrics(const Field& field, const ShockProfile& profile, const GasModel& gas);
InstabilityMetrics instability_metrics(const Field& field, const CaseSpec& spec, const GasModel& gas);

}  // namespace gmcusp
