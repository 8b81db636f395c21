#include "gmcusp/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace gmcusp {

ErrorNorms error_norms(const Field& field, const Field& exact) {
    const Grid& g = field.grid();
    if (!(g == exact.grid())) throw ShapeError("error norms need fields on the same grid");
    ErrorNorms n;
    n.dx = g.dx;
    double sum = 0.0;
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const double e = std::abs(field(i, j).rho - exact(i, j).rho);
            sum += e;
            n.linf = std::max(n.linf, e);
        }
    }
    n.l1 = sum / (static_cast<double>(g.nx) * g.ny);
    return n;
}

double order_of_accuracy(double coarse_norm, double coarse_dx, double fine_norm, double fine_dx) {
    if (!(coarse_norm > 0.0) || !(fine_norm > 0.0)) throw DomainError("order of accuracy needs non-zero norms");
    if (!(coarse_dx > 0.0) || !(fine_dx > 0.0) || coarse_dx == fine_dx)
        throw DomainError("order of accuracy needs two distinct positive spacings");
    return (std::log10(fine_norm) - std::log10(coarse_norm)) / (std::log10(fine_dx) - std::log10(coarse_dx));
}

AccuracyOrders order_of_accuracy(const ErrorNorms& coarse, const ErrorNorms& fine) {
    return {order_of_accuracy(coarse.l1, coarse.dx, fine.l1, fine.dx),
            order_of_accuracy(coarse.linf, coarse.dx, fine.linf, fine.dx)};
}

InstabilityMetrics instability_metrics(const Field& field, const ShockProfile& profile, const GasModel& gas) {
    const Grid& g = field.grid();
    InstabilityMetrics m;

    std::vector<PrimitiveState> prim(static_cast<std::size_t>(g.nx) * g.ny);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const ConservedState& c = field(i, j);
            PrimitiveState s{c.rho, c.mx / c.rho, c.my / c.rho,
                             gas.gamma_minus_one() * (c.E - 0.5 * (c.mx * c.mx + c.my * c.my) / c.rho)};
            if (!s.is_valid()) {
                m.blowup = true;
                m.max_transverse_velocity = std::numeric_limits<double>::infinity();
                m.shock_position_stddev = std::numeric_limits<double>::infinity();
                return m;
            }
            prim[static_cast<std::size_t>(j) * g.nx + i] = s;
        }
    }
    auto at = [&](int i, int j) -> const PrimitiveState& { return prim[static_cast<std::size_t>(j) * g.nx + i]; };

    const double threshold = 0.5 * (profile.rho_upstream + profile.rho_downstream);
    std::vector<double> position(g.ny);
    for (int j = 0; j < g.ny; ++j) {
        bool found = false;
        for (int i = 0; i + 1 < g.nx && !found; ++i) {
            const double s0 = at(i, j).rho - threshold;
            const double s1 = at(i + 1, j).rho - threshold;
            if (s0 == 0.0) {
                position[j] = i;
                found = true;
            } else if ((s0 < 0.0) != (s1 < 0.0)) {
                position[j] = i + s0 / (s0 - s1);
                found = true;
            }
        }
        if (!found) throw ShockNotFound(j);
    }

    double mean = 0.0;
    for (double x : position) mean += x;
    mean /= g.ny;
    double var = 0.0;
    for (double x : position) var += (x - mean) * (x - mean);
    m.mean_shock_position = mean;
    m.shock_position_stddev = std::sqrt(var / g.ny);

    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const double behind = profile.downstream_is_left ? mean - i : i - mean;
            if (behind > kDownstreamOffsetCells)
                m.max_transverse_velocity = std::max(m.max_transverse_velocity, std::abs(at(i, j).v));
        }
    }
    return m;
}

InstabilityMetrics instability_metrics(const Field& field, const CaseSpec& spec, const GasModel& gas) {
    return instability_metrics(field, shock_profile(spec, gas), gas);
}

}  // namespace gmcusp
