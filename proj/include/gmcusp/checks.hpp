#pragma once

#include <string>
#include <vector>

#include "gmcusp/solver.hpp"

namespace gmcusp {

/// Outcome of one built-in invariant check.
struct CheckResult {
    std::string name;
    bool passed = false;
    double measured = 0.0;
    double tolerance = 0.0;
};

/// Max |rho - rho0| after 1000 first-order steps of a stationary contact
/// (rho 1 | 0.125, p = 1, at rest) on 100 x 4 cells.
double stationary_contact_drift(Scheme scheme, const GasModel& gas, int steps = 1000);

/// Max relative deviation of a uniform moving state after `steps` steps on a
/// periodic grid.
double free_stream_drift(const SchemeConfig& config, const GasModel& gas, int steps = 50);

/// Max relative change of the conserved totals of a smooth periodic field
/// over `steps` steps.
double conservation_drift(const SchemeConfig& config, const GasModel& gas, int steps = 100);

/// Max relative distance between the midpoint/corner fluxes of a single
/// repeated state and the exact Euler flux, over `samples` random states.
double flux_consistency_error(const GasModel& gas, int samples = 1000, unsigned seed = 7);

/// Same comparison restricted to states moving at Mach `mach` along +x.
double supersonic_flux_error(const GasModel& gas, double mach = 3.0, int samples = 1000, unsigned seed = 11);

/// Every check above at its acceptance tolerance, for both schemes.
std::vector<CheckResult> run_invariant_checks(const GasModel& gas);

}  // namespace gmcusp
