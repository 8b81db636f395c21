#include "gmcusp/integrate.hpp"

#include <algorithm>
#include <cmath>

namespace gmcusp {

IntegrationResult integrate(Field initial, const SchemeConfig& config, const BoundarySpec& bcs, const GasModel& gas,
                            const IntegrationLimits& limits, const StepObserver& observer) {
    config.validate();
    IntegrationResult result;
    result.field = std::move(initial);

    while (result.field.time() < limits.t_final && (!limits.max_steps || result.steps < *limits.max_steps)) {
        try {
            const double dt = compute_time_step(result.field, config, gas, limits.t_final);
            if (!(dt > 0.0)) break;
            StepStats stats;
            Field next = advance(result.field, config, bcs, gas, dt, &stats);
            // Guard against round-off leaving a sliver of time before t_final.
            if (std::isfinite(limits.t_final) && limits.t_final - next.time() <= 1e-14 * std::max(1.0, limits.t_final))
                next.set_time(limits.t_final);
            result.field = std::move(next);
            result.fallback_cells += stats.fallback_cells;
            ++result.steps;
        } catch (const PositivityError& e) {
            result.blowup = true;
            result.blowup_time = result.field.time();
            result.blowup_cell = e.cell();
            result.blowup_message = e.what();
            break;
        }
        if (observer) observer(result.field, result.steps);
    }
    return result;
}

}  // namespace gmcusp
