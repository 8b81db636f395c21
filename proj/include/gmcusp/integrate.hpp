#pragma once

#include <functional>
#include <optional>
#include <string>

#include "gmcusp/solver.hpp"

namespace gmcusp {

struct IntegrationResult {
    Field field;  ///< last valid field (the state before a failed step on blow-up)
    long steps = 0;
    long fallback_cells = 0;
    bool blowup = false;
    double blowup_time = 0.0;
    std::optional<CellIndex> blowup_cell;
    std::string blowup_message;
};

struct IntegrationLimits {
    double t_final = 0.0;
    std::optional<long> max_steps;
};

/// Called after every accepted step with the new field and step count.
using StepObserver = std::function<void(const Field&, long)>;

/// March `initial` with CFL-limited steps until t_final or max_steps.
/// A PositivityError ends the run with blowup = true instead of escaping.
IntegrationResult integrate(Field initial, const SchemeConfig& config, const BoundarySpec& bcs, const GasModel& gas,
                            const IntegrationLimits& limits, const StepObserver& observer = {});

}  // namespace gmcusp
