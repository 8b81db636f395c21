#include "gmcusp/euler.hpp"

#include <sstream>
#include <stdexcept>

namespace gmcusp {

GasModel::GasModel(double gamma) : gamma_(gamma) {
    if (!(gamma > 1.0) || !std::isfinite(gamma))
        throw std::invalid_argument("ratio of specific heats must exceed 1");
}

ConservedState primitive_to_conserved(const PrimitiveState& prim, const GasModel& gas) noexcept {
    const double kinetic = 0.5 * prim.rho * prim.q2();
    return {prim.rho, prim.rho * prim.u, prim.rho * prim.v, prim.p / gas.gamma_minus_one() + kinetic};
}

PrimitiveState conserved_to_primitive(const ConservedState& cons, const GasModel& gas) {
    PrimitiveState prim;
    prim.rho = cons.rho;
    if (!(cons.rho > 0.0) || !std::isfinite(cons.rho)) {
        std::ostringstream msg;
        msg << "non-positive density " << cons.rho;
        throw PositivityError(msg.str());
    }
    prim.u = cons.mx / cons.rho;
    prim.v = cons.my / cons.rho;
    prim.p = gas.gamma_minus_one() * (cons.E - 0.5 * (cons.mx * prim.u + cons.my * prim.v));
    if (!prim.is_valid()) {
        std::ostringstream msg;
        msg << "non-positive pressure " << prim.p << " (rho=" << cons.rho << ", E=" << cons.E << ")";
        throw PositivityError(msg.str());
    }
    return prim;
}

SplitFlux split_flux(const PrimitiveState& prim, const GasModel& gas, Axis axis) noexcept {
    return {convective_flux(prim, axis), pressure_flux(prim, gas, axis)};
}

FluxVector euler_flux(const PrimitiveState& s, const GasModel& gas, Axis axis) noexcept {
    const double rho_e = s.p / gas.gamma_minus_one() + 0.5 * s.rho * s.q2();
    if (axis == Axis::X)
        return {{s.rho * s.u, s.rho * s.u * s.u + s.p, s.rho * s.u * s.v, s.u * (rho_e + s.p)}};
    return {{s.rho * s.v, s.rho * s.u * s.v, s.rho * s.v * s.v + s.p, s.v * (rho_e + s.p)}};
}

}  // namespace gmcusp
