#include "gmcusp/field.hpp"

#include <cmath>
#include <sstream>

namespace gmcusp {

Grid Grid::span(int nx, int ny, double x_lo, double x_hi, double y_lo, double y_hi, int ghost) {
    Grid g;
    g.nx = nx;
    g.ny = ny;
    g.x0 = x_lo;
    g.y0 = y_lo;
    g.dx = nx > 0 ? (x_hi - x_lo) / nx : 0.0;
    g.dy = ny > 0 ? (y_hi - y_lo) / ny : 0.0;
    g.ghost = ghost;
    g.validate();
    return g;
}

void Grid::validate() const {
    std::ostringstream msg;
    if (nx < 4 || ny < 4)
        msg << "grid needs at least 4x4 cells, got " << nx << "x" << ny;
    else if (!(dx > 0.0) || !(dy > 0.0) || !std::isfinite(dx) || !std::isfinite(dy))
        msg << "grid spacing must be positive";
    else if (ghost < 2)
        msg << "ghost width must be at least 2";
    if (!msg.str().empty()) throw ConfigError(msg.str());
}

Field::Field(const Grid& grid, double time) : grid_(grid), data_(grid.padded_size()), time_(time) {
    grid_.validate();
}

PrimitiveState Field::primitive(int i, int j, const GasModel& gas) const {
    try {
        return conserved_to_primitive((*this)(i, j), gas);
    } catch (const PositivityError& e) {
        std::ostringstream msg;
        msg << e.what() << " at cell (" << i << ", " << j << ")";
        throw PositivityError(msg.str(), CellIndex{i, j});
    }
}

void Field::set_primitive(int i, int j, const PrimitiveState& s, const GasModel& gas) noexcept {
    (*this)(i, j) = primitive_to_conserved(s, gas);
}

FluxVector Field::totals() const noexcept {
    FluxVector sum;
    for (int j = 0; j < grid_.ny; ++j)
        for (int i = 0; i < grid_.nx; ++i) sum += (*this)(i, j).as_vector();
    return grid_.cell_area() * sum;
}

}  // namespace gmcusp
