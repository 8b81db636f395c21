#pragma once

#include <cstddef>
#include <vector>

#include "gmcusp/euler.hpp"

namespace gmcusp {

/// Uniform Cartesian grid. Cell (i, j) covers
/// [x0 + i dx, x0 + (i+1) dx] x [y0 + j dy, y0 + (j+1) dy]; interior indices
/// run over [0, nx) x [0, ny), ghost cells extend `ghost` layers beyond.
struct Grid {
    int nx = 4;
    int ny = 4;
    double x0 = 0.0;
    double y0 = 0.0;
    double dx = 1.0;
    double dy = 1.0;
    int ghost = 2;

    /// Grid spanning [x_lo, x_hi] x [y_lo, y_hi]; throws ConfigError on invalid input.
    static Grid span(int nx, int ny, double x_lo, double x_hi, double y_lo, double y_hi, int ghost = 2);

    /// Throws ConfigError if the invariants (nx, ny >= 4, positive spacing, ghost >= 2) fail.
    void validate() const;

    double xc(int i) const noexcept { return x0 + (i + 0.5) * dx; }
    double yc(int j) const noexcept { return y0 + (j + 0.5) * dy; }
    double x_hi() const noexcept { return x0 + nx * dx; }
    double y_hi() const noexcept { return y0 + ny * dy; }
    double cell_area() const noexcept { return dx * dy; }

    int padded_nx() const noexcept { return nx + 2 * ghost; }
    int padded_ny() const noexcept { return ny + 2 * ghost; }
    std::size_t padded_size() const noexcept {
        return static_cast<std::size_t>(padded_nx()) * static_cast<std::size_t>(padded_ny());
    }
    std::size_t index(int i, int j) const noexcept {
        return static_cast<std::size_t>(j + ghost) * static_cast<std::size_t>(padded_nx()) +
               static_cast<std::size_t>(i + ghost);
    }

    friend bool operator==(const Grid&, const Grid&) = default;
};

/// Cell averages of the conserved variables over the grid, ghosts included.
class Field {
public:
    Field() = default;
    explicit Field(const Grid& grid, double time = 0.0);

    const Grid& grid() const noexcept { return grid_; }
    double time() const noexcept { return time_; }
    void set_time(double t) noexcept { time_ = t; }

    ConservedState& operator()(int i, int j) noexcept { return data_[grid_.index(i, j)]; }
    const ConservedState& operator()(int i, int j) const noexcept { return data_[grid_.index(i, j)]; }

    std::vector<ConservedState>& data() noexcept { return data_; }
    const std::vector<ConservedState>& data() const noexcept { return data_; }

    /// Primitive state of a cell; PositivityError carries the cell index.
    PrimitiveState primitive(int i, int j, const GasModel& gas) const;

    void set_primitive(int i, int j, const PrimitiveState& s, const GasModel& gas) noexcept;

    /// Sum of U * cell area over interior cells.
    FluxVector totals() const noexcept;

private:
    Grid grid_;
    std::vector<ConservedState> data_;
    double time_ = 0.0;
};

}  // namespace gmcusp
