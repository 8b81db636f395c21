#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gmcusp/config.hpp"
#include "gmcusp/field.hpp"

namespace gmcusp {

/// Writes the interior cells. CSV: header `x,y,rho,u,v,p`, one row per cell
/// center with i varying fastest, 17 significant digits. VTK: legacy ASCII
/// STRUCTURED_POINTS with rho and p as scalars and (u, v, 0) as a vector.
/// Throws IoError on write failure.
void write_snapshot(const Field& field, const GasModel& gas, const std::filesystem::path& path,
                    SnapshotFormat format);

/// Snapshot rendered to a string (same bytes as the file).
std::string format_snapshot(const Field& field, const GasModel& gas, SnapshotFormat format);

/// Parsed CSV snapshot: cell centers and primitive states in file order.
struct CsvSnapshot {
    int nx = 0;
    int ny = 0;
    std::vector<double> x;
    std::vector<double> y;
    std::vector<PrimitiveState> cells;

    const PrimitiveState& at(int i, int j) const { return cells[static_cast<std::size_t>(j) * nx + i]; }
};

/// Throws IoError if the file is unreadable or not in the CSV layout above.
CsvSnapshot read_csv_snapshot(const std::filesystem::path& path);
CsvSnapshot parse_csv_snapshot(const std::string& text);

std::string_view snapshot_extension(SnapshotFormat format) noexcept;

}  // namespace gmcusp
