#include "gmcusp/snapshot.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gmcusp {
namespace {

void append(std::string& out, double v) {
    char buf[32];
    const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
    out.append(buf, static_cast<std::size_t>(n));
}

std::string format_csv(const Field& field, const GasModel& gas) {
    const Grid& g = field.grid();
    std::string out = "x,y,rho,u,v,p\n";
    out.reserve(out.size() + static_cast<std::size_t>(g.nx) * g.ny * 6 * 25);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const PrimitiveState s = field.primitive(i, j, gas);
            for (double v : {g.xc(i), g.yc(j), s.rho, s.u, s.v}) {
                append(out, v);
                out += ',';
            }
            append(out, s.p);
            out += '\n';
        }
    }
    return out;
}

std::string format_vtk(const Field& field, const GasModel& gas) {
    const Grid& g = field.grid();
    std::vector<PrimitiveState> prim;
    prim.reserve(static_cast<std::size_t>(g.nx) * g.ny);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) prim.push_back(field.primitive(i, j, gas));

    std::string out = "# vtk DataFile Version 3.0\n";
    out += "gmcusp snapshot t=";
    append(out, field.time());
    out += "\nASCII\nDATASET STRUCTURED_POINTS\n";
    out += "DIMENSIONS " + std::to_string(g.nx) + " " + std::to_string(g.ny) + " 1\n";
    out += "ORIGIN ";
    append(out, g.xc(0));
    out += ' ';
    append(out, g.yc(0));
    out += " 0\nSPACING ";
    append(out, g.dx);
    out += ' ';
    append(out, g.dy);
    out += " 1\nPOINT_DATA " + std::to_string(prim.size()) + "\n";

    auto scalar = [&](const char* name, double PrimitiveState::*member) {
        out += "SCALARS ";
        out += name;
        out += " double 1\nLOOKUP_TABLE default\n";
        for (const PrimitiveState& s : prim) {
            append(out, s.*member);
            out += '\n';
        }
    };
    scalar("rho", &PrimitiveState::rho);
    scalar("p", &PrimitiveState::p);
    out += "VECTORS velocity double\n";
    for (const PrimitiveState& s : prim) {
        append(out, s.u);
        out += ' ';
        append(out, s.v);
        out += " 0\n";
    }
    return out;
}

}  // namespace

std::string_view snapshot_extension(SnapshotFormat format) noexcept {
    return format == SnapshotFormat::Csv ? ".csv" : ".vtk";
}

std::string format_snapshot(const Field& field, const GasModel& gas, SnapshotFormat format) {
    return format == SnapshotFormat::Csv ? format_csv(field, gas) : format_vtk(field, gas);
}

void write_snapshot(const Field& field, const GasModel& gas, const std::filesystem::path& path,
                    SnapshotFormat format) {
    const std::string text = format_snapshot(field, gas, format);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.close();
    if (!out) throw IoError("failed writing " + path.string());
}

CsvSnapshot parse_csv_snapshot(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "x,y,rho,u,v,p") throw IoError("snapshot CSV: bad header");

    CsvSnapshot snap;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        double v[6];
        const char* p = line.data();
        const char* end = line.data() + line.size();
        for (int k = 0; k < 6; ++k) {
            const auto [next, ec] = std::from_chars(p, end, v[k]);
            if (ec != std::errc() || (k < 5 && (next == end || *next != ',')) || (k == 5 && next != end))
                throw IoError("snapshot CSV: malformed row at line " + std::to_string(line_no));
            p = next + 1;
        }
        snap.x.push_back(v[0]);
        snap.y.push_back(v[1]);
        snap.cells.push_back({v[2], v[3], v[4], v[5]});
    }
    if (snap.cells.empty()) throw IoError("snapshot CSV: no data rows");

    // i varies fastest: the first row ends where y changes.
    std::size_t nx = 1;
    while (nx < snap.y.size() && snap.y[nx] == snap.y[0]) ++nx;
    if (snap.cells.size() % nx != 0) throw IoError("snapshot CSV: rows do not form a rectangular grid");
    snap.nx = static_cast<int>(nx);
    snap.ny = static_cast<int>(snap.cells.size() / nx);
    return snap;
}

CsvSnapshot read_csv_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_csv_snapshot(text.str());
}

}  // namespace gmcusp
