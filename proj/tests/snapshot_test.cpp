#include <cmath>
#include <filesystem>
#include <sstream>
#include <string>

#include "doctest.h"
#include "gmcusp/snapshot.hpp"
#include "support/generators.hpp"

using namespace gmcusp;
using gmcusp::testing::StateGenerator;

namespace {

const GasModel kGas;

Field random_field(int nx, int ny, unsigned seed) {
    StateGenerator gen(seed);
    Field f(Grid::span(nx, ny, -1.0, 3.0, 0.5, 2.0));
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) f.set_primitive(i, j, gen.state(), kGas);
    return f;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("csv layout") {
    Field f(Grid::span(4, 4, 0.0, 4.0, 0.0, 2.0));
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) f.set_primitive(i, j, {1.0 + i + 10 * j, 0.5, -0.25, 2.0}, kGas);
    const std::vector<std::string> rows = lines(format_snapshot(f, kGas, SnapshotFormat::Csv));
    REQUIRE(rows.size() == 17);
    CHECK(rows[0] == "x,y,rho,u,v,p");
    CHECK(rows[1] == "0.5,0.25,1,0.5,-0.25,2");
    CHECK(rows[2] == "1.5,0.25,2,0.5,-0.25,2");
    CHECK(rows[5] == "0.5,0.75,11,0.5,-0.25,2");
}

TEST_CASE("csv round trip is exact") {
    for (unsigned seed : {1u, 2u, 3u}) {
        const Field f = random_field(7, 5, seed);
        const CsvSnapshot s = parse_csv_snapshot(format_snapshot(f, kGas, SnapshotFormat::Csv));
        REQUIRE(s.nx == 7);
        REQUIRE(s.ny == 5);
        for (int j = 0; j < 5; ++j)
            for (int i = 0; i < 7; ++i) {
                const PrimitiveState p = f.primitive(i, j, kGas);
                CHECK(s.at(i, j) == p);
                CHECK(s.x[static_cast<std::size_t>(j) * 7 + i] == f.grid().xc(i));
                CHECK(s.y[static_cast<std::size_t>(j) * 7 + i] == f.grid().yc(j));
            }
    }
}

TEST_CASE("csv parse errors") {
    CHECK_THROWS_AS(parse_csv_snapshot(""), IoError);
    CHECK_THROWS_AS(parse_csv_snapshot("x,y,rho\n"), IoError);
    CHECK_THROWS_AS(parse_csv_snapshot("x,y,rho,u,v,p\n0,0,1,0,0\n"), IoError);
    CHECK_THROWS_AS(parse_csv_snapshot("x,y,rho,u,v,p\n0,0,1,0,0,abc\n"), IoError);
    CHECK_THROWS_AS(read_csv_snapshot("/nonexistent/snapshot.csv"), IoError);
}

TEST_CASE("vtk layout") {
    const Field f = random_field(6, 4, 4);
    const std::string text = format_snapshot(f, kGas, SnapshotFormat::Vtk);
    const std::vector<std::string> rows = lines(text);
    REQUIRE(rows.size() > 10);
    CHECK(rows[0] == "# vtk DataFile Version 3.0");
    CHECK(rows[2] == "ASCII");
    CHECK(rows[3] == "DATASET STRUCTURED_POINTS");
    CHECK(text.find("DIMENSIONS 6 4 1") != std::string::npos);
    CHECK(text.find("POINT_DATA 24") != std::string::npos);
    CHECK(text.find("SCALARS rho double") != std::string::npos);
    CHECK(text.find("SCALARS p double") != std::string::npos);
    CHECK(text.find("VECTORS velocity double") != std::string::npos);
}

TEST_CASE("snapshot files") {
    const auto dir = std::filesystem::temp_directory_path() / "gmcusp_snapshot_test";
    std::filesystem::create_directories(dir);
    const Field f = random_field(5, 4, 9);
    write_snapshot(f, kGas, dir / "a.csv", SnapshotFormat::Csv);
    write_snapshot(f, kGas, dir / "a.vtk", SnapshotFormat::Vtk);
    CHECK(read_csv_snapshot(dir / "a.csv").at(3, 2) == f.primitive(3, 2, kGas));
    CHECK(std::filesystem::file_size(dir / "a.vtk") > 0);
    CHECK_THROWS_AS(write_snapshot(f, kGas, dir / "missing" / "a.csv", SnapshotFormat::Csv), IoError);
    CHECK(snapshot_extension(SnapshotFormat::Csv) == ".csv");
    CHECK(snapshot_extension(SnapshotFormat::Vtk) == ".vtk");
    std::filesystem::remove_all(dir);
}
