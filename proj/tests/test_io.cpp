#include <doctest.h>

#include <sstream>

#include "qda/geometry.hpp"
#include "qda/io.hpp"

using namespace qda;
using units::nm;
using units::um;

TEST_CASE("assembly config round-trip") {
    MagnetAssembly a = build_mm_3x3();
    std::ostringstream out;
    write_assembly(out, a);
    std::istringstream in(out.str());
    MagnetAssembly b = parse_assembly(in);
    REQUIRE(b.prisms.size() == a.prisms.size());
    for (size_t i = 0; i < a.prisms.size(); ++i) {
        CHECK((a.prisms[i].corner_min - b.prisms[i].corner_min).norm() < 1e-15);
        CHECK((a.prisms[i].corner_max - b.prisms[i].corner_max).norm() < 1e-15);
        CHECK((a.prisms[i].magnetization - b.prisms[i].magnetization).norm() < 1e-9);
    }
}

TEST_CASE("assembly config rejects malformed input") {
    std::istringstream bad1("prism 0 0 0 100 100\n");
    CHECK_THROWS_AS(parse_assembly(bad1), std::invalid_argument);
    std::istringstream bad2("cuboid 0 0 0 100 100 100 1400 0 0\n");
    CHECK_THROWS_AS(parse_assembly(bad2), std::invalid_argument);
    std::istringstream bad3("prism 0 0 0 -5 100 100 1400 0 0\n");  // inverted corners
    CHECK_THROWS(parse_assembly(bad3));
    CHECK_THROWS(parse_assembly_file("/nonexistent/assembly.txt"));
    std::istringstream ok("# comment only\n\n");
    CHECK(parse_assembly(ok).empty());
}

TEST_CASE("field map CSV format contract") {
    MagnetAssembly a;
    a.add({{-100 * nm, -100 * nm, 100 * nm}, {100 * nm, 100 * nm, 200 * nm}, {1.4e6, 0, 0}});
    std::vector<Vec3> pts{{0, 0, 0}, {50 * nm, 0, 0}};
    auto samples = field_map(a, pts);
    std::ostringstream out;
    write_field_map_csv(out, samples);
    std::istringstream lines(out.str());
    std::string header;
    std::getline(lines, header);
    CHECK(header == "x_nm,y_nm,z_nm,Bx_mT,By_mT,Bz_mT");
    std::string row;
    int rows = 0;
    while (std::getline(lines, row)) ++rows;
    CHECK(rows == 2);
}

TEST_CASE("emitters are byte-stable") {
    MagnetAssembly a = build_mm_3x3();
    std::vector<Vec3> pts;
    for (int i = 0; i < 16; ++i) pts.push_back({i * 30 * nm, 10 * nm, 0});
    auto samples = field_map(a, pts);
    std::ostringstream o1, o2;
    write_field_map_csv(o1, samples);
    write_field_map_csv(o2, samples);
    CHECK(o1.str() == o2.str());
    CHECK(fmt_g9(0.0) == "0");
    CHECK(fmt_g9(-0.0) == "0");
    CHECK(fmt_g9(1.0 / 3.0) == "0.333333333");
}

TEST_CASE("potential slice CSV header") {
    PotentialGrid g;
    g.nx = g.ny = 2;
    g.nz = 1;
    g.h = 5 * nm;
    g.origin = {0, 0, 0};
    g.phi = {0.0, 0.1, 0.2, 0.3};
    std::ostringstream out;
    write_potential_slice_csv(out, g, 0.0);
    CHECK(out.str().rfind("x_nm,y_nm,phi_V\n", 0) == 0);
}
