#include <doctest.h>

#include <random>

#include "qda/addressability.hpp"
#include "qda/circuits.hpp"
#include "qda/electrostatics.hpp"
#include "qda/geometry.hpp"
#include "qda/magnet.hpp"
#include "qda/parallel.hpp"
#include "qda/statevector.hpp"

using namespace qda;
using units::nm;
using units::um;

// The OpenMP lanes must be bit-identical to the serial reference lanes.

TEST_CASE("deterministic_sum is exact across lanes") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<double> xs(20000);
    for (double& x : xs) x = d(rng);
    auto f = [&](std::ptrdiff_t i) { return xs[static_cast<size_t>(i)]; };
    double serial = deterministic_sum(Exec::serial, static_cast<std::ptrdiff_t>(xs.size()), f);
    double parallel = deterministic_sum(Exec::parallel, static_cast<std::ptrdiff_t>(xs.size()), f);
    CHECK(serial == parallel);
}

TEST_CASE("field_map lanes agree bit-for-bit") {
    MagnetAssembly a = build_mm_3x3();
    std::vector<Vec3> pts;
    for (int j = 0; j < 40; ++j)
        for (int i = 0; i < 40; ++i)
            pts.push_back({(-1.0 + 0.05 * i) * um, (-1.0 + 0.05 * j) * um, 0.0});
    auto s = field_map(a, pts, Exec::serial);
    auto p = field_map(a, pts, Exec::parallel);
    REQUIRE(s.size() == p.size());
    for (size_t i = 0; i < s.size(); ++i) {
        CHECK(s[i].ok == p[i].ok);
        CHECK(s[i].b == p[i].b);
    }
}

TEST_CASE("statevector lanes agree bit-for-bit") {
    // a non-trivial circuit over 10 qubits
    Circuit c(10);
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> q(0, 9);
    std::uniform_int_distribution<int> kind(0, 5);
    for (int i = 0; i < 200; ++i) {
        int a = q(rng), b = q(rng);
        if (a == b) b = (b + 1) % 10;
        switch (kind(rng)) {
            case 0: c << Gate::h(a); break;
            case 1: c << Gate::phase(a, 0.1 * i); break;
            case 2: c << Gate::cnot(a, b); break;
            case 3: c << Gate::cz(a, b); break;
            case 4: c << Gate::cv(a, b, 4); break;
            case 5: c << Gate::swap(a, b); break;
        }
    }
    Statevector s = simulate(c, Exec::serial);
    Statevector p = simulate(c, Exec::parallel);
    for (size_t i = 0; i < s.amps.size(); ++i) CHECK(s.amps[i] == p.amps[i]);
}

TEST_CASE("laplace solver lanes agree bit-for-bit") {
    GateStack stack = build_gate_stack_3x3();
    BoxParams bp;
    bp.half_x = 150 * nm;  // small box keeps this test quick
    bp.half_y = 150 * nm;
    SimulationBox box = discretize(stack, bp);
    SolveOptions so;
    so.tol = 1e-6;
    so.exec = Exec::serial;
    PotentialGrid gs = solve_laplace(box, so);
    so.exec = Exec::parallel;
    PotentialGrid gp = solve_laplace(box, so);
    CHECK(gs.iterations == gp.iterations);
    CHECK(gs.residual == gp.residual);
    REQUIRE(gs.phi.size() == gp.phi.size());
    size_t mismatches = 0;
    for (size_t i = 0; i < gs.phi.size(); ++i) mismatches += gs.phi[i] != gp.phi[i];
    CHECK(mismatches == 0);
}

TEST_CASE("addressability report lanes agree") {
    MagnetAssembly a = build_co_gate_array(3, 3);
    DotLayout l = build_dot_layout(3, 3, 120 * nm, 0);
    AddressabilityReport rs = addressability_report(a, l, {}, Exec::serial);
    AddressabilityReport rp = addressability_report(a, l, {}, Exec::parallel);
    for (size_t i = 0; i < rs.dots.size(); ++i) {
        CHECK(rs.dots[i].b_trans_mt_per_nm == rp.dots[i].b_trans_mt_per_nm);
        CHECK(rs.dots[i].b_long_mt == rp.dots[i].b_long_mt);
    }
    CHECK(rs.min_pairwise_delta_mhz == rp.min_pairwise_delta_mhz);
}
