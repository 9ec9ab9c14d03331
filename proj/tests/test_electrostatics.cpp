#include <doctest.h>

#include <vector>

#include "qda/electrostatics.hpp"
#include "qda/geometry.hpp"
#include "oracle_dense_solve.hpp"

using namespace qda;
using units::nm;

namespace {

// small hand-built box: nx*ny*nz uniform dielectric with chosen metal cells
SimulationBox toy_box(int nx, int ny, int nz, double eps = 1.0) {
    SimulationBox b;
    b.nx = nx;
    b.ny = ny;
    b.nz = nz;
    b.h = 5 * nm;
    b.origin = {0, 0, 0};
    b.eps.assign(b.cell_count(), static_cast<float>(eps));
    b.metal.assign(b.cell_count(), 0);
    b.voltage.assign(b.cell_count(), 0.0f);
    return b;
}

}  // namespace

TEST_CASE("all metal cells at one voltage converge instantly to that voltage") {
    SimulationBox b = toy_box(8, 8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            b.metal[b.idx(i, j, 0)] = 1;
            b.voltage[b.idx(i, j, 0)] = 0.7f;
        }
    PotentialGrid g = solve_laplace(b);
    CHECK(g.iterations == 0);
    CHECK(g.converged);
    for (double v : g.phi) CHECK(v == doctest::Approx(0.7));
}

TEST_CASE("parallel plates give a linear ramp") {
    SimulationBox b = toy_box(16, 6, 6);
    for (int j = 0; j < 6; ++j)
        for (int k = 0; k < 6; ++k) {
            b.metal[b.idx(0, j, k)] = 1;
            b.voltage[b.idx(0, j, k)] = 0.0f;
            b.metal[b.idx(15, j, k)] = 1;
            b.voltage[b.idx(15, j, k)] = 1.0f;
        }
    SolveOptions opt;
    opt.tol = 1e-10;
    PotentialGrid g = solve_laplace(b, opt);
    for (int i = 0; i < 16; ++i)
        CHECK(g.phi[g.idx(i, 3, 3)] == doctest::Approx(i / 15.0).epsilon(1e-6));
}

TEST_CASE("solver matches a dense direct solve on a 12^3 box") {
    SimulationBox b = toy_box(12, 12, 12);
    // two electrodes with different permittivity bands in between
    for (int k = 6; k < 12; ++k)
        for (int j = 0; j < 12; ++j)
            for (int i = 0; i < 12; ++i) b.eps[b.idx(i, j, k)] = 3.9f;
    for (int i = 2; i < 6; ++i)
        for (int j = 2; j < 6; ++j) {
            b.metal[b.idx(i, j, 11)] = 1;
            b.voltage[b.idx(i, j, 11)] = 0.6f;
        }
    for (int i = 7; i < 11; ++i)
        for (int j = 6; j < 10; ++j) {
            b.metal[b.idx(i, j, 11)] = 1;
            b.voltage[b.idx(i, j, 11)] = 0.3f;
        }
    for (int i = 0; i < 12; ++i) {
        b.metal[b.idx(i, 0, 0)] = 1;  // grounded line at the bottom
        b.voltage[b.idx(i, 0, 0)] = 0.0f;
    }
    SolveOptions opt;
    opt.tol = 1e-12;
    PotentialGrid g = solve_laplace(b, opt);
    std::vector<double> want = oracle::dense_solve(b);
    double worst = 0.0;
    for (size_t c = 0; c < b.cell_count(); ++c) worst = std::max(worst, std::abs(g.phi[c] - want[c]));
    CHECK(worst < 1e-8);
}

TEST_CASE("discrete maximum principle on a converged solve") {
    SimulationBox b = toy_box(10, 10, 10);
    b.metal[b.idx(2, 2, 2)] = 1;
    b.voltage[b.idx(2, 2, 2)] = 1.0f;
    b.metal[b.idx(7, 7, 7)] = 1;
    b.voltage[b.idx(7, 7, 7)] = -0.5f;
    PotentialGrid g = solve_laplace(b);
    for (size_t c = 0; c < b.cell_count(); ++c) {
        if (b.metal[c]) continue;
        CHECK(g.phi[c] < 1.0);
        CHECK(g.phi[c] > -0.5);
    }
}

TEST_CASE("linearity in the boundary data") {
    SimulationBox b1 = toy_box(9, 9, 9);
    auto set = [&](SimulationBox& b, double va, double vb) {
        b.metal[b.idx(1, 4, 4)] = 1;
        b.voltage[b.idx(1, 4, 4)] = static_cast<float>(va);
        b.metal[b.idx(7, 4, 4)] = 1;
        b.voltage[b.idx(7, 4, 4)] = static_cast<float>(vb);
    };
    SimulationBox b2 = b1, b3 = b1;
    set(b1, 1.0, 0.0);
    set(b2, 0.0, 1.0);
    set(b3, 0.5, 0.25);  // 0.5*b1 + 0.25*b2
    SolveOptions opt;
    opt.tol = 1e-11;
    PotentialGrid g1 = solve_laplace(b1, opt), g2 = solve_laplace(b2, opt),
                  g3 = solve_laplace(b3, opt);
    for (size_t c = 0; c < b1.cell_count(); ++c)
        CHECK(g3.phi[c] == doctest::Approx(0.5 * g1.phi[c] + 0.25 * g2.phi[c]).epsilon(1e-6));
}

TEST_CASE("solver rejects bad inputs and reports divergence with history") {
    SimulationBox b = toy_box(6, 6, 6);
    CHECK_THROWS_AS(solve_laplace(b), std::invalid_argument);  // no metal anywhere
    b.metal[b.idx(0, 0, 0)] = 1;
    b.voltage[b.idx(0, 0, 0)] = 1.0f;
    b.metal[b.idx(5, 5, 5)] = 1;
    SolveOptions opt;
    opt.max_iter = 2;
    opt.tol = 1e-14;
    try {
        solve_laplace(b, opt);
        FAIL("expected SolverDiverged");
    } catch (const SolverDiverged& e) {
        CHECK(e.residual_history.size() >= 1);
    }
}

TEST_CASE("find_wells") {
    SUBCASE("constant plane has no strict maxima") {
        PotentialGrid g;
        g.nx = g.ny = 8;
        g.nz = 1;
        g.h = 5 * nm;
        g.origin = {0, 0, 0};
        g.phi.assign(64, 0.25);
        CHECK(find_wells(g, 0).empty());
        CHECK_THROWS_AS(find_wells(g, 1e-6), std::invalid_argument);
    }
    SUBCASE("two bumps found and sorted by depth") {
        PotentialGrid g;
        g.nx = g.ny = 16;
        g.nz = 1;
        g.h = 5 * nm;
        g.origin = {0, 0, 0};
        g.phi.assign(256, 0.0);
        auto bump = [&](int ci, int cj, double amp) {
            for (int j = 0; j < 16; ++j)
                for (int i = 0; i < 16; ++i) {
                    double d2 = (i - ci) * double(i - ci) + (j - cj) * double(j - cj);
                    g.phi[g.idx(i, j, 0)] += amp * std::exp(-d2 / 4.0);
                }
        };
        bump(4, 4, 0.5);
        bump(11, 10, 0.8);
        auto wells = find_wells(g, 0);
        REQUIRE(wells.size() == 2);
        CHECK(wells[0].i == 11);
        CHECK(wells[0].j == 10);
        CHECK(wells[1].i == 4);
        CHECK(wells[1].j == 4);
        CHECK(wells[0].phi > wells[1].phi);
    }
}

TEST_CASE("discretize maps the 3x3 stack onto voxels") {
    GateStack s = build_gate_stack_3x3();
    BoxParams bp;
    SimulationBox box = discretize(s, bp);
    SUBCASE("rejects too-coarse spacing") {
        BoxParams coarse = bp;
        coarse.h = 8 * nm;  // cannot resolve the 15 nm layer
        CHECK_THROWS_AS(discretize(s, coarse), std::invalid_argument);
    }
    SUBCASE("empty stack is all dielectric") {
        SimulationBox empty = discretize(GateStack{}, bp);
        CHECK(empty.metal_cell_count() == 0);
    }
    SUBCASE("plunger voxels at 0.6 V, barrier voxels at 0.4/0.3 V") {
        int v06 = 0, v04 = 0, v03 = 0;
        for (size_t c = 0; c < box.cell_count(); ++c) {
            if (!box.metal[c]) continue;
            if (box.voltage[c] == 0.6f) ++v06;
            else if (box.voltage[c] == 0.4f) ++v04;
            else if (box.voltage[c] == 0.3f) ++v03;
        }
        CHECK(v06 > 0);
        CHECK(v04 > 0);
        CHECK(v03 > 0);
        // nine disjoint plunger voxel groups: count metal cells at 0.6 V in
        // the plunger z-band of layer 2 under each dot center
        for (int r = 0; r < 3; ++r)
            for (int cc = 0; cc < 3; ++cc) {
                double x = (cc - 1) * 120e-9, y = (r - 1) * 120e-9;
                int i = static_cast<int>(std::lround((x - box.origin.x) / box.h));
                int j = static_cast<int>(std::lround((y - box.origin.y) / box.h));
                bool metal_above = false;
                for (int k = 0; k < box.nz; ++k)
                    if (box.metal[box.idx(i, j, k)] &&
                        box.voltage[box.idx(i, j, k)] == 0.6f)
                        metal_above = true;
                CHECK(metal_above);
            }
    }
}

TEST_CASE("uniform gate voltages leave no wells") {
    StackParams sp;
    sp.plunger_v = sp.barrier_qq_v = sp.barrier_qr_v = sp.reservoir_v = 0.5;
    BoxParams bp;
    bp.half_x = bp.half_y = 200e-9;
    SimulationBox box = discretize(build_gate_stack_3x3(sp), bp);
    PotentialGrid g = solve_laplace(box);
    CHECK(g.iterations == 0);  // constant solution from the start
    CHECK(find_wells(g, bp.qw_center_z).empty());
}

TEST_CASE("raising one plunger makes its well the deepest") {
    BoxParams bp;
    SolveOptions so;
    so.tol = 1e-6;
    so.exec = Exec::parallel;
    GateStack stack = build_gate_stack_3x3();
    for (auto& e : stack.electrodes)
        if (e.name == "P13") e.voltage = 0.8;
    SimulationBox box = discretize(stack, bp);
    PotentialGrid g = solve_laplace(box, so);
    auto wells = find_wells(g, bp.qw_center_z);
    REQUIRE(wells.size() >= 2);
    // wells are sorted by phi descending; P13 sits at (+120, -120) nm
    CHECK(wells[0].position.x > 60e-9);
    CHECK(wells[0].position.y < -60e-9);
}

TEST_CASE("solution is stable under 2x grid refinement away from corners") {
    SimulationBox coarse = [] {
        GateStack s = build_gate_stack_3x3();
        BoxParams bp;
        bp.half_x = bp.half_y = 180e-9;
        return discretize(s, bp);
    }();
    SimulationBox fine = [] {
        GateStack s = build_gate_stack_3x3();
        BoxParams bp;
        bp.half_x = bp.half_y = 180e-9;
        bp.h = 2.5e-9;
        return discretize(s, bp);
    }();
    SolveOptions so;
    so.tol = 1e-6;
    so.exec = Exec::parallel;
    PotentialGrid gc = solve_laplace(coarse, so);
    PotentialGrid gf = solve_laplace(fine, so);
    // compare at the QW plane under the center and an off-center dot
    BoxParams bp;
    auto sample = [&](const PotentialGrid& g, double x, double y) {
        int i = (int)std::lround((x - g.origin.x) / g.h);
        int j = (int)std::lround((y - g.origin.y) / g.h);
        int k = (int)std::lround((bp.qw_center_z - g.origin.z) / g.h);
        return g.phi[g.idx(i, j, k)];
    };
    for (double x : {0.0, 120e-9})
        for (double y : {0.0, -120e-9}) {
            double pc = sample(gc, x, y), pf = sample(gf, x, y);
            CHECK(std::abs(pc - pf) < 0.02);  // volts; corners excluded
        }
}
