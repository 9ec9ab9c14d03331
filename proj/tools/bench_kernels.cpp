// Benchmark: serial reference lanes versus the OpenMP lanes for the three
// data-parallel kernels. The parallel lanes are bit-identical by
// construction; this target reports the speedups.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "qda/circuits.hpp"
#include "qda/electrostatics.hpp"
#include "qda/geometry.hpp"
#include "qda/magnet.hpp"
#include "qda/statevector.hpp"

using namespace qda;
using units::nm;
using units::um;

namespace {

double now() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        double t0 = now();
        f();
        best = std::min(best, now() - t0);
    }
    return best;
}

void report(const char* name, double serial, double parallel, bool identical) {
    std::printf("%-22s serial %8.3f s   openmp %8.3f s   speedup %5.2fx   identical %s\n", name,
                serial, parallel, serial / parallel, identical ? "yes" : "NO");
}

}  // namespace

int main() {
    std::printf("openmp lanes %s\n", have_openmp ? "enabled" : "disabled (serial build)");

    {
        MagnetAssembly a = build_mm_3x3();
        std::vector<Vec3> pts;
        for (int j = 0; j < 301; ++j)
            for (int i = 0; i < 301; ++i)
                pts.push_back({(-1.5 + 0.01 * i) * um, (-1.5 + 0.01 * j) * um, 0.0});
        std::vector<FieldSample> rs, rp;
        double ts = time_best_of(3, [&] { rs = field_map(a, pts, Exec::serial); });
        double tp = time_best_of(3, [&] { rp = field_map(a, pts, Exec::parallel); });
        bool same = true;
        for (size_t i = 0; i < rs.size(); ++i) same &= rs[i].b == rp[i].b;
        report("field_map 301x301", ts, tp, same);
    }

    {
        Circuit c(14);
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> q(0, 13);
        for (int i = 0; i < 400; ++i) {
            int x = q(rng), y = q(rng);
            if (x == y) y = (y + 1) % 14;
            switch (i % 4) {
                case 0: c << Gate::h(x); break;
                case 1: c << Gate::cnot(x, y); break;
                case 2: c << Gate::cv(x, y, 4); break;
                case 3: c << Gate::cz(x, y); break;
            }
        }
        Statevector ss, sp;
        double ts = time_best_of(3, [&] { ss = simulate(c, Exec::serial); });
        double tp = time_best_of(3, [&] { sp = simulate(c, Exec::parallel); });
        bool same = ss.amps == sp.amps;
        report("statevector 14q/400g", ts, tp, same);
    }

    {
        GateStack stack = build_gate_stack_3x3();
        SimulationBox box = discretize(stack);
        SolveOptions so;
        so.tol = 1e-5;
        PotentialGrid gs, gp;
        so.exec = Exec::serial;
        double ts = time_best_of(1, [&] { gs = solve_laplace(box, so); });
        so.exec = Exec::parallel;
        double tp = time_best_of(1, [&] { gp = solve_laplace(box, so); });
        bool same = gs.phi == gp.phi && gs.iterations == gp.iterations;
        report("laplace stack3x3", ts, tp, same);
    }

    return 0;
}
