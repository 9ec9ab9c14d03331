#pragma once

#include <cstddef>
#include <vector>

#ifdef QDA_HAVE_OPENMP
#include <omp.h>
#endif

namespace qda {

// Every data-parallel kernel in this project has two lanes selected by Exec:
// a plain serial loop (the reference) and an OpenMP loop. The OpenMP lanes
// only ever write disjoint elements or reduce through deterministic_sum, so
// both lanes produce bit-identical results; tests assert that.
enum class Exec { serial, parallel };

#ifdef QDA_HAVE_OPENMP
inline constexpr bool have_openmp = true;
#else
inline constexpr bool have_openmp = false;
#endif

// index-space map with disjoint writes
template <typename F>
void parallel_for(Exec exec, std::ptrdiff_t n, F&& body) {
    if (exec == Exec::parallel) {
#ifdef QDA_HAVE_OPENMP
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
        return;
#endif
    }
    for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
}

// Sum f(i) for i in [0, n). Both lanes accumulate per fixed-size chunk and
// combine the partials in chunk order, so serial and parallel results are
// bit-identical and independent of the thread count or schedule.
template <typename F>
double deterministic_sum(Exec exec, std::ptrdiff_t n, F&& f) {
    constexpr std::ptrdiff_t chunk = 4096;
    std::ptrdiff_t nchunks = (n + chunk - 1) / chunk;
    if (nchunks < 1) return 0.0;
    std::vector<double> partial(static_cast<size_t>(nchunks), 0.0);
    parallel_for(exec, nchunks, [&](std::ptrdiff_t c) {
        double s = 0.0;
        std::ptrdiff_t lo = c * chunk, hi = lo + chunk < n ? lo + chunk : n;
        for (std::ptrdiff_t i = lo; i < hi; ++i) s += f(i);
        partial[static_cast<size_t>(c)] = s;
    });
    double s = 0.0;
    for (double p : partial) s += p;
    return s;
}

}  // namespace qda
