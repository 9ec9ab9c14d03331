#include "qda/electrostatics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qda {

int SimulationBox::metal_cell_count() const {
    int n = 0;
    for (uint8_t m : metal) n += m;
    return n;
}

SimulationBox discretize(const GateStack& stack, const BoxParams& p) {
    if (!(p.h > 0.0)) throw std::invalid_argument("grid spacing must be positive");
    double thinnest = std::numeric_limits<double>::infinity();
    for (const auto& e : stack.electrodes) thinnest = std::min(thinnest, e.z1 - e.z0);
    if (!stack.electrodes.empty() && p.h > thinnest / 3.0 * (1.0 + 1e-9))
        throw std::invalid_argument("grid spacing too coarse to resolve the thinnest gate layer");

    SimulationBox box;
    box.h = p.h;
    box.nx = static_cast<int>(std::floor(2.0 * p.half_x / p.h)) + 1;
    box.ny = static_cast<int>(std::floor(2.0 * p.half_y / p.h)) + 1;
    box.nz = static_cast<int>(std::floor((p.z_max - p.z_min) / p.h)) + 1;
    box.origin = {-0.5 * (box.nx - 1) * p.h, -0.5 * (box.ny - 1) * p.h, p.z_min};
    box.eps.assign(box.cell_count(), static_cast<float>(p.eps_sio2));
    box.metal.assign(box.cell_count(), 0);
    box.voltage.assign(box.cell_count(), 0.0f);

    const double qw_lo = p.qw_center_z - 0.5 * p.qw_thickness;
    const double qw_hi = p.qw_center_z + 0.5 * p.qw_thickness;
    auto etched = [&](double x, double y) {
        if (stack.active_regions.empty()) return false;
        for (const auto& r : stack.active_regions)
            if (x >= r.x0 && x <= r.x1 && y >= r.y0 && y <= r.y1) return false;
        return true;
    };
    for (int k = 0; k < box.nz; ++k) {
        double z = box.origin.z + k * p.h;
        float e;
        if (z >= 0.0) e = static_cast<float>(p.eps_sio2);        // oxide and gate plane
        else if (z >= qw_lo && z <= qw_hi) e = static_cast<float>(p.eps_si);
        else e = static_cast<float>(p.eps_sige);
        for (int j = 0; j < box.ny; ++j) {
            double y = box.origin.y + j * p.h;
            for (int i = 0; i < box.nx; ++i) {
                double x = box.origin.x + i * p.h;
                // etched semiconductor is SiO2-filled below the surface
                bool cut = z < 0.0 && etched(x, y);
                box.eps[box.idx(i, j, k)] = cut ? static_cast<float>(p.eps_sio2) : e;
            }
        }
    }

    // lower layers claim contested voxels first; upper layers ride over them
    std::vector<const GateElectrode*> order;
    for (const auto& el : stack.electrodes) order.push_back(&el);
    std::stable_sort(order.begin(), order.end(),
                     [](const GateElectrode* a, const GateElectrode* b) { return a->layer < b->layer; });
    for (const GateElectrode* elp : order) {
        const auto& el = *elp;
        for (int k = 0; k < box.nz; ++k) {
            double z = box.origin.z + k * p.h;
            if (z < el.z0 || z > el.z1) continue;
            for (int j = 0; j < box.ny; ++j) {
                double y = box.origin.y + j * p.h;
                if (y < el.y0 || y > el.y1) continue;
                for (int i = 0; i < box.nx; ++i) {
                    double x = box.origin.x + i * p.h;
                    if (x < el.x0 || x > el.x1) continue;
                    size_t c = box.idx(i, j, k);
                    if (box.metal[c]) continue;
                    box.metal[c] = 1;
                    box.voltage[c] = static_cast<float>(el.voltage);
                }
            }
        }
    }
    return box;
}

namespace {

// harmonic-mean face conductance
inline double face_w(float ea, float eb) {
    return 2.0 * static_cast<double>(ea) * static_cast<double>(eb) /
           (static_cast<double>(ea) + static_cast<double>(eb));
}

struct Stencil {
    const SimulationBox& box;
    // conductances toward +x, +y, +z (index = lower cell)
    std::vector<double> wx, wy, wz;

    explicit Stencil(const SimulationBox& b) : box(b) {
        size_t n = b.cell_count();
        wx.assign(n, 0.0);
        wy.assign(n, 0.0);
        wz.assign(n, 0.0);
        for (int k = 0; k < b.nz; ++k)
            for (int j = 0; j < b.ny; ++j)
                for (int i = 0; i < b.nx; ++i) {
                    size_t c = b.idx(i, j, k);
                    if (i + 1 < b.nx) wx[c] = face_w(b.eps[c], b.eps[b.idx(i + 1, j, k)]);
                    if (j + 1 < b.ny) wy[c] = face_w(b.eps[c], b.eps[b.idx(i, j + 1, k)]);
                    if (k + 1 < b.nz) wz[c] = face_w(b.eps[c], b.eps[b.idx(i, j, k + 1)]);
                }
    }
};

}  // namespace

PotentialGrid solve_laplace(const SimulationBox& box, const SolveOptions& opt) {
    if (!(opt.tol > 0.0)) throw std::invalid_argument("solver tolerance must be positive");
    if (box.metal_cell_count() == 0)
        throw std::invalid_argument("solver needs at least one metal cell");

    const int nx = box.nx, ny = box.ny, nz = box.nz;
    Stencil st(box);

    PotentialGrid grid;
    grid.nx = nx;
    grid.ny = ny;
    grid.nz = nz;
    grid.h = box.h;
    grid.origin = box.origin;
    grid.phi.assign(box.cell_count(), 0.0);

    double vmean = 0.0;
    {
        long cnt = 0;
        for (size_t c = 0; c < box.cell_count(); ++c)
            if (box.metal[c]) { vmean += box.voltage[c]; ++cnt; }
        vmean /= static_cast<double>(cnt);
    }
    for (size_t c = 0; c < box.cell_count(); ++c)
        grid.phi[c] = box.metal[c] ? box.voltage[c] : vmean;

    const long sx = 1, sy = nx, sz = static_cast<long>(nx) * ny;
    auto neighbor_terms = [&](size_t c, int i, int j, int k, double& wsum, double& flux) {
        // pulls in the 7-point stencil contributions that exist; Neumann faces
        // simply contribute nothing
        if (i > 0)      { double w = st.wx[c - sx]; wsum += w; flux += w * grid.phi[c - sx]; }
        if (i + 1 < nx) { double w = st.wx[c];      wsum += w; flux += w * grid.phi[c + sx]; }
        if (j > 0)      { double w = st.wy[c - sy]; wsum += w; flux += w * grid.phi[c - sy]; }
        if (j + 1 < ny) { double w = st.wy[c];      wsum += w; flux += w * grid.phi[c + sy]; }
        if (k > 0)      { double w = st.wz[c - sz]; wsum += w; flux += w * grid.phi[c - sz]; }
        if (k + 1 < nz) { double w = st.wz[c];      wsum += w; flux += w * grid.phi[c + sz]; }
    };

    // norm of the Dirichlet load, for the relative residual
    double bnorm2 = 0.0;
    for (int k = 0; k < nz; ++k)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                size_t c = box.idx(i, j, k);
                if (box.metal[c]) continue;
                double b = 0.0;
                auto add = [&](size_t nb, double w) { if (box.metal[nb]) b += w * box.voltage[nb]; };
                if (i > 0) add(c - sx, st.wx[c - sx]);
                if (i + 1 < nx) add(c + sx, st.wx[c]);
                if (j > 0) add(c - sy, st.wy[c - sy]);
                if (j + 1 < ny) add(c + sy, st.wy[c]);
                if (k > 0) add(c - sz, st.wz[c - sz]);
                if (k + 1 < nz) add(c + sz, st.wz[c]);
                bnorm2 += b * b;
            }
    const double bnorm = std::max(std::sqrt(bnorm2), 1e-300);

    double omega = opt.omega;
    if (omega <= 0.0) {  // asymptotically optimal SOR factor for the box size
        int nmax = std::max({nx, ny, nz});
        omega = std::min(2.0 / (1.0 + std::sin(3.14159265358979323846 / nmax)), 1.98);
    }

    const long planes = static_cast<long>(nz) * ny;
    auto residual_norm = [&]() {
        double r2 = deterministic_sum(opt.exec, planes, [&](std::ptrdiff_t p) {
            int k = static_cast<int>(p / ny), j = static_cast<int>(p % ny);
            double acc = 0.0;
            for (int i = 0; i < nx; ++i) {
                size_t c = box.idx(i, j, k);
                if (box.metal[c]) continue;
                double wsum = 0.0, flux = 0.0;
                neighbor_terms(c, i, j, k, wsum, flux);
                double r = flux - wsum * grid.phi[c];
                acc += r * r;
            }
            return acc;
        });
        return std::sqrt(r2) / bnorm;
    };

    std::vector<double> history;
    double rel = residual_norm();
    history.push_back(rel);
    if (rel <= opt.tol) {
        grid.residual = rel;
        grid.iterations = 0;
        grid.converged = true;
        return grid;
    }

    const int check_every = 10;
    for (int it = 1; it <= opt.max_iter; ++it) {
        for (int color = 0; color < 2; ++color) {
            parallel_for(opt.exec, planes, [&](std::ptrdiff_t p) {
                int k = static_cast<int>(p / ny), j = static_cast<int>(p % ny);
                int start = (color ^ (j + k)) & 1;
                for (int i = start; i < nx; i += 2) {
                    size_t c = box.idx(i, j, k);
                    if (box.metal[c]) continue;
                    double wsum = 0.0, flux = 0.0;
                    neighbor_terms(c, i, j, k, wsum, flux);
                    if (wsum > 0.0) grid.phi[c] += omega * (flux / wsum - grid.phi[c]);
                }
            });
        }
        if (it % check_every == 0 || it == opt.max_iter) {
            rel = residual_norm();
            history.push_back(rel);
            if (rel <= opt.tol) {
                grid.residual = rel;
                grid.iterations = it;
                grid.converged = true;
                return grid;
            }
        }
    }
    throw SolverDiverged("laplace relaxation did not reach tol within max_iter", history);
}

std::vector<Well> find_wells(const PotentialGrid& grid, double plane_z) {
    if (plane_z < grid.origin.z || plane_z > grid.origin.z + (grid.nz - 1) * grid.h)
        throw std::invalid_argument("plane_z outside the solved box");
    int k = static_cast<int>(std::lround((plane_z - grid.origin.z) / grid.h));
    k = std::clamp(k, 0, grid.nz - 1);

    std::vector<Well> wells;
    for (int j = 1; j + 1 < grid.ny; ++j)
        for (int i = 1; i + 1 < grid.nx; ++i) {
            double v = grid.phi[grid.idx(i, j, k)];
            bool strict_max = true;
            for (int dj = -1; dj <= 1 && strict_max; ++dj)
                for (int di = -1; di <= 1; ++di) {
                    if (di == 0 && dj == 0) continue;
                    if (grid.phi[grid.idx(i + di, j + dj, k)] >= v) {
                        strict_max = false;
                        break;
                    }
                }
            if (strict_max)
                wells.push_back({i, j,
                                 {grid.origin.x + i * grid.h, grid.origin.y + j * grid.h,
                                  grid.origin.z + k * grid.h},
                                 v});
        }
    std::sort(wells.begin(), wells.end(), [](const Well& a, const Well& b) {
        if (a.phi != b.phi) return a.phi > b.phi;
        return std::make_pair(a.j, a.i) < std::make_pair(b.j, b.i);
    });
    return wells;
}

}  // namespace qda
