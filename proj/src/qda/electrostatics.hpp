#pragma once

#include <cstdint>
#include <vector>

#include "qda/geometry.hpp"
#include "qda/parallel.hpp"
#include "qda/vec3.hpp"

namespace qda {

// Voxelized electrostatic domain. Cells are either metal at a fixed voltage
// or dielectric with a relative permittivity; the outer box faces carry
// zero-normal-derivative (Neumann) conditions.
struct SimulationBox {
    int nx = 0, ny = 0, nz = 0;
    double h = 0.0;   // grid spacing, m
    Vec3 origin;      // center of cell (0,0,0)
    std::vector<float> eps;       // relative permittivity per cell
    std::vector<uint8_t> metal;   // 1 = Dirichlet cell
    std::vector<float> voltage;   // valid where metal == 1

    size_t cell_count() const {
        return static_cast<size_t>(nx) * static_cast<size_t>(ny) * static_cast<size_t>(nz);
    }
    size_t idx(int i, int j, int k) const {
        return (static_cast<size_t>(k) * static_cast<size_t>(ny) + static_cast<size_t>(j)) *
                   static_cast<size_t>(nx) +
               static_cast<size_t>(i);
    }
    Vec3 cell_center(int i, int j, int k) const {
        return {origin.x + i * h, origin.y + j * h, origin.z + k * h};
    }
    int metal_cell_count() const;
};

struct BoxParams {
    double h = 5e-9;
    // lateral half-extent of the box around the array center
    double half_x = 330e-9, half_y = 330e-9;
    double z_min = -150e-9, z_max = 100e-9;  // z = 0 at the semiconductor surface
    // dielectric bands
    double qw_center_z = -35e-9;  // QW depth is a free design parameter
    double qw_thickness = 10e-9;
    double eps_si = 11.7, eps_sio2 = 3.9, eps_sige = 13.0;
};

// Voxelize a gate stack: cells inside an electrode footprint/band become
// metal at its voltage; everything above the surface is SiO2 (etched regions
// included), below it SiGe except the Si quantum well band.
SimulationBox discretize(const GateStack& stack, const BoxParams& params = {});

struct PotentialGrid {
    int nx = 0, ny = 0, nz = 0;
    double h = 0.0;
    Vec3 origin;
    std::vector<double> phi;        // volts
    double residual = 0.0;          // relative 2-norm at exit
    int iterations = 0;
    bool converged = false;

    size_t idx(int i, int j, int k) const {
        return (static_cast<size_t>(k) * static_cast<size_t>(ny) + static_cast<size_t>(j)) *
                   static_cast<size_t>(nx) +
               static_cast<size_t>(i);
    }
};

struct SolveOptions {
    double tol = 1e-8;      // relative residual target
    int max_iter = 200000;
    double omega = 1.9;     // SOR over-relaxation
    Exec exec = Exec::serial;
};

struct SolverDiverged : std::runtime_error {
    std::vector<double> residual_history;
    SolverDiverged(const std::string& msg, std::vector<double> hist)
        : std::runtime_error(msg), residual_history(std::move(hist)) {}
};

// Red-black SOR for div(eps grad phi) = 0 with Dirichlet metal cells and
// Neumann outer faces. The red-black sweep order makes the parallel lane
// bit-identical to the serial one. Throws SolverDiverged (with the residual
// history) if max_iter is exhausted.
PotentialGrid solve_laplace(const SimulationBox& box, const SolveOptions& options = {});

struct Well {
    int i = 0, j = 0;   // in-plane cell indices
    Vec3 position;      // cell center, m
    double phi = 0.0;   // volts
};

// Strict 8-neighborhood local maxima of phi in the horizontal plane nearest
// plane_z, sorted by phi descending. Electron energy is -e*phi, so these are
// the potential wells.
std::vector<Well> find_wells(const PotentialGrid& grid, double plane_z);

}  // namespace qda
