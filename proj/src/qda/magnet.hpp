#pragma once

#include <span>
#include <string>
#include <vector>

#include "qda/parallel.hpp"
#include "qda/vec3.hpp"

namespace qda {

// Uniformly magnetized axis-aligned rectangular prism. The stray field has an
// exact closed form (surface-charge model: sums of arctan and log terms over
// the eight corners), so assemblies of prisms need no meshing.
struct PrismMagnet {
    Vec3 corner_min;     // m
    Vec3 corner_max;     // m
    Vec3 magnetization;  // A/m

    void validate() const;
    bool contains(const Vec3& p) const;  // strict interior
    Vec3 center() const { return (corner_min + corner_max) * 0.5; }
    Vec3 size() const { return corner_max - corner_min; }
    double volume() const;
};

// Superposition of prisms. Grooves and holes are cut by adding an overlapping
// prism carrying the negated magnetization of its host.
struct MagnetAssembly {
    std::vector<PrismMagnet> prisms;

    void add(const PrismMagnet& p) { prisms.push_back(p); }
    bool empty() const { return prisms.empty(); }
};

// dB_i/dr_j in T/m
struct GradientTensor {
    double g[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};

    double trace() const { return g[0][0] + g[1][1] + g[2][2]; }
    double max_abs() const;
    double max_asymmetry() const;  // max |g_ij - g_ji|
    // directional derivative of B along unit vector u
    Vec3 apply(const Vec3& u) const;
};

struct SingularPointError : std::runtime_error {
    explicit SingularPointError(const std::string& msg) : std::runtime_error(msg) {}
};

// B in tesla at `point`. Exact up to rounding; points closer than `edge_eps`
// to a prism edge or corner (the singular loci of the closed form) are
// rejected with SingularPointError. Inside a prism the returned quantity is
// B = mu0 (H + M).
Vec3 prism_field(const PrismMagnet& prism, const Vec3& point, double edge_eps = 1e-12);

Vec3 assembly_field(const MagnetAssembly& assembly, const Vec3& point, double edge_eps = 1e-12);

// central differences, default 1 nm step
GradientTensor field_gradient(const MagnetAssembly& assembly, const Vec3& point,
                              double step = 1e-9, double edge_eps = 1e-12);

struct FieldSample {
    Vec3 point;
    Vec3 b;
    bool ok = true;
    std::string error;  // set when ok == false
};

// Pointwise assembly_field over `points`, order-preserving. Per-point failures
// are recorded in the sample instead of aborting the map.
std::vector<FieldSample> field_map(const MagnetAssembly& assembly, std::span<const Vec3> points,
                                   Exec exec = Exec::serial, double edge_eps = 1e-12);

}  // namespace qda
