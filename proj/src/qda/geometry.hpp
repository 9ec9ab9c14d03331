#pragma once

#include <string>
#include <vector>

#include "qda/magnet.hpp"
#include "qda/vec3.hpp"

namespace qda {

// Grid of quantum-dot evaluation points in the quantum-well plane. B_ext and
// the MW drive displacement both point along +x (drive on the barrier gate
// next to the dot, along B_ext).
struct DotLayout {
    int rows = 0, cols = 0;
    double pitch = 120e-9;
    double qw_plane_z = 0.0;
    std::vector<Vec3> dot_positions;  // row-major, grid centered on the origin
    Vec3 b_ext_dir{1, 0, 0};
    Vec3 drive_dir{1, 0, 0};

    int index(int r, int c) const { return r * cols + c; }
    const Vec3& position(int r, int c) const {
        return dot_positions[static_cast<size_t>(index(r, c))];
    }
};

DotLayout build_dot_layout(int rows, int cols, double pitch, double qw_plane_z = 0.0);

// Grooved cobalt micromagnet over the 3x3 array. Thickness, standoff
// and magnetization are fixed design values; the plate extent, in-plane offsets and the
// groove rectangle are not, so they are free parameters whose defaults were
// tuned to land in the target b_trans band and Delta-B_long floor. The
// groove is cut upward into the bottom face by superposing a negated prism.
struct Mm3x3Params {
    double plate_size_x = 3.0e-6;
    double plate_size_y = 4.0e-6;
    double thickness = 250e-9;
    double standoff = 143e-9;       // magnet bottom above the QW plane
    double magnetization = 1.4e6;   // A/m along +x
    double plate_center_x = 0.25e-6;
    double plate_center_y = 0.10e-6;
    double groove_size_x = 0.60e-6;
    double groove_size_y = 1.10e-6;
    double groove_depth = 200e-9;
    double groove_center_x = 0.12e-6;  // relative to the array center
    double groove_center_y = 0.36e-6;
    double qw_plane_z = 0.0;
};

MagnetAssembly build_mm_3x3(const Mm3x3Params& params = {});

// 30 x 30 x 5 um^3 Co magnet placed outside the dot-array window.
// `corner_offset` is the magnet's corner_min relative to the array center
// (z relative to the QW plane). The default centers the magnet vertically on
// the QW plane and puts the window on its y-midline, which keeps the B_long
// slope along x above the 0.03 mT/nm floor across the whole 5x5 um^2 window.
struct LargeCoParams {
    Vec3 corner_offset{3.0e-6, -15.0e-6, -2.5e-6};
    double size_x = 30e-6, size_y = 30e-6, size_z = 5e-6;
    double magnetization = 1.4e6;  // A/m along +x
    double window_half = 2.5e-6;   // 5x5 um^2 array footprint, centered
    double qw_plane_z = 0.0;
};

MagnetAssembly build_large_co_magnet(const LargeCoParams& params = {});
MagnetAssembly build_large_co_magnet(const Vec3& corner_offset);

// Ferromagnetic gate electrodes: one 60x60 nm^2 Co plunger per dot plus
// 60x40 nm^2 Co barriers between neighbors. Thickness and standoff
// are free parameters; defaults tuned for the ~39 MHz mean Rabi target.
struct CoGateParams {
    double pitch = 120e-9;
    double plunger_size = 60e-9;
    double barrier_across = 60e-9;  // perpendicular to the gap
    double barrier_along = 40e-9;   // along the gap
    double thickness = 100e-9;
    double standoff = 30e-9;        // QW plane to gate bottom
    double magnetization = 1.4e6;   // A/m along +x
    double qw_plane_z = 0.0;
};

MagnetAssembly build_co_gate_array(int rows, int cols, const CoGateParams& params = {});

enum class ElectrodeKind { plunger, barrier, reservoir };

struct GateElectrode {
    int layer;  // 1..4, bottom to top
    std::string name;
    ElectrodeKind kind;
    double x0, y0, x1, y1;  // footprint in the gate plane (m)
    double z0, z1;          // vertical band (m), z = 0 at the semiconductor surface
    double voltage;         // V
};

struct ActiveRegion {
    double x0, y0, x1, y1;  // Si left in place below this footprint (m)
};

struct GateStack {
    std::vector<GateElectrode> electrodes;
    // semiconductor is etched away (and SiO2-filled) outside these strips;
    // empty list = no etch anywhere
    std::vector<ActiveRegion> active_regions;
    int plunger_count() const;
};

struct StackParams {
    double pitch = 120e-9;
    double plunger_v = 0.6;
    double barrier_qq_v = 0.4;  // between dots
    double barrier_qr_v = 0.3;  // dot to reservoir
    double reservoir_v = 0.4;   // accumulation pads over the electron baths
    double oxide_below = 10e-9;  // surface to layer-1 gate bottom
};

// Full 3x3 electrode set: layer-1 in-row and
// reservoir barriers (50/15 nm), layer-2 plungers except the center (90/25),
// layer-3 inter-row barriers (60/40), layer-4 center plunger (70/60), plus
// two reservoir pads.
GateStack build_gate_stack_3x3(const StackParams& params = {});

}  // namespace qda
