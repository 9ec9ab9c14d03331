#include "qda/geometry.hpp"

#include <cstdio>
#include <stdexcept>

namespace qda {

DotLayout build_dot_layout(int rows, int cols, double pitch, double qw_plane_z) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("layout needs rows, cols >= 1");
    if (!(pitch > 0.0)) throw std::invalid_argument("layout pitch must be positive");
    DotLayout l;
    l.rows = rows;
    l.cols = cols;
    l.pitch = pitch;
    l.qw_plane_z = qw_plane_z;
    l.dot_positions.reserve(static_cast<size_t>(rows) * static_cast<size_t>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            l.dot_positions.push_back({(c - 0.5 * (cols - 1)) * pitch,
                                       (r - 0.5 * (rows - 1)) * pitch, qw_plane_z});
    return l;
}

MagnetAssembly build_mm_3x3(const Mm3x3Params& p) {
    double z0 = p.qw_plane_z + p.standoff;
    double z1 = z0 + p.thickness;
    PrismMagnet plate{{p.plate_center_x - 0.5 * p.plate_size_x,
                       p.plate_center_y - 0.5 * p.plate_size_y, z0},
                      {p.plate_center_x + 0.5 * p.plate_size_x,
                       p.plate_center_y + 0.5 * p.plate_size_y, z1},
                      {p.magnetization, 0, 0}};
    plate.validate();
    MagnetAssembly a;
    a.add(plate);
    if (p.groove_size_x > 0.0 && p.groove_size_y > 0.0 && p.groove_depth > 0.0) {
        PrismMagnet groove{{p.groove_center_x - 0.5 * p.groove_size_x,
                            p.groove_center_y - 0.5 * p.groove_size_y, z0},
                           {p.groove_center_x + 0.5 * p.groove_size_x,
                            p.groove_center_y + 0.5 * p.groove_size_y, z0 + p.groove_depth},
                           {-p.magnetization, 0, 0}};
        groove.validate();
        bool inside = groove.corner_min.x >= plate.corner_min.x &&
                      groove.corner_max.x <= plate.corner_max.x &&
                      groove.corner_min.y >= plate.corner_min.y &&
                      groove.corner_max.y <= plate.corner_max.y &&
                      groove.corner_max.z <= plate.corner_max.z;
        if (!inside) throw std::invalid_argument("groove must lie within the magnet plate");
        a.add(groove);
    }
    return a;
}

MagnetAssembly build_large_co_magnet(const LargeCoParams& p) {
    PrismMagnet m{{p.corner_offset.x, p.corner_offset.y, p.qw_plane_z + p.corner_offset.z},
                  {p.corner_offset.x + p.size_x, p.corner_offset.y + p.size_y,
                   p.qw_plane_z + p.corner_offset.z + p.size_z},
                  {p.magnetization, 0, 0}};
    m.validate();
    // the magnet must stay clear of the array footprint
    bool overlaps_window = m.corner_min.x < p.window_half && m.corner_max.x > -p.window_half &&
                           m.corner_min.y < p.window_half && m.corner_max.y > -p.window_half;
    if (overlaps_window)
        throw std::invalid_argument("large Co magnet overlaps the dot-array footprint");
    MagnetAssembly a;
    a.add(m);
    return a;
}

MagnetAssembly build_large_co_magnet(const Vec3& corner_offset) {
    LargeCoParams p;
    p.corner_offset = corner_offset;
    return build_large_co_magnet(p);
}

MagnetAssembly build_co_gate_array(int rows, int cols, const CoGateParams& p) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("gate array needs rows, cols >= 1");
    DotLayout l = build_dot_layout(rows, cols, p.pitch, p.qw_plane_z);
    double z0 = p.qw_plane_z + p.standoff;
    double z1 = z0 + p.thickness;
    Vec3 mag{p.magnetization, 0, 0};
    MagnetAssembly a;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            Vec3 d = l.position(r, c);
            a.add({{d.x - 0.5 * p.plunger_size, d.y - 0.5 * p.plunger_size, z0},
                   {d.x + 0.5 * p.plunger_size, d.y + 0.5 * p.plunger_size, z1},
                   mag});
        }
    // barriers between column neighbors (gap along x)
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c + 1 < cols; ++c) {
            Vec3 m = (l.position(r, c) + l.position(r, c + 1)) * 0.5;
            a.add({{m.x - 0.5 * p.barrier_along, m.y - 0.5 * p.barrier_across, z0},
                   {m.x + 0.5 * p.barrier_along, m.y + 0.5 * p.barrier_across, z1},
                   mag});
        }
    // barriers between row neighbors (gap along y)
    for (int r = 0; r + 1 < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            Vec3 m = (l.position(r, c) + l.position(r + 1, c)) * 0.5;
            a.add({{m.x - 0.5 * p.barrier_across, m.y - 0.5 * p.barrier_along, z0},
                   {m.x + 0.5 * p.barrier_across, m.y + 0.5 * p.barrier_along, z1},
                   mag});
        }
    for (const auto& prism : a.prisms) prism.validate();
    return a;
}

int GateStack::plunger_count() const {
    int n = 0;
    for (const auto& e : electrodes) n += e.kind == ElectrodeKind::plunger ? 1 : 0;
    return n;
}

GateStack build_gate_stack_3x3(const StackParams& p) {
    // Every gate's active region lands on the gate oxide; upper layers climb
    // over lower metal only where footprints overlap (the voxelizer assigns
    // contested voxels to the lower layer).
    const double z0 = p.oxide_below;
    const double zt1 = z0 + 15e-9, zt2 = z0 + 25e-9, zt3 = z0 + 40e-9, zt4 = z0 + 60e-9;
    const double dot_half = 35e-9;  // 70 nm dot regions
    GateStack s;
    auto name = [](const char* fmt, int a, int b, int c, int d) {
        char buf[32];
        std::snprintf(buf, sizeof buf, fmt, a, b, c, d);
        return std::string(buf);
    };
    auto dot_x = [&](int c) { return (c - 1) * p.pitch; };
    auto dot_y = [&](int r) { return (r - 1) * p.pitch; };

    // layer 1: in-row barriers (50 nm wide) between column-adjacent dots
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c + 1 < 3; ++c) {
            double gx = 0.5 * (dot_x(c) + dot_x(c + 1));
            s.electrodes.push_back({1, name("B%d%d-%d%d", r + 1, c + 1, r + 1, c + 2),
                                    ElectrodeKind::barrier, gx - 25e-9, dot_y(r) - 60e-9,
                                    gx + 25e-9, dot_y(r) + 60e-9, z0, zt1, p.barrier_qq_v});
        }
    // layer 1: dot-reservoir barriers at both row ends
    for (int r = 0; r < 3; ++r) {
        double gxl = dot_x(0) - dot_half - 25e-9;
        double gxr = dot_x(2) + dot_half + 25e-9;
        s.electrodes.push_back({1, name("Br1-%d%d%.0d%.0d", r + 1, 1, 0, 0),
                                ElectrodeKind::barrier, gxl - 25e-9, dot_y(r) - dot_half,
                                gxl + 25e-9, dot_y(r) + dot_half, z0, zt1, p.barrier_qr_v});
        s.electrodes.push_back({1, name("Br2-%d%d%.0d%.0d", r + 1, 3, 0, 0),
                                ElectrodeKind::barrier, gxr - 25e-9, dot_y(r) - dot_half,
                                gxr + 25e-9, dot_y(r) + dot_half, z0, zt1, p.barrier_qr_v});
    }
    // layer 3: inter-row barriers (60 nm wide) between row-adjacent dots
    for (int r = 0; r + 1 < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            double gy = 0.5 * (dot_y(r) + dot_y(r + 1));
            s.electrodes.push_back({3, name("B%d%d-%d%d", r + 1, c + 1, r + 2, c + 1),
                                    ElectrodeKind::barrier, dot_x(c) - 60e-9, gy - 30e-9,
                                    dot_x(c) + 60e-9, gy + 30e-9, z0, zt3, p.barrier_qq_v});
        }
    // plungers: the center one rides on layer 4 over everything else
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            bool center = r == 1 && c == 1;
            double half = center ? 35e-9 : 45e-9;  // 70 nm vs 90 nm widths
            s.electrodes.push_back({center ? 4 : 2, name("P%d%d%.0d%.0d", r + 1, c + 1, 0, 0),
                                    ElectrodeKind::plunger, dot_x(c) - half, dot_y(r) - half,
                                    dot_x(c) + half, dot_y(r) + half, z0,
                                    center ? zt4 : zt2, p.plunger_v});
        }
    // reservoir pads beyond the outer barriers
    double res_in = dot_x(2) + dot_half + 50e-9;
    s.electrodes.push_back({2, "R1", ElectrodeKind::reservoir, -res_in - 100e-9,
                            dot_y(0) - dot_half, -res_in, dot_y(2) + dot_half, z0, zt2,
                            p.reservoir_v});
    s.electrodes.push_back({2, "R2", ElectrodeKind::reservoir, res_in, dot_y(0) - dot_half,
                            res_in + 100e-9, dot_y(2) + dot_half, z0, zt2, p.reservoir_v});
    // Si is etched (and SiO2-filled) outside the array block and the three
    // channels that connect each dot row to the reservoirs
    s.active_regions.push_back({-205e-9, -205e-9, 205e-9, 205e-9});
    for (int r = 0; r < 3; ++r)
        s.active_regions.push_back(
            {-res_in - 110e-9, dot_y(r) - 45e-9, res_in + 110e-9, dot_y(r) + 45e-9});
    return s;
}

}  // namespace qda
