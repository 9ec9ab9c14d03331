#include "qda/magnet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qda {

namespace {

constexpr double max_magnetization = 2.0e6;  // A/m sanity bound

// stable log(W + r): when W < 0, W + r loses digits, but
// W + r = (r^2 - W^2)/(r - W) = (u^2 + v^2)/(r - W) is exact algebra.
// Exactly on an edge-line ray (u = v = 0, w < 0) each term of the corner sum
// diverges while the signed pair stays finite; flooring the numerator keeps
// both terms finite and lets the pair cancel to ~1e-13 absolute.
double log_w_plus_r(double w, double u, double v, double r) {
    double num = u * u + v * v;
    if (num == 0.0 && w < 0.0) num = std::numeric_limits<double>::min();
    double arg = w >= 0.0 ? w + r : num / (r - w);
    return std::log(arg);
}

double solid_angle_term(double u, double v, double w, double r) {
    double num = u * v;
    double den = w * r;
    if (den == 0.0 && num == 0.0) return 0.0;  // principal value on a face plane
    return std::atan(num / den);               // atan(+-inf) -> +-pi/2 when den == 0
}

// H field of a prism magnetized along +w with |M| = 1 A/m, in the permuted
// frame (u, v, w). Corner offsets: U[i] = u - u_i etc.
Vec3 unit_field_along_w(const double U[2], const double V[2], const double W[2]) {
    double hu = 0.0, hv = 0.0, hw = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                double r = std::sqrt(U[i] * U[i] + V[j] * V[j] + W[k] * W[k]);
                double s = ((i + j + k) & 1) ? -1.0 : 1.0;
                hu += s * log_w_plus_r(V[j], U[i], W[k], r);
                hv += s * log_w_plus_r(U[i], V[j], W[k], r);
                hw -= s * solid_angle_term(U[i], V[j], W[k], r);
            }
    constexpr double inv4pi = 1.0 / (4.0 * 3.14159265358979323846);
    return {hu * inv4pi, hv * inv4pi, hw * inv4pi};
}

double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b) {
    Vec3 ab = b - a;
    double t = (p - a).dot(ab) / ab.dot(ab);
    t = std::clamp(t, 0.0, 1.0);
    return (p - (a + ab * t)).norm();
}

double min_edge_distance(const PrismMagnet& m, const Vec3& p) {
    const Vec3& lo = m.corner_min;
    const Vec3& hi = m.corner_max;
    Vec3 c[8];
    for (int i = 0; i < 8; ++i)
        c[i] = {(i & 1) ? hi.x : lo.x, (i & 2) ? hi.y : lo.y, (i & 4) ? hi.z : lo.z};
    static constexpr int edges[12][2] = {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {0, 2}, {1, 3},
                                         {4, 6}, {5, 7}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
    double d = std::numeric_limits<double>::infinity();
    for (auto& e : edges) d = std::min(d, point_segment_distance(p, c[e[0]], c[e[1]]));
    return d;
}

}  // namespace

void PrismMagnet::validate() const {
    require_finite(corner_min, "prism corner_min");
    require_finite(corner_max, "prism corner_max");
    require_finite(magnetization, "prism magnetization");
    if (!(corner_min.x < corner_max.x && corner_min.y < corner_max.y &&
          corner_min.z < corner_max.z))
        throw std::invalid_argument("prism corners must satisfy corner_min < corner_max");
    if (magnetization.norm() > max_magnetization)
        throw std::invalid_argument("prism magnetization exceeds 2e6 A/m sanity bound");
}

bool PrismMagnet::contains(const Vec3& p) const {
    return p.x > corner_min.x && p.x < corner_max.x && p.y > corner_min.y &&
           p.y < corner_max.y && p.z > corner_min.z && p.z < corner_max.z;
}

double PrismMagnet::volume() const {
    Vec3 s = size();
    return s.x * s.y * s.z;
}

double GradientTensor::max_abs() const {
    double m = 0.0;
    for (auto& row : g)
        for (double v : row) m = std::max(m, std::abs(v));
    return m;
}

double GradientTensor::max_asymmetry() const {
    double m = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) m = std::max(m, std::abs(g[i][j] - g[j][i]));
    return m;
}

Vec3 GradientTensor::apply(const Vec3& u) const {
    return {g[0][0] * u.x + g[0][1] * u.y + g[0][2] * u.z,
            g[1][0] * u.x + g[1][1] * u.y + g[1][2] * u.z,
            g[2][0] * u.x + g[2][1] * u.y + g[2][2] * u.z};
}

Vec3 prism_field(const PrismMagnet& prism, const Vec3& point, double edge_eps) {
    prism.validate();
    require_finite(point, "field point");
    if (prism.magnetization == Vec3{0, 0, 0}) return {0, 0, 0};
    if (min_edge_distance(prism, point) < edge_eps)
        throw SingularPointError("field point within edge_eps of a prism edge or corner");

    const Vec3 d_lo = point - prism.corner_min;
    const Vec3 d_hi = point - prism.corner_max;
    const double X[2] = {d_lo.x, d_hi.x};
    const double Y[2] = {d_lo.y, d_hi.y};
    const double Z[2] = {d_lo.z, d_hi.z};

    // superpose the three magnetization components; each uses the closed form
    // for magnetization along its own axis with coordinates cycled so that
    // axis becomes "w"
    Vec3 h{0, 0, 0};
    const Vec3& mag = prism.magnetization;
    if (mag.z != 0.0) {
        Vec3 f = unit_field_along_w(X, Y, Z);  // (u,v,w) = (x,y,z)
        h += Vec3{f.x, f.y, f.z} * mag.z;
    }
    if (mag.x != 0.0) {
        Vec3 f = unit_field_along_w(Y, Z, X);  // (u,v,w) = (y,z,x)
        h += Vec3{f.z, f.x, f.y} * mag.x;
    }
    if (mag.y != 0.0) {
        Vec3 f = unit_field_along_w(Z, X, Y);  // (u,v,w) = (z,x,y)
        h += Vec3{f.y, f.z, f.x} * mag.y;
    }

    Vec3 b = h * units::mu0;
    if (prism.contains(point)) b += mag * units::mu0;
    return b;
}

Vec3 assembly_field(const MagnetAssembly& assembly, const Vec3& point, double edge_eps) {
    Vec3 b{0, 0, 0};
    for (size_t i = 0; i < assembly.prisms.size(); ++i) {
        try {
            b += prism_field(assembly.prisms[i], point, edge_eps);
        } catch (const SingularPointError& e) {
            throw SingularPointError("prism " + std::to_string(i) + ": " + e.what());
        }
    }
    return b;
}

GradientTensor field_gradient(const MagnetAssembly& assembly, const Vec3& point, double step,
                              double edge_eps) {
    if (!(step > 0.0)) throw std::invalid_argument("gradient step must be positive");
    GradientTensor t;
    for (int j = 0; j < 3; ++j) {
        Vec3 e{j == 0 ? step : 0.0, j == 1 ? step : 0.0, j == 2 ? step : 0.0};
        Vec3 bp = assembly_field(assembly, point + e, edge_eps);
        Vec3 bm = assembly_field(assembly, point - e, edge_eps);
        t.g[0][j] = (bp.x - bm.x) / (2.0 * step);
        t.g[1][j] = (bp.y - bm.y) / (2.0 * step);
        t.g[2][j] = (bp.z - bm.z) / (2.0 * step);
    }
    return t;
}

std::vector<FieldSample> field_map(const MagnetAssembly& assembly, std::span<const Vec3> points,
                                   Exec exec, double edge_eps) {
    std::vector<FieldSample> out(points.size());
    parallel_for(exec, static_cast<std::ptrdiff_t>(points.size()), [&](std::ptrdiff_t i) {
        out[i].point = points[i];
        try {
            out[i].b = assembly_field(assembly, points[i], edge_eps);
        } catch (const std::exception& e) {
            out[i].ok = false;
            out[i].error = e.what();
        }
    });
    return out;
}

}  // namespace qda
