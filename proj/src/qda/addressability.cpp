#include "qda/addressability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qda {

namespace {
constexpr double t_per_m_to_mt_per_nm = 1e-6;
constexpr double t_to_mt = 1e3;
}  // namespace

double b_trans_from_gradient(const GradientTensor& g, const Vec3& b_ext_dir,
                             const Vec3& drive_dir) {
    Vec3 db_du = g.apply(drive_dir);                        // T/m
    Vec3 transverse = db_du - b_ext_dir * db_du.dot(b_ext_dir);
    return transverse.norm() * t_per_m_to_mt_per_nm;
}

double b_trans_at(const MagnetAssembly& assembly, const DotLayout& layout, int row, int col,
                  double gradient_step) {
    GradientTensor g = field_gradient(assembly, layout.position(row, col), gradient_step);
    return b_trans_from_gradient(g, layout.b_ext_dir, layout.drive_dir);
}

double b_long_at(const MagnetAssembly& assembly, const DotLayout& layout, int row, int col) {
    Vec3 b = assembly_field(assembly, layout.position(row, col));
    return b.dot(layout.b_ext_dir) * t_to_mt;
}

double rabi_frequency_mhz(double b_trans_mt_per_nm, double c_drive_mhz_nm_per_mt) {
    if (b_trans_mt_per_nm < 0.0) throw std::invalid_argument("b_trans must be >= 0");
    return c_drive_mhz_nm_per_mt * b_trans_mt_per_nm;
}

double delta_fr_mhz(double b_long_i_mt, double b_long_j_mt, double gamma_mhz_per_mt) {
    return gamma_mhz_per_mt * std::abs(b_long_i_mt - b_long_j_mt);
}

AddressabilityReport addressability_report(const MagnetAssembly& assembly,
                                           const DotLayout& layout,
                                           const AddressabilityParams& params, Exec exec) {
    if (!(params.margin > 1.0)) throw std::invalid_argument("crosstalk margin must exceed 1");
    const int n = layout.rows * layout.cols;
    AddressabilityReport rep;
    rep.margin = params.margin;
    rep.dots.assign(static_cast<size_t>(n), DotMetrics{});

    parallel_for(exec, n, [&](std::ptrdiff_t i) {
        int r = static_cast<int>(i) / layout.cols;
        int c = static_cast<int>(i) % layout.cols;
        DotMetrics& m = rep.dots[static_cast<size_t>(i)];
        m.row = r;
        m.col = c;
        m.b_trans_mt_per_nm = b_trans_at(assembly, layout, r, c, params.gradient_step);
        m.b_long_mt = b_long_at(assembly, layout, r, c);
        m.f_rabi_mhz = rabi_frequency_mhz(m.b_trans_mt_per_nm, params.c_drive_mhz_nm_per_mt);
    });

    // shifts are quoted against the most central dot
    int ref = layout.index(layout.rows / 2, layout.cols / 2);
    double ref_b = rep.dots[static_cast<size_t>(ref)].b_long_mt;
    for (auto& m : rep.dots)
        m.f_r_shift_mhz = params.gamma_mhz_per_mt * (m.b_long_mt - ref_b);

    rep.delta_fr.assign(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), 0.0));
    double min_delta = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            double d = delta_fr_mhz(rep.dots[static_cast<size_t>(i)].b_long_mt,
                                    rep.dots[static_cast<size_t>(j)].b_long_mt,
                                    params.gamma_mhz_per_mt);
            rep.delta_fr[static_cast<size_t>(i)][static_cast<size_t>(j)] = d;
            min_delta = std::min(min_delta, d);
        }
    rep.min_pairwise_delta_mhz = n > 1 ? min_delta : 0.0;
    for (const auto& m : rep.dots) rep.max_f_rabi_mhz = std::max(rep.max_f_rabi_mhz, m.f_rabi_mhz);
    rep.addressable = rep.min_pairwise_delta_mhz > params.margin * rep.max_f_rabi_mhz;
    return rep;
}

}  // namespace qda
