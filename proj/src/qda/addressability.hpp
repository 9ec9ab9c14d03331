#pragma once

#include <vector>

#include "qda/geometry.hpp"
#include "qda/magnet.hpp"
#include "qda/parallel.hpp"

namespace qda {

struct AddressabilityParams {
    double gamma_mhz_per_mt = 28.0;  // electron gyromagnetic ratio, 28.0 GHz/T
    double c_drive_mhz_nm_per_mt = 12.0;      // b_trans -> f_Rabi conversion
    double margin = 5.0;                      // crosstalk: min dfr > margin * max fRabi
    double gradient_step = 1e-9;
};

// |transverse part of dB/du| with u along the drive direction, extracted
// from a gradient tensor in T/m; returns mT/nm
double b_trans_from_gradient(const GradientTensor& g, const Vec3& b_ext_dir,
                             const Vec3& drive_dir);

// |transverse part of dB/du| with u along the drive direction, in mT/nm
double b_trans_at(const MagnetAssembly& assembly, const DotLayout& layout, int row, int col,
                  double gradient_step = 1e-9);

// field component along B_ext at the dot, in mT
double b_long_at(const MagnetAssembly& assembly, const DotLayout& layout, int row, int col);

// f_Rabi = c_drive * b_trans (MHz from mT/nm)
double rabi_frequency_mhz(double b_trans_mt_per_nm, double c_drive_mhz_nm_per_mt = 12.0);

// resonance splitting gamma * |dB_long| (MHz from mT)
double delta_fr_mhz(double b_long_i_mt, double b_long_j_mt, double gamma_mhz_per_mt = 28.0);

struct DotMetrics {
    int row = 0, col = 0;
    double b_trans_mt_per_nm = 0.0;
    double b_long_mt = 0.0;
    double f_rabi_mhz = 0.0;
    double f_r_shift_mhz = 0.0;  // relative to the center (reference) dot
};

struct AddressabilityReport {
    std::vector<DotMetrics> dots;                // row-major
    std::vector<std::vector<double>> delta_fr;   // pairwise, MHz
    double min_pairwise_delta_mhz = 0.0;
    double max_f_rabi_mhz = 0.0;
    double margin = 0.0;
    bool addressable = false;
};

// Per-dot metrics plus the single-qubit crosstalk verdict:
// addressable <=> min pairwise delta f_r > margin * max f_Rabi.
AddressabilityReport addressability_report(const MagnetAssembly& assembly,
                                           const DotLayout& layout,
                                           const AddressabilityParams& params = {},
                                           Exec exec = Exec::serial);

}  // namespace qda
