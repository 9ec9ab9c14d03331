#include "qda/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace qda {

std::string fmt_g9(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

MagnetAssembly parse_assembly(std::istream& in) {
    MagnetAssembly a;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string kw;
        if (!(ss >> kw)) continue;
        if (kw != "prism")
            throw std::invalid_argument("assembly line " + std::to_string(lineno) +
                                        ": expected 'prism'");
        double v[9];
        for (double& x : v)
            if (!(ss >> x))
                throw std::invalid_argument("assembly line " + std::to_string(lineno) +
                                            ": expected 9 numbers");
        PrismMagnet p{{v[0] * units::nm, v[1] * units::nm, v[2] * units::nm},
                      {v[3] * units::nm, v[4] * units::nm, v[5] * units::nm},
                      {v[6] * units::kA_per_m, v[7] * units::kA_per_m, v[8] * units::kA_per_m}};
        p.validate();
        a.add(p);
    }
    return a;
}

MagnetAssembly parse_assembly_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open assembly file: " + path);
    return parse_assembly(in);
}

void write_assembly(std::ostream& out, const MagnetAssembly& assembly) {
    out << "# prism x0 y0 z0 x1 y1 z1 (nm)  mx my mz (kA/m)\n";
    for (const auto& p : assembly.prisms) {
        out << "prism " << fmt_g9(p.corner_min.x / units::nm) << " "
            << fmt_g9(p.corner_min.y / units::nm) << " " << fmt_g9(p.corner_min.z / units::nm)
            << " " << fmt_g9(p.corner_max.x / units::nm) << " "
            << fmt_g9(p.corner_max.y / units::nm) << " " << fmt_g9(p.corner_max.z / units::nm)
            << " " << fmt_g9(p.magnetization.x / units::kA_per_m) << " "
            << fmt_g9(p.magnetization.y / units::kA_per_m) << " "
            << fmt_g9(p.magnetization.z / units::kA_per_m) << "\n";
    }
}

void write_field_map_csv(std::ostream& out, const std::vector<FieldSample>& samples) {
    out << "x_nm,y_nm,z_nm,Bx_mT,By_mT,Bz_mT\n";
    for (const auto& s : samples) {
        out << fmt_g9(s.point.x / units::nm) << "," << fmt_g9(s.point.y / units::nm) << ","
            << fmt_g9(s.point.z / units::nm) << ",";
        if (s.ok)
            out << fmt_g9(s.b.x / units::mT) << "," << fmt_g9(s.b.y / units::mT) << ","
                << fmt_g9(s.b.z / units::mT) << "\n";
        else
            out << "nan,nan,nan\n";
    }
}

void write_report_csv(std::ostream& out, const AddressabilityReport& report) {
    out << "row,col,b_trans_mT_per_nm,B_long_mT,f_rabi_MHz,f_r_shift_MHz\n";
    for (const auto& d : report.dots)
        out << d.row << "," << d.col << "," << fmt_g9(d.b_trans_mt_per_nm) << ","
            << fmt_g9(d.b_long_mt) << "," << fmt_g9(d.f_rabi_mhz) << ","
            << fmt_g9(d.f_r_shift_mhz) << "\n";
}

std::string report_to_json(const AddressabilityReport& report) {
    nlohmann::ordered_json j;
    j["dots"] = nlohmann::ordered_json::array();
    for (const auto& d : report.dots)
        j["dots"].push_back({{"row", d.row},
                             {"col", d.col},
                             {"b_trans_mT_per_nm", d.b_trans_mt_per_nm},
                             {"B_long_mT", d.b_long_mt},
                             {"f_rabi_MHz", d.f_rabi_mhz},
                             {"f_r_shift_MHz", d.f_r_shift_mhz}});
    j["delta_fr_MHz"] = report.delta_fr;
    j["min_pairwise_delta_fr_MHz"] = report.min_pairwise_delta_mhz;
    j["max_f_rabi_MHz"] = report.max_f_rabi_mhz;
    j["margin"] = report.margin;
    j["addressable"] = report.addressable;
    return j.dump(2);
}

std::string routing_to_json(const RoutedCircuit& routed, bool verified) {
    nlohmann::ordered_json j;
    j["swap_count"] = routed.swap_count;
    j["two_qubit_count"] = routed.two_qubit_count;
    j["initial_mapping"] = routed.initial.log_to_phys;
    j["final_mapping"] = routed.final.log_to_phys;
    j["verified"] = verified;
    j["gates"] = nlohmann::ordered_json::array();
    for (const auto& g : routed.circuit.gates) j["gates"].push_back(g.to_text());
    return j.dump(2);
}

void write_potential_slice_csv(std::ostream& out, const PotentialGrid& grid, double plane_z) {
    int k = static_cast<int>(std::lround((plane_z - grid.origin.z) / grid.h));
    k = std::clamp(k, 0, grid.nz - 1);
    out << "x_nm,y_nm,phi_V\n";
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i)
            out << fmt_g9((grid.origin.x + i * grid.h) / units::nm) << ","
                << fmt_g9((grid.origin.y + j * grid.h) / units::nm) << ","
                << fmt_g9(grid.phi[grid.idx(i, j, k)]) << "\n";
}

std::string wells_to_json(const std::vector<Well>& wells) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& w : wells)
        j.push_back({{"x_nm", w.position.x / units::nm},
                     {"y_nm", w.position.y / units::nm},
                     {"phi_V", w.phi}});
    return j.dump(2);
}

}  // namespace qda
