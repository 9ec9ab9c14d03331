// Command-line front end: field maps, addressability reports, circuit
// routing, Grover verification, and the electrostatic potential solver.
//
// Exit codes: 0 success, 2 configuration error, 3 numeric non-convergence,
// 4 target miss in --check mode.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "qda/addressability.hpp"
#include "qda/circuits.hpp"
#include "qda/coupling.hpp"
#include "qda/electrostatics.hpp"
#include "qda/geometry.hpp"
#include "qda/io.hpp"
#include "qda/magnet.hpp"
#include "qda/router.hpp"
#include "qda/statevector.hpp"

using namespace qda;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config = 2;
constexpr int exit_numeric = 3;
constexpr int exit_check = 4;

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// strict key=value overrides: unknown keys are configuration errors
class Overrides {
  public:
    explicit Overrides(const std::vector<std::string>& kvs) {
        for (const auto& kv : kvs) {
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("override must be key=value: " + kv);
            values_[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
        }
    }
    void apply(const std::string& key, double& target, double scale = 1.0) {
        auto it = values_.find(key);
        if (it == values_.end()) return;
        target = it->second * scale;
        used_.insert(key);
    }
    void finish() const {
        for (const auto& [k, v] : values_)
            if (!used_.count(k)) throw std::invalid_argument("unknown override key: " + k);
    }

  private:
    std::map<std::string, double> values_;
    std::set<std::string> used_;
};


// key=value lines, '#' comments; flag-level --set entries override these
std::vector<std::string> read_config_file(const std::string& path) {
    std::vector<std::string> out;
    if (path.empty()) return out;
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string tok;
        if (!(probe >> tok)) continue;
        out.push_back(tok);
        std::string extra;
        if (probe >> extra) throw std::invalid_argument("bad config line: " + line);
    }
    return out;
}

std::vector<std::string> merge_config(const std::string& file,
                                      const std::vector<std::string>& sets) {
    std::vector<std::string> all = read_config_file(file);
    all.insert(all.end(), sets.begin(), sets.end());
    return all;
}

struct Scene {
    MagnetAssembly assembly;
    DotLayout layout;
};

Scene build_scene(const std::string& preset, const std::string& assembly_file,
                  const std::vector<std::string>& sets, int rows, int cols, double pitch_nm) {
    Overrides ov(sets);
    Scene s;
    double pitch = pitch_nm * units::nm;
    if (!assembly_file.empty()) {
        s.assembly = parse_assembly_file(assembly_file);
        s.layout = build_dot_layout(rows > 0 ? rows : 3, cols > 0 ? cols : 3, pitch, 0.0);
    } else if (preset == "mm3x3") {
        Mm3x3Params p;
        ov.apply("plate_size_x_nm", p.plate_size_x, units::nm);
        ov.apply("plate_size_y_nm", p.plate_size_y, units::nm);
        ov.apply("thickness_nm", p.thickness, units::nm);
        ov.apply("standoff_nm", p.standoff, units::nm);
        ov.apply("magnetization_kA_m", p.magnetization, units::kA_per_m);
        ov.apply("plate_center_x_nm", p.plate_center_x, units::nm);
        ov.apply("plate_center_y_nm", p.plate_center_y, units::nm);
        ov.apply("groove_size_x_nm", p.groove_size_x, units::nm);
        ov.apply("groove_size_y_nm", p.groove_size_y, units::nm);
        ov.apply("groove_depth_nm", p.groove_depth, units::nm);
        ov.apply("groove_center_x_nm", p.groove_center_x, units::nm);
        ov.apply("groove_center_y_nm", p.groove_center_y, units::nm);
        s.assembly = build_mm_3x3(p);
        s.layout = build_dot_layout(rows > 0 ? rows : 3, cols > 0 ? cols : 3, pitch, 0.0);
    } else if (preset == "large-co") {
        LargeCoParams p;
        ov.apply("offset_x_um", p.corner_offset.x, units::um);
        ov.apply("offset_y_um", p.corner_offset.y, units::um);
        ov.apply("offset_z_um", p.corner_offset.z, units::um);
        ov.apply("size_x_um", p.size_x, units::um);
        ov.apply("size_y_um", p.size_y, units::um);
        ov.apply("size_z_um", p.size_z, units::um);
        ov.apply("magnetization_kA_m", p.magnetization, units::kA_per_m);
        ov.apply("window_half_um", p.window_half, units::um);
        s.assembly = build_large_co_magnet(p);
        s.layout = build_dot_layout(rows > 0 ? rows : 40, cols > 0 ? cols : 40, pitch, 0.0);
    } else if (preset == "co-gates") {
        CoGateParams p;
        int r = rows > 0 ? rows : 5, c = cols > 0 ? cols : 5;
        ov.apply("pitch_nm", p.pitch, units::nm);
        ov.apply("plunger_nm", p.plunger_size, units::nm);
        ov.apply("barrier_across_nm", p.barrier_across, units::nm);
        ov.apply("barrier_along_nm", p.barrier_along, units::nm);
        ov.apply("thickness_nm", p.thickness, units::nm);
        ov.apply("standoff_nm", p.standoff, units::nm);
        ov.apply("magnetization_kA_m", p.magnetization, units::kA_per_m);
        s.assembly = build_co_gate_array(r, c, p);
        s.layout = build_dot_layout(r, c, p.pitch, 0.0);
    } else if (preset == "none") {
        s.layout = build_dot_layout(rows > 0 ? rows : 3, cols > 0 ? cols : 3, pitch, 0.0);
    } else {
        throw std::invalid_argument("unknown preset: " + preset);
    }
    ov.finish();
    return s;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    return out;
}

int cmd_field_map(const std::string& preset, const std::string& assembly_file,
                  const std::string& config_file, const std::vector<std::string>& sets,
                  const std::string& out_path,
                  double plane_z_nm, int samples, double extent_nm, bool parallel, bool check) {
    Scene s = build_scene(preset, assembly_file, merge_config(config_file, sets), 0, 0, 120.0);
    double extent = extent_nm > 0 ? extent_nm * units::nm
                                  : std::max({0.5 * (s.layout.cols + 1) * s.layout.pitch,
                                              0.5 * (s.layout.rows + 1) * s.layout.pitch});
    std::vector<Vec3> pts;
    pts.reserve(static_cast<size_t>(samples) * samples);
    for (int j = 0; j < samples; ++j)
        for (int i = 0; i < samples; ++i) {
            double fx = samples > 1 ? static_cast<double>(i) / (samples - 1) : 0.5;
            double fy = samples > 1 ? static_cast<double>(j) / (samples - 1) : 0.5;
            pts.push_back({-extent + 2 * extent * fx, -extent + 2 * extent * fy,
                           plane_z_nm * units::nm});
        }
    auto map = field_map(s.assembly, pts, parallel ? Exec::parallel : Exec::serial);
    if (!out_path.empty()) {
        auto out = open_out(out_path);
        write_field_map_csv(out, map);
    } else {
        write_field_map_csv(std::cout, map);
    }

    // nearest-neighbor B_long slope summary over the layout
    double min_best_axis = std::numeric_limits<double>::infinity();
    if (!s.assembly.empty()) {
        std::vector<double> bl(static_cast<size_t>(s.layout.rows) * s.layout.cols);
        for (int r = 0; r < s.layout.rows; ++r)
            for (int c = 0; c < s.layout.cols; ++c)
                bl[static_cast<size_t>(s.layout.index(r, c))] = b_long_at(s.assembly, s.layout, r, c);
        for (int r = 0; r < s.layout.rows; ++r)
            for (int c = 0; c < s.layout.cols; ++c) {
                double best = 0.0;
                auto consider = [&](int rr, int cc) {
                    if (rr < 0 || cc < 0 || rr >= s.layout.rows || cc >= s.layout.cols) return;
                    best = std::max(best,
                                    std::abs(bl[static_cast<size_t>(s.layout.index(rr, cc))] -
                                             bl[static_cast<size_t>(s.layout.index(r, c))]));
                };
                consider(r, c - 1);
                consider(r, c + 1);
                consider(r - 1, c);
                consider(r + 1, c);
                min_best_axis = std::min(min_best_axis, best);
            }
        double slope = min_best_axis / (s.layout.pitch / units::nm);  // mT/nm
        std::cerr << "min nearest-neighbor B_long step (best axis per dot): "
                  << fmt_g9(min_best_axis) << " mT over one pitch (slope " << fmt_g9(slope)
                  << " mT/nm)\n";
        if (check && preset == "large-co" && slope <= 0.03)
            throw CheckFailure("large-co slope target missed: " + fmt_g9(slope) + " mT/nm");
    }
    return exit_ok;
}

int cmd_report(const std::string& preset, const std::string& assembly_file,
               const std::string& config_file, const std::vector<std::string>& sets,
               int rows, int cols, double pitch_nm,
               double margin, double gamma, double c_drive, const std::string& json_path,
               const std::string& csv_path, bool parallel, bool check) {
    Scene s = build_scene(preset, assembly_file, merge_config(config_file, sets), rows, cols, pitch_nm);
    AddressabilityParams p;
    p.margin = margin;
    p.gamma_mhz_per_mt = gamma;
    p.c_drive_mhz_nm_per_mt = c_drive;
    AddressabilityReport rep =
        addressability_report(s.assembly, s.layout, p, parallel ? Exec::parallel : Exec::serial);
    if (!json_path.empty()) open_out(json_path) << report_to_json(rep) << "\n";
    if (!csv_path.empty()) {
        auto out = open_out(csv_path);
        write_report_csv(out, rep);
    }
    if (json_path.empty() && csv_path.empty()) std::cout << report_to_json(rep) << "\n";

    double mean_f = 0.0;
    for (const auto& d : rep.dots) mean_f += d.f_rabi_mhz;
    mean_f /= static_cast<double>(rep.dots.size());
    std::cerr << "addressable: " << (rep.addressable ? "true" : "false")
              << "  min dfr: " << fmt_g9(rep.min_pairwise_delta_mhz)
              << " MHz  max fRabi: " << fmt_g9(rep.max_f_rabi_mhz)
              << " MHz  mean fRabi: " << fmt_g9(mean_f) << " MHz\n";
    if (check) {
        if (preset == "mm3x3" && !rep.addressable)
            throw CheckFailure("mm3x3 must be addressable at the default margin");
        if (preset == "co-gates" && (mean_f < 20.0 || mean_f > 60.0))
            throw CheckFailure("co-gates mean fRabi out of [20, 60] MHz: " + fmt_g9(mean_f));
    }
    return exit_ok;
}

Circuit named_circuit(const std::string& name) {
    if (name == "toffoli4") return toffoli4();
    if (name == "grover4") return grover4(13);
    return parse_circuit_file(name);
}

CouplingGraph named_graph(const std::string& name) {
    if (name == "fig3b") return grid_graph_fig3b();
    if (name == "fig3c") return chain_graph_fig3c();
    return parse_coupling_graph_file(name);
}

Mapping default_mapping_for(const std::string& graph_name, const CouplingGraph& g, int nq) {
    if (graph_name == "fig3b" && nq == 4) return default_mapping_fig3b();
    if (graph_name == "fig3c" && nq == 4) return default_mapping_fig3c();
    std::vector<int> data = g.data_nodes();
    if (static_cast<int>(data.size()) < nq)
        throw std::invalid_argument("graph has fewer data nodes than circuit qubits");
    return Mapping(std::vector<int>(data.begin(), data.begin() + nq));
}

int cmd_route(const std::string& circuit_name, const std::string& graph_name,
              const std::string& mapping_csv, int lookahead, const std::string& json_path,
              bool check) {
    Circuit c = named_circuit(circuit_name);
    CouplingGraph g = named_graph(graph_name);
    Mapping m;
    if (!mapping_csv.empty()) {
        std::vector<int> v;
        std::stringstream ss(mapping_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) v.push_back(std::stoi(tok));
        m = Mapping(v);
    } else {
        m = default_mapping_for(graph_name, g, c.num_qubits);
    }
    RouteOptions opt;
    opt.lookahead_depth = lookahead;
    RoutedCircuit r = route(c, g, m, opt);
    bool verified = verify_routing(c, r, g);
    std::string json = routing_to_json(r, verified);
    if (!json_path.empty()) open_out(json_path) << json << "\n";
    else std::cout << json << "\n";
    std::cerr << "swap_count: " << r.swap_count << "  two_qubit_count: " << r.two_qubit_count
              << "  verified: " << (verified ? "true" : "false") << "\n";
    if (check) {
        if (!verified) throw CheckFailure("routed circuit failed unitary verification");
        if (circuit_name == "toffoli4" && graph_name == "fig3b" &&
            (r.swap_count != 2 || r.two_qubit_count != 15))
            throw CheckFailure("fig3b targets missed (want 2 swaps / 15 two-qubit gates)");
        if (circuit_name == "toffoli4" && graph_name == "fig3c" &&
            (r.swap_count != 5 || r.two_qubit_count != 18))
            throw CheckFailure("fig3c targets missed (want 5 swaps / 18 two-qubit gates)");
    }
    return exit_ok;
}

int cmd_grover(int marked, bool routed, const std::string& graph_name,
               const std::string& out_path, bool parallel, bool check) {
    Circuit c = grover4(marked);
    Exec exec = parallel ? Exec::parallel : Exec::serial;
    std::vector<double> probs(16, 0.0);
    if (!routed) {
        Statevector s = simulate(c, exec);
        for (int b = 0; b < 16; ++b) probs[static_cast<size_t>(b)] = s.probability(b);
    } else {
        CouplingGraph g = named_graph(graph_name);
        Mapping m = default_mapping_for(graph_name, g, 4);
        RoutedCircuit r = route(c, g, m);
        if (!verify_routing(c, r, g)) throw CheckFailure("routing verification failed");
        // compact the routed circuit onto its touched nodes and read the
        // logical probabilities through the final mapping
        std::set<int> used(r.initial.log_to_phys.begin(), r.initial.log_to_phys.end());
        for (const Gate& gate : r.circuit.gates) {
            used.insert(gate.q0);
            if (gate.two_qubit()) used.insert(gate.q1);
        }
        std::vector<int> compact(static_cast<size_t>(g.num_nodes()), -1);
        int k = 0;
        for (int n : used) compact[static_cast<size_t>(n)] = k++;
        Circuit cc(k);
        for (const Gate& gate : r.circuit.gates) cc.append(gate.remapped(compact));
        Statevector s = simulate(cc, exec);
        for (size_t idx = 0; idx < s.dim(); ++idx) {
            int logical = 0;
            bool stray = false;
            for (int p = 0; p < g.num_nodes(); ++p) {
                if (compact[static_cast<size_t>(p)] < 0) continue;
                if (!((idx >> compact[static_cast<size_t>(p)]) & 1)) continue;
                int q = -1;
                for (int lq = 0; lq < 4; ++lq)
                    if (r.final.phys_of(lq) == p) q = lq;
                if (q < 0) stray = true;
                else logical |= 1 << q;
            }
            if (!stray) probs[static_cast<size_t>(logical)] += s.probability(idx);
        }
    }
    std::ostringstream csv;
    csv << "basis_index,probability\n";
    for (int b = 0; b < 16; ++b) csv << b << "," << fmt_g9(probs[static_cast<size_t>(b)]) << "\n";
    if (!out_path.empty()) open_out(out_path) << csv.str();
    else std::cout << csv.str();
    std::cerr << "P(" << marked << ") = " << fmt_g9(probs[static_cast<size_t>(marked)]) << "\n";
    if (check &&
        std::abs(probs[static_cast<size_t>(marked)] - grover4_success_probability) > 1e-9)
        throw CheckFailure("marked-state probability off the 121/256 target");
    return exit_ok;
}

int cmd_potential(const std::string& config_file, const std::vector<std::string>& sets,
                  double h_nm, double tol,
                  double plane_z_nm, bool plane_z_set, const std::string& slice_path,
                  const std::string& wells_path, bool parallel, bool check) {
    Overrides ov(merge_config(config_file, sets));
    StackParams sp;
    ov.apply("plunger_v", sp.plunger_v);
    ov.apply("barrier_qq_v", sp.barrier_qq_v);
    ov.apply("barrier_qr_v", sp.barrier_qr_v);
    ov.apply("reservoir_v", sp.reservoir_v);
    ov.apply("oxide_nm", sp.oxide_below, units::nm);
    BoxParams bp;
    bp.h = h_nm * units::nm;
    ov.apply("qw_depth_nm", bp.qw_center_z, -units::nm);
    ov.finish();
    GateStack stack = build_gate_stack_3x3(sp);
    SimulationBox box = discretize(stack, bp);
    SolveOptions so;
    so.tol = tol;
    so.exec = parallel ? Exec::parallel : Exec::serial;
    PotentialGrid grid = solve_laplace(box, so);
    double plane_z = plane_z_set ? plane_z_nm * units::nm : bp.qw_center_z;
    if (!slice_path.empty()) {
        auto out = open_out(slice_path);
        write_potential_slice_csv(out, grid, plane_z);
    }
    auto wells = find_wells(grid, plane_z);
    std::string wjson = wells_to_json(wells);
    if (!wells_path.empty()) open_out(wells_path) << wjson << "\n";
    if (slice_path.empty() && wells_path.empty()) std::cout << wjson << "\n";
    std::cerr << "converged in " << grid.iterations << " sweeps, residual "
              << fmt_g9(grid.residual) << "; wells found: " << wells.size() << "\n";
    if (check && wells.size() != 9)
        throw CheckFailure("expected exactly 9 wells, found " + std::to_string(wells.size()));
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Design-verification toolkit for 2D Si quantum-dot spin-qubit arrays"};
    app.require_subcommand(1);

    // field-map
    auto* fm = app.add_subcommand("field-map", "sample the stray field over a grid, emit CSV");
    std::string fm_preset = "mm3x3", fm_assembly, fm_config, fm_out;
    std::vector<std::string> fm_sets;
    double fm_plane_z = 0.0, fm_extent = -1.0;
    int fm_samples = 101;
    bool fm_parallel = false, fm_check = false;
    fm->add_option("--preset", fm_preset, "mm3x3 | large-co | co-gates | none");
    fm->add_option("--assembly", fm_assembly, "prism assembly config file (overrides preset)");
    fm->add_option("--config", fm_config, "key=value config file; --set entries win");
    fm->add_option("--set", fm_sets, "preset override key=value (strict keys)");
    fm->add_option("--out", fm_out, "output CSV path (default: stdout)");
    fm->add_option("--plane-z", fm_plane_z, "sampling plane z in nm (default 0 = QW plane)");
    fm->add_option("--samples", fm_samples, "grid samples per axis (default 101)");
    fm->add_option("--extent", fm_extent, "half-extent of the sampled square in nm");
    fm->add_flag("--parallel", fm_parallel, "use the OpenMP field kernel");
    fm->add_flag("--check", fm_check, "assert the preset's design target");

    // report
    auto* rp = app.add_subcommand("report", "addressability report (JSON/CSV)");
    std::string rp_preset = "mm3x3", rp_assembly, rp_config, rp_json, rp_csv;
    std::vector<std::string> rp_sets;
    int rp_rows = 0, rp_cols = 0;
    double rp_pitch = 120.0, rp_margin = 5.0, rp_gamma = 28.0, rp_cdrive = 12.0;
    bool rp_parallel = false, rp_check = false;
    rp->add_option("--preset", rp_preset, "mm3x3 | large-co | co-gates | none");
    rp->add_option("--assembly", rp_assembly, "prism assembly config file (overrides preset)");
    rp->add_option("--config", rp_config, "key=value config file; --set entries win");
    rp->add_option("--set", rp_sets, "preset override key=value (strict keys)");
    rp->add_option("--rows", rp_rows, "layout rows (preset default if omitted)");
    rp->add_option("--cols", rp_cols, "layout cols (preset default if omitted)");
    rp->add_option("--pitch-nm", rp_pitch, "dot pitch in nm (default 120)");
    rp->add_option("--margin", rp_margin, "crosstalk margin (default 5)");
    rp->add_option("--gamma", rp_gamma, "gyromagnetic ratio in MHz/mT (default 28.0)");
    rp->add_option("--c-drive", rp_cdrive, "b_trans->f_Rabi factor in MHz nm/mT (default 12)");
    rp->add_option("--json", rp_json, "write the JSON report here");
    rp->add_option("--csv", rp_csv, "write the flat CSV here");
    rp->add_flag("--parallel", rp_parallel, "evaluate dots with the OpenMP lane");
    rp->add_flag("--check", rp_check, "assert the preset's design target");

    // route
    auto* rt = app.add_subcommand("route", "lookahead SWAP routing onto a coupling graph");
    std::string rt_circuit = "toffoli4", rt_graph = "fig3b", rt_mapping, rt_json;
    int rt_lookahead = default_lookahead_depth;
    bool rt_check = false;
    rt->add_option("--circuit", rt_circuit, "toffoli4 | grover4 | circuit file");
    rt->add_option("--graph", rt_graph, "fig3b | fig3c | graph config file");
    rt->add_option("--mapping", rt_mapping, "initial mapping, comma-separated physical nodes");
    rt->add_option("--lookahead", rt_lookahead, "lookahead window (default 4)");
    rt->add_option("--json", rt_json, "write the routing report here");
    rt->add_flag("--check", rt_check, "assert the target SWAP counts for the fixtures");

    // grover
    auto* gv = app.add_subcommand("grover", "four-qubit Grover probabilities");
    int gv_marked = 13;
    bool gv_routed = false, gv_parallel = false, gv_check = false;
    std::string gv_graph = "fig3b", gv_out;
    gv->add_option("--marked", gv_marked, "marked basis index 0..15 (default 13)");
    gv->add_flag("--routed", gv_routed, "route onto a graph before simulating");
    gv->add_option("--graph", gv_graph, "fig3b | fig3c | graph config file");
    gv->add_option("--out", gv_out, "output CSV path (default: stdout)");
    gv->add_flag("--parallel", gv_parallel, "use the OpenMP statevector kernel");
    gv->add_flag("--check", gv_check, "assert P(marked) = 121/256");

    // potential
    auto* pt = app.add_subcommand("potential", "solve the gate-defined potential (stack3x3)");
    std::vector<std::string> pt_sets;
    std::string pt_config;
    double pt_h = 5.0, pt_tol = 1e-6, pt_plane_z = 0.0;
    std::string pt_slice, pt_wells;
    bool pt_parallel = false, pt_check = false;
    pt->add_option("--config", pt_config, "key=value config file; --set entries win");
    pt->add_option("--set", pt_sets,
                   "stack override key=value (plunger_v, barrier_qq_v, barrier_qr_v, "
                   "reservoir_v, oxide_nm, qw_depth_nm)");
    pt->add_option("--h-nm", pt_h, "grid spacing in nm (default 5)");
    pt->add_option("--tol", pt_tol, "relative residual target (default 1e-6)");
    auto* pt_pz = pt->add_option("--plane-z", pt_plane_z, "slice plane z in nm (default: QW)");
    pt->add_option("--slice", pt_slice, "write the potential slice CSV here");
    pt->add_option("--wells", pt_wells, "write the wells JSON here");
    pt->add_flag("--parallel", pt_parallel, "use the OpenMP red-black sweeps");
    pt->add_flag("--check", pt_check, "assert exactly nine wells");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    try {
        if (fm->parsed())
            return cmd_field_map(fm_preset, fm_assembly, fm_config, fm_sets, fm_out, fm_plane_z,
                                 fm_samples, fm_extent, fm_parallel, fm_check);
        if (rp->parsed())
            return cmd_report(rp_preset, rp_assembly, rp_config, rp_sets, rp_rows, rp_cols,
                              rp_pitch, rp_margin, rp_gamma, rp_cdrive, rp_json, rp_csv,
                              rp_parallel, rp_check);
        if (rt->parsed())
            return cmd_route(rt_circuit, rt_graph, rt_mapping, rt_lookahead, rt_json, rt_check);
        if (gv->parsed())
            return cmd_grover(gv_marked, gv_routed, gv_graph, gv_out, gv_parallel, gv_check);
        if (pt->parsed())
            return cmd_potential(pt_config, pt_sets, pt_h, pt_tol, pt_plane_z,
                                 pt_pz->count() > 0, pt_slice, pt_wells, pt_parallel, pt_check);
    } catch (const CheckFailure& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return exit_check;
    } catch (const SolverDiverged& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return exit_numeric;
    } catch (const UnroutableError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return exit_numeric;
    } catch (const std::exception& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return exit_config;
    }
    return exit_config;
}
