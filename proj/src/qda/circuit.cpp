#include "qda/circuit.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qda {

bool Gate::two_qubit() const {
    switch (kind) {
        case GateKind::CNOT:
        case GateKind::CZ:
        case GateKind::CPhase:
        case GateKind::CV:
        case GateKind::CVdg:
        case GateKind::Swap:
            return true;
        default:
            return false;
    }
}

void Gate::validate(int num_qubits) const {
    auto check = [&](int q) {
        if (q < 0 || q >= num_qubits)
            throw std::invalid_argument("gate operand " + std::to_string(q) +
                                        " out of range for " + std::to_string(num_qubits) +
                                        " qubits");
    };
    check(q0);
    if (two_qubit()) {
        check(q1);
        if (q0 == q1) throw std::invalid_argument("two-qubit gate operands must be distinct");
    }
    if ((kind == GateKind::CV || kind == GateKind::CVdg)) {
        if (root < 1 || (root & (root - 1)) != 0)
            throw std::invalid_argument("CV root must be a power of two");
    }
}

Gate Gate::remapped(const std::vector<int>& map) const {
    Gate g = *this;
    g.q0 = map.at(static_cast<size_t>(q0));
    if (two_qubit()) g.q1 = map.at(static_cast<size_t>(q1));
    return g;
}

std::string Gate::to_text() const {
    char buf[64];
    switch (kind) {
        case GateKind::H: std::snprintf(buf, sizeof buf, "h %d", q0); break;
        case GateKind::X: std::snprintf(buf, sizeof buf, "x %d", q0); break;
        case GateKind::Z: std::snprintf(buf, sizeof buf, "z %d", q0); break;
        case GateKind::Phase: std::snprintf(buf, sizeof buf, "phase %d %.17g", q0, angle); break;
        case GateKind::CNOT: std::snprintf(buf, sizeof buf, "cx %d %d", q0, q1); break;
        case GateKind::CZ: std::snprintf(buf, sizeof buf, "cz %d %d", q0, q1); break;
        case GateKind::CPhase:
            std::snprintf(buf, sizeof buf, "cphase %d %d %.17g", q0, q1, angle);
            break;
        case GateKind::CV: std::snprintf(buf, sizeof buf, "cv %d %d %d", q0, q1, root); break;
        case GateKind::CVdg: std::snprintf(buf, sizeof buf, "cvdg %d %d %d", q0, q1, root); break;
        case GateKind::Swap: std::snprintf(buf, sizeof buf, "swap %d %d", q0, q1); break;
        case GateKind::Measure: std::snprintf(buf, sizeof buf, "measure %d", q0); break;
        default: throw std::logic_error("unknown gate kind");
    }
    return buf;
}

int Circuit::two_qubit_count() const {
    int n = 0;
    for (const auto& g : gates) n += g.two_qubit() ? 1 : 0;
    return n;
}

namespace {

Gate parse_gate_line(const std::string& line) {
    std::istringstream ss(line);
    std::string op;
    ss >> op;
    auto need_int = [&]() {
        int v;
        if (!(ss >> v)) throw std::invalid_argument("bad gate line: " + line);
        return v;
    };
    auto need_double = [&]() {
        double v;
        if (!(ss >> v)) throw std::invalid_argument("bad gate line: " + line);
        return v;
    };
    Gate g;
    if (op == "h") g = Gate::h(need_int());
    else if (op == "x") g = Gate::x(need_int());
    else if (op == "z") g = Gate::z(need_int());
    else if (op == "phase") { int q = need_int(); g = Gate::phase(q, need_double()); }
    else if (op == "cx") { int c = need_int(); g = Gate::cnot(c, need_int()); }
    else if (op == "cz") { int a = need_int(); g = Gate::cz(a, need_int()); }
    else if (op == "cphase") { int a = need_int(); int b = need_int(); g = Gate::cphase(a, b, need_double()); }
    else if (op == "cv") { int c = need_int(); int t = need_int(); g = Gate::cv(c, t, need_int()); }
    else if (op == "cvdg") { int c = need_int(); int t = need_int(); g = Gate::cvdg(c, t, need_int()); }
    else if (op == "swap") { int a = need_int(); g = Gate::swap(a, need_int()); }
    else if (op == "measure") g = Gate::measure(need_int());
    else throw std::invalid_argument("unknown gate '" + op + "' in line: " + line);
    std::string rest;
    if (ss >> rest) throw std::invalid_argument("trailing tokens in gate line: " + line);
    return g;
}

}  // namespace

Circuit parse_circuit(std::istream& in, int num_qubits) {
    std::vector<Gate> gates;
    int max_q = -1;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string tok;
        if (!(probe >> tok)) continue;  // blank
        Gate g = parse_gate_line(line);
        max_q = std::max({max_q, g.q0, g.two_qubit() ? g.q1 : -1});
        gates.push_back(g);
    }
    Circuit c(num_qubits >= 0 ? num_qubits : max_q + 1);
    for (const auto& g : gates) c.append(g);
    return c;
}

Circuit parse_circuit_file(const std::string& path, int num_qubits) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open circuit file: " + path);
    return parse_circuit(in, num_qubits);
}

void write_circuit(std::ostream& out, const Circuit& c) {
    for (const auto& g : c.gates) out << g.to_text() << "\n";
}

}  // namespace qda
