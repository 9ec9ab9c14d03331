#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qda {

// Gate set used by the compiler and simulator. CV/CVdg are controlled roots
// of X: CV(root) applies X^(1/root) on the target when the control is set,
// with root a power of two (root = 4 is the V gate of the Toffoli-4 network).
enum class GateKind { H, X, Z, Phase, CNOT, CZ, CPhase, CV, CVdg, Swap, Measure };

struct Gate {
    GateKind kind;
    int q0 = -1;        // single-qubit target, or control of a controlled gate
    int q1 = -1;        // target of a controlled gate / second operand of SWAP
    double angle = 0.0; // Phase / CPhase
    int root = 1;       // CV / CVdg

    static Gate h(int q) { return {GateKind::H, q}; }
    static Gate x(int q) { return {GateKind::X, q}; }
    static Gate z(int q) { return {GateKind::Z, q}; }
    static Gate phase(int q, double theta) { return {GateKind::Phase, q, -1, theta}; }
    static Gate cnot(int c, int t) { return {GateKind::CNOT, c, t}; }
    static Gate cz(int a, int b) { return {GateKind::CZ, a, b}; }
    static Gate cphase(int a, int b, double theta) { return {GateKind::CPhase, a, b, theta}; }
    static Gate cv(int c, int t, int root) { return {GateKind::CV, c, t, 0.0, root}; }
    static Gate cvdg(int c, int t, int root) { return {GateKind::CVdg, c, t, 0.0, root}; }
    static Gate swap(int a, int b) { return {GateKind::Swap, a, b}; }
    static Gate measure(int q) { return {GateKind::Measure, q}; }

    bool two_qubit() const;
    void validate(int num_qubits) const;
    // operands remapped through `map` (old index -> new index)
    Gate remapped(const std::vector<int>& map) const;
    std::string to_text() const;
};

struct Circuit {
    int num_qubits = 0;
    std::vector<Gate> gates;

    Circuit() = default;
    explicit Circuit(int n) : num_qubits(n) {}

    void append(const Gate& g) {
        g.validate(num_qubits);
        gates.push_back(g);
    }
    Circuit& operator<<(const Gate& g) {
        append(g);
        return *this;
    }
    int two_qubit_count() const;  // SWAPs included
    size_t size() const { return gates.size(); }
};

// text format, one gate per line: "h 0", "cx 0 1", "cv 1 0 4", "swap 1 2",
// "measure 3", "phase 0 1.5707963", "cphase 0 1 0.785"; '#' starts a comment
Circuit parse_circuit(std::istream& in, int num_qubits = -1);
Circuit parse_circuit_file(const std::string& path, int num_qubits = -1);
void write_circuit(std::ostream& out, const Circuit& c);

}  // namespace qda
