#pragma once

#include <complex>
#include <vector>

#include "qda/circuit.hpp"
#include "qda/parallel.hpp"

namespace qda {

using cplx = std::complex<double>;

// Dense statevector, little-endian: qubit 0 is the least-significant bit of
// the basis index, so |q3 q2 q1 q0> = |1101> is index 13.
struct Statevector {
    int num_qubits = 0;
    std::vector<cplx> amps;

    static Statevector zero_state(int n);
    static Statevector basis_state(int n, int index);

    size_t dim() const { return amps.size(); }
    double norm() const;
    double probability(size_t basis_index) const { return std::norm(amps[basis_index]); }
};

inline constexpr int max_sim_qubits = 14;

// In-place unitary action. MEASURE is a no-op in statevector mode. The
// parallel lane writes disjoint amplitude pairs, so it is bit-identical to
// the serial lane.
void apply_gate(Statevector& state, const Gate& gate, Exec exec = Exec::serial);

Statevector simulate(const Circuit& circuit, Statevector initial, Exec exec = Exec::serial);
Statevector simulate(const Circuit& circuit, Exec exec = Exec::serial);  // from |0...0>

using Unitary = std::vector<std::vector<cplx>>;  // row-major, dim 2^n

inline constexpr int max_unitary_qubits = 6;

// 2^n x 2^n matrix assembled by simulating every basis input; n <= 6
Unitary unitary_of(const Circuit& circuit);

// max |(U dag U - I)_ij|
double unitarity_defect(const Unitary& u);

// True iff unitary_of(c2) equals P(perm) * unitary_of(c1) up to a global
// phase, where perm maps a qubit index of c1 to the qubit of c2 holding it.
bool equivalent_up_to_permutation(const Circuit& c1, const Circuit& c2,
                                  const std::vector<int>& perm, double tol = 1e-9);

}  // namespace qda
