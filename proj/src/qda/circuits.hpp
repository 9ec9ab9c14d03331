#pragma once

#include "qda/circuit.hpp"

namespace qda {

// Four-qubit Toffoli (C3X): controls q1,q2,q3, target q0. Thirteen two-qubit
// gates: seven controlled V^{+-1} with V = X^(1/4) walking the seven control
// parities in gray-code order, and six CNOTs among the controls. V is applied
// on odd-weight parities and V^dagger on even-weight ones, so the exponents
// telescope to X exactly when all three controls are set.
Circuit toffoli4();

// One Grover iteration on four qubits amplifying `marked` (0..15):
// H^4 preparation, X-conjugated C3Z oracle, then the inversion-about-mean
// diffusion H^4 X^4 C3Z X^4 H^4. C3Z is toffoli4 conjugated by H on the
// target. Ends with a measurement on each qubit.
Circuit grover4(int marked);

// success probability of one 4-qubit Grover iteration: sin^2(3 asin(1/4))
inline constexpr double grover4_success_probability = 121.0 / 256.0;

}  // namespace qda
