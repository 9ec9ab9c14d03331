#include "qda/statevector.hpp"

#include <cmath>
#include <stdexcept>

namespace qda {

Statevector Statevector::zero_state(int n) { return basis_state(n, 0); }

Statevector Statevector::basis_state(int n, int index) {
    if (n < 1 || n > max_sim_qubits)
        throw std::invalid_argument("qubit count out of range [1, 14]");
    if (index < 0 || index >= (1 << n)) throw std::invalid_argument("basis index out of range");
    Statevector s;
    s.num_qubits = n;
    s.amps.assign(size_t{1} << n, cplx{0.0, 0.0});
    s.amps[static_cast<size_t>(index)] = 1.0;
    return s;
}

double Statevector::norm() const {
    double s = 0.0;
    for (const cplx& a : amps) s += std::norm(a);
    return std::sqrt(s);
}

namespace {

struct Mat2 {
    cplx a, b, c, d;  // [[a,b],[c,d]]
};

Mat2 root_of_x(int root, bool dagger) {
    double theta = 3.14159265358979323846 / static_cast<double>(root);
    cplx w = std::polar(1.0, dagger ? -theta : theta);
    cplx p = (1.0 + w) * 0.5, q = (1.0 - w) * 0.5;
    return {p, q, q, p};
}

Mat2 gate_matrix(const Gate& g) {
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    switch (g.kind) {
        case GateKind::H: return {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
        case GateKind::X:
        case GateKind::CNOT: return {0.0, 1.0, 1.0, 0.0};
        case GateKind::Z: return {1.0, 0.0, 0.0, -1.0};
        case GateKind::Phase: return {1.0, 0.0, 0.0, std::polar(1.0, g.angle)};
        case GateKind::CV: return root_of_x(g.root, false);
        case GateKind::CVdg: return root_of_x(g.root, true);
        default: throw std::logic_error("gate has no 2x2 matrix");
    }
}

// apply 2x2 on target bit t, optionally conditioned on control bit c (-1: none)
void apply_1q(Statevector& st, const Mat2& m, int t, int c, Exec exec) {
    const size_t half = st.dim() >> 1;
    const size_t tbit = size_t{1} << t;
    const size_t low_mask = tbit - 1;
    parallel_for(exec, static_cast<std::ptrdiff_t>(half), [&](std::ptrdiff_t k) {
        size_t m0 = static_cast<size_t>(k);
        size_t i0 = ((m0 & ~low_mask) << 1) | (m0 & low_mask);
        if (c >= 0 && ((i0 >> c) & 1) == 0) return;
        size_t i1 = i0 | tbit;
        cplx x0 = st.amps[i0], x1 = st.amps[i1];
        st.amps[i0] = m.a * x0 + m.b * x1;
        st.amps[i1] = m.c * x0 + m.d * x1;
    });
}

}  // namespace

void apply_gate(Statevector& state, const Gate& gate, Exec exec) {
    gate.validate(state.num_qubits);
    switch (gate.kind) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::Z:
        case GateKind::Phase:
            apply_1q(state, gate_matrix(gate), gate.q0, -1, exec);
            return;
        case GateKind::CNOT:
        case GateKind::CV:
        case GateKind::CVdg:
            apply_1q(state, gate_matrix(gate), gate.q1, gate.q0, exec);
            return;
        case GateKind::CZ:
        case GateKind::CPhase: {
            cplx ph = gate.kind == GateKind::CZ ? cplx{-1.0, 0.0} : std::polar(1.0, gate.angle);
            size_t mask = (size_t{1} << gate.q0) | (size_t{1} << gate.q1);
            parallel_for(exec, static_cast<std::ptrdiff_t>(state.dim()), [&](std::ptrdiff_t i) {
                if ((static_cast<size_t>(i) & mask) == mask) state.amps[i] *= ph;
            });
            return;
        }
        case GateKind::Swap: {
            size_t abit = size_t{1} << gate.q0, bbit = size_t{1} << gate.q1;
            parallel_for(exec, static_cast<std::ptrdiff_t>(state.dim()), [&](std::ptrdiff_t i) {
                size_t u = static_cast<size_t>(i);
                if ((u & abit) && !(u & bbit)) std::swap(state.amps[u], state.amps[u ^ abit ^ bbit]);
            });
            return;
        }
        case GateKind::Measure:
            return;  // probabilities are read out separately
    }
    throw std::logic_error("unhandled gate kind");
}

Statevector simulate(const Circuit& circuit, Statevector initial, Exec exec) {
    if (circuit.num_qubits > max_sim_qubits)
        throw std::invalid_argument("circuit exceeds the 14-qubit simulator cap");
    if (initial.num_qubits != circuit.num_qubits)
        throw std::invalid_argument("initial state size does not match circuit");
    for (const Gate& g : circuit.gates) apply_gate(initial, g, exec);
    return initial;
}

Statevector simulate(const Circuit& circuit, Exec exec) {
    return simulate(circuit, Statevector::zero_state(circuit.num_qubits), exec);
}

Unitary unitary_of(const Circuit& circuit) {
    if (circuit.num_qubits > max_unitary_qubits)
        throw std::invalid_argument("unitary_of capped at 6 qubits");
    size_t dim = size_t{1} << circuit.num_qubits;
    Unitary u(dim, std::vector<cplx>(dim));
    for (size_t col = 0; col < dim; ++col) {
        Statevector s = simulate(
            circuit, Statevector::basis_state(circuit.num_qubits, static_cast<int>(col)));
        for (size_t row = 0; row < dim; ++row) u[row][col] = s.amps[row];
    }
    return u;
}

double unitarity_defect(const Unitary& u) {
    size_t dim = u.size();
    double worst = 0.0;
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
            cplx s{0.0, 0.0};
            for (size_t k = 0; k < dim; ++k) s += std::conj(u[k][i]) * u[k][j];
            if (i == j) s -= 1.0;
            worst = std::max(worst, std::abs(s));
        }
    return worst;
}

bool equivalent_up_to_permutation(const Circuit& c1, const Circuit& c2,
                                  const std::vector<int>& perm, double tol) {
    if (c1.num_qubits != c2.num_qubits)
        throw std::invalid_argument("circuits must have the same qubit count");
    int n = c1.num_qubits;
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permutation size does not match circuit");
    Unitary u1 = unitary_of(c1), u2 = unitary_of(c2);
    size_t dim = size_t{1} << n;

    auto permute_index = [&](size_t b) {
        size_t out = 0;
        for (int q = 0; q < n; ++q)
            if ((b >> q) & 1) out |= size_t{1} << perm[static_cast<size_t>(q)];
        return out;
    };

    // M = P(perm) * U1, i.e. row b of U1 becomes row perm(b)
    Unitary m(dim, std::vector<cplx>(dim));
    for (size_t r = 0; r < dim; ++r) m[permute_index(r)] = u1[r];

    // global-phase alignment on the largest entry of M
    size_t bi = 0, bj = 0;
    double best = -1.0;
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j)
            if (std::abs(m[i][j]) > best) { best = std::abs(m[i][j]); bi = i; bj = j; }
    if (best <= tol) return false;
    cplx phase = u2[bi][bj] / m[bi][bj];
    if (std::abs(std::abs(phase) - 1.0) > tol) return false;

    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j)
            if (std::abs(u2[i][j] - phase * m[i][j]) > tol) return false;
    return true;
}

}  // namespace qda
