#pragma once

#include <stdexcept>
#include <vector>

#include "qda/circuit.hpp"
#include "qda/coupling.hpp"

namespace qda {

// bijection logical qubit -> physical node
struct Mapping {
    std::vector<int> log_to_phys;

    Mapping() = default;
    explicit Mapping(std::vector<int> m) : log_to_phys(std::move(m)) {}
    int phys_of(int q) const { return log_to_phys.at(static_cast<size_t>(q)); }
    int num_qubits() const { return static_cast<int>(log_to_phys.size()); }
    void validate(const CouplingGraph& g, bool data_only) const;
};

struct UnroutableError : std::runtime_error {
    explicit UnroutableError(const std::string& msg) : std::runtime_error(msg) {}
};

struct RouteOptions {
    int lookahead_depth = 4;
    // default: SWAPs act on data-data edges only; widening to ancilla nodes
    // is possible but not needed by the shipped fixtures
    bool route_through_ancillas = false;
    int stall_threshold = 3;  // non-improving swaps before the candidate set widens
    int max_swaps = 4096;
};

struct RoutedCircuit {
    Circuit circuit;  // physical indices; num_qubits = graph node count
    Mapping initial;
    Mapping final;
    // net permutation of physical lines induced by the inserted SWAPs
    // (start node -> end node); final = line_permutation o initial
    std::vector<int> line_permutation;
    int swap_count = 0;
    int two_qubit_count = 0;  // input two-qubit gates + inserted SWAPs
};

// Lookahead SWAP insertion. Gates are scanned in order; a blocked two-qubit
// gate triggers candidate SWAPs on routable edges incident to its operands,
// scored by how many of the next lookahead_depth two-qubit gates become
// executable. Ties fall to the score at depth+1, then to the
// lexicographically smallest physical edge. Deterministic.
RoutedCircuit route(const Circuit& circuit, const CouplingGraph& graph, const Mapping& initial,
                    const RouteOptions& options = {});

// (1) every two-qubit output gate acts on a coupled pair, and (2) the routed
// circuit equals the input up to the permutation implied by the mappings
// (checked on the dense unitaries of the touched nodes)
bool verify_routing(const Circuit& input, const RoutedCircuit& routed, const CouplingGraph& graph);

// committed initial placements hitting the target SWAP counts
Mapping default_mapping_fig3b();  // q0 on the center dot
Mapping default_mapping_fig3c();
inline constexpr int default_lookahead_depth = 4;

}  // namespace qda
