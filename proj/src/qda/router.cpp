#include "qda/router.hpp"

#include <algorithm>
#include <set>

#include "qda/statevector.hpp"

namespace qda {

void Mapping::validate(const CouplingGraph& g, bool data_only) const {
    std::set<int> seen;
    for (int p : log_to_phys) {
        if (p < 0 || p >= g.num_nodes())
            throw std::invalid_argument("mapping target out of range");
        if (data_only && g.roles[static_cast<size_t>(p)] != NodeRole::data)
            throw std::invalid_argument("mapping places a qubit on a non-data node");
        if (!seen.insert(p).second) throw std::invalid_argument("mapping is not injective");
    }
}

namespace {

struct RouterState {
    const CouplingGraph& graph;
    std::vector<bool> routable;                 // node usable for SWAPs
    std::vector<std::pair<int, int>> redges;    // routable edges, sorted
    std::vector<std::vector<int>> dist;         // pairwise distances within routable set
    std::vector<int> phys;                      // logical -> node
    std::vector<int> occupant;                  // node -> logical (-1: none)

    RouterState(const CouplingGraph& g, const Mapping& initial, bool through_ancillas)
        : graph(g) {
        routable.assign(static_cast<size_t>(g.num_nodes()), false);
        for (int i = 0; i < g.num_nodes(); ++i) {
            NodeRole r = g.roles[static_cast<size_t>(i)];
            routable[static_cast<size_t>(i)] =
                r == NodeRole::data || (through_ancillas && r == NodeRole::ancilla);
        }
        redges = g.edges_within(routable);
        dist.assign(static_cast<size_t>(g.num_nodes()), {});
        for (int i = 0; i < g.num_nodes(); ++i)
            if (routable[static_cast<size_t>(i)])
                dist[static_cast<size_t>(i)] = g.distances_within(i, routable);
        phys = initial.log_to_phys;
        occupant.assign(static_cast<size_t>(g.num_nodes()), -1);
        for (size_t q = 0; q < phys.size(); ++q) occupant[static_cast<size_t>(phys[q])] = (int)q;
    }

    bool executable(const Gate& g, const std::vector<int>& ph) const {
        return graph.adjacent(ph[static_cast<size_t>(g.q0)], ph[static_cast<size_t>(g.q1)]);
    }

    int distance(int u, int v) const { return dist[static_cast<size_t>(u)][static_cast<size_t>(v)]; }

    void apply_swap(int u, int v) {
        int lu = occupant[static_cast<size_t>(u)], lv = occupant[static_cast<size_t>(v)];
        if (lu >= 0) phys[static_cast<size_t>(lu)] = v;
        if (lv >= 0) phys[static_cast<size_t>(lv)] = u;
        std::swap(occupant[static_cast<size_t>(u)], occupant[static_cast<size_t>(v)]);
    }
};

// executable gates among the next `window` two-qubit gates from gate index gi,
// under the tentative placement ph
int lookahead_score(const Circuit& c, size_t gi, int window, const RouterState& st,
                    const std::vector<int>& ph) {
    int count = 0, seen = 0;
    for (size_t i = gi; i < c.gates.size() && seen < window; ++i) {
        const Gate& g = c.gates[i];
        if (!g.two_qubit()) continue;
        ++seen;
        if (st.executable(g, ph)) ++count;
    }
    return count;
}

}  // namespace

RoutedCircuit route(const Circuit& circuit, const CouplingGraph& graph, const Mapping& initial,
                    const RouteOptions& options) {
    graph.validate();
    if (initial.num_qubits() != circuit.num_qubits)
        throw std::invalid_argument("initial mapping size does not match circuit");
    initial.validate(graph, !options.route_through_ancillas);
    if (options.lookahead_depth < 1) throw std::invalid_argument("lookahead_depth must be >= 1");

    RouterState st(graph, initial, options.route_through_ancillas);

    // all mapped nodes must be mutually reachable within the routable set
    if (!st.phys.empty()) {
        auto d0 = graph.distances_within(st.phys[0], st.routable);
        for (int p : st.phys)
            if (d0[static_cast<size_t>(p)] < 0)
                throw UnroutableError("data subgraph is disconnected across the mapped qubits");
    }

    RoutedCircuit out;
    out.circuit = Circuit(graph.num_nodes());
    out.initial = initial;
    out.line_permutation.resize(static_cast<size_t>(graph.num_nodes()));
    for (int i = 0; i < graph.num_nodes(); ++i) out.line_permutation[static_cast<size_t>(i)] = i;

    auto emit_swap = [&](std::pair<int, int> e) {
        st.apply_swap(e.first, e.second);
        out.circuit.append(Gate::swap(e.first, e.second));
        for (int& loc : out.line_permutation)
            loc = loc == e.first ? e.second : (loc == e.second ? e.first : loc);
        ++out.swap_count;
    };

    const int L = options.lookahead_depth;
    for (size_t gi = 0; gi < circuit.gates.size(); ++gi) {
        const Gate& g = circuit.gates[gi];
        if (!g.two_qubit()) {
            out.circuit.append(g.remapped(st.phys));
            continue;
        }
        int stall = 0;
        int best_d = st.distance(st.phys[static_cast<size_t>(g.q0)],
                                 st.phys[static_cast<size_t>(g.q1)]);
        while (!st.executable(g, st.phys)) {
            if (out.swap_count >= options.max_swaps)
                throw UnroutableError("swap budget exhausted; routing does not converge");
            int pa = st.phys[static_cast<size_t>(g.q0)];
            int pb = st.phys[static_cast<size_t>(g.q1)];
            bool widened = stall > options.stall_threshold;
            std::vector<std::pair<int, int>> cand;
            if (!widened) {
                for (auto e : st.redges)
                    if (e.first == pa || e.second == pa || e.first == pb || e.second == pb)
                        cand.push_back(e);
            } else {
                cand = st.redges;
            }
            if (cand.empty()) throw UnroutableError("blocked gate has no candidate SWAP");

            int cur_d = st.distance(pa, pb);
            int best_score = -1, best_score2 = -1;
            std::pair<int, int> best{-1, -1};
            for (auto e : cand) {
                std::vector<int> ph = st.phys;
                int lu = st.occupant[static_cast<size_t>(e.first)];
                int lv = st.occupant[static_cast<size_t>(e.second)];
                if (lu >= 0) ph[static_cast<size_t>(lu)] = e.second;
                if (lv >= 0) ph[static_cast<size_t>(lv)] = e.first;
                int score = lookahead_score(circuit, gi, L, st, ph);
                int score2 = lookahead_score(circuit, gi, L + 1, st, ph);
                if (widened) {
                    // guarantee progress: prefer swaps that shrink the blocked pair
                    int nd = st.distance(ph[static_cast<size_t>(g.q0)], ph[static_cast<size_t>(g.q1)]);
                    score += nd < cur_d ? 1000 : 0;
                }
                if (score > best_score || (score == best_score && score2 > best_score2) ||
                    (score == best_score && score2 == best_score2 && e < best)) {
                    best_score = score;
                    best_score2 = score2;
                    best = e;
                }
            }
            emit_swap(best);
            // the potential is the best blocked-pair distance reached so far;
            // only a strict improvement counts as progress
            int nd = st.distance(st.phys[static_cast<size_t>(g.q0)],
                                 st.phys[static_cast<size_t>(g.q1)]);
            if (nd < best_d) {
                best_d = nd;
                stall = 0;
            } else {
                ++stall;
            }
        }
        out.circuit.append(g.remapped(st.phys));
    }

    out.final = Mapping(st.phys);
    out.two_qubit_count = circuit.two_qubit_count() + out.swap_count;
    return out;
}

bool verify_routing(const Circuit& input, const RoutedCircuit& routed,
                    const CouplingGraph& graph) {
    // edge legality
    for (const Gate& g : routed.circuit.gates)
        if (g.two_qubit() && !graph.adjacent(g.q0, g.q1)) return false;

    // nodes participating in the unitary comparison: everything the routed
    // circuit touches plus the initially mapped nodes
    std::set<int> used(routed.initial.log_to_phys.begin(), routed.initial.log_to_phys.end());
    for (const Gate& g : routed.circuit.gates) {
        used.insert(g.q0);
        if (g.two_qubit()) used.insert(g.q1);
    }
    if (static_cast<int>(used.size()) > max_unitary_qubits)
        throw std::invalid_argument("routed circuit touches too many nodes for the unitary check");

    std::vector<int> compact(static_cast<size_t>(graph.num_nodes()), -1);
    int k = 0;
    for (int node : used) compact[static_cast<size_t>(node)] = k++;

    // input embedded at the initial placement
    Circuit embedded(k);
    std::vector<int> log_to_compact(static_cast<size_t>(input.num_qubits));
    for (int q = 0; q < input.num_qubits; ++q)
        log_to_compact[static_cast<size_t>(q)] =
            compact[static_cast<size_t>(routed.initial.phys_of(q))];
    for (const Gate& g : input.gates) embedded.append(g.remapped(log_to_compact));

    Circuit compacted(k);
    for (const Gate& g : routed.circuit.gates) compacted.append(g.remapped(compact));

    // permutation of compact lines induced by the inserted SWAPs
    std::vector<int> perm(static_cast<size_t>(k));
    for (int node : used)
        perm[static_cast<size_t>(compact[static_cast<size_t>(node)])] =
            compact[static_cast<size_t>(routed.line_permutation[static_cast<size_t>(node)])];

    return equivalent_up_to_permutation(embedded, compacted, perm);
}

Mapping default_mapping_fig3b() { return Mapping({4, 1, 3, 5}); }
Mapping default_mapping_fig3c() { return Mapping({1, 0, 2, 3}); }

}  // namespace qda
