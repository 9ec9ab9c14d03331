#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qda {

enum class NodeRole { data, ancilla, unused };

// Hardware connectivity: which physical dot pairs support two-qubit gates.
// Routing is restricted to data-role nodes unless explicitly widened.
struct CouplingGraph {
    std::vector<NodeRole> roles;
    std::vector<std::pair<int, int>> edges;  // normalized u < v, sorted, unique

    int num_nodes() const { return static_cast<int>(roles.size()); }
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;
    std::vector<int> data_nodes() const;
    std::vector<int> neighbors(int u) const;
    // edges whose endpoints are both in `allowed` (bitmask by node)
    std::vector<std::pair<int, int>> edges_within(const std::vector<bool>& allowed) const;
    // BFS distances within `allowed`; unreachable = -1
    std::vector<int> distances_within(int source, const std::vector<bool>& allowed) const;
    void validate() const;
};

// fig3b fixture: 3x3 nearest-neighbor grid, row-major node ids. Data dots
// form a plus shape around the center (nodes 1,3,4,5), ancillas sit at
// 0,2,6,7 (each adjacent to a data dot, as PSB readout needs), and the
// bottom-right dot 8 is unused. The data placement is configurable; the
// default is the one that admits a 2-SWAP Toffoli-4 routing.
CouplingGraph grid_graph_fig3b(const std::vector<int>& data_nodes = {1, 3, 4, 5});

// fig3c fixture: four data dots in a line (nodes 0..3) with one readout
// ancilla attached to each (nodes 4..7).
CouplingGraph chain_graph_fig3c();

// text format: "node <id> <data|ancilla|unused>" and "edge <u> <v>" lines,
// '#' comments
CouplingGraph parse_coupling_graph(std::istream& in);
CouplingGraph parse_coupling_graph_file(const std::string& path);
void write_coupling_graph(std::ostream& out, const CouplingGraph& g);

}  // namespace qda
