#include "qda/coupling.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace qda {

void CouplingGraph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-edge in coupling graph");
    if (u < 0 || v < 0 || u >= num_nodes() || v >= num_nodes())
        throw std::invalid_argument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
    auto e = std::make_pair(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) edges.insert(it, e);
}

bool CouplingGraph::adjacent(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<int> CouplingGraph::data_nodes() const {
    std::vector<int> out;
    for (int i = 0; i < num_nodes(); ++i)
        if (roles[static_cast<size_t>(i)] == NodeRole::data) out.push_back(i);
    return out;
}

std::vector<int> CouplingGraph::neighbors(int u) const {
    std::vector<int> out;
    for (auto [a, b] : edges) {
        if (a == u) out.push_back(b);
        if (b == u) out.push_back(a);
    }
    return out;
}

std::vector<std::pair<int, int>> CouplingGraph::edges_within(
    const std::vector<bool>& allowed) const {
    std::vector<std::pair<int, int>> out;
    for (auto e : edges)
        if (allowed[static_cast<size_t>(e.first)] && allowed[static_cast<size_t>(e.second)])
            out.push_back(e);
    return out;
}

std::vector<int> CouplingGraph::distances_within(int source,
                                                 const std::vector<bool>& allowed) const {
    std::vector<int> dist(static_cast<size_t>(num_nodes()), -1);
    if (!allowed[static_cast<size_t>(source)]) return dist;
    std::queue<int> q;
    dist[static_cast<size_t>(source)] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : neighbors(u)) {
            if (!allowed[static_cast<size_t>(w)] || dist[static_cast<size_t>(w)] >= 0) continue;
            dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
            q.push(w);
        }
    }
    return dist;
}

void CouplingGraph::validate() const {
    for (auto [u, v] : edges)
        if (u < 0 || v <= u || v >= num_nodes())
            throw std::invalid_argument("malformed coupling graph edge");
}

CouplingGraph grid_graph_fig3b(const std::vector<int>& data_nodes) {
    CouplingGraph g;
    g.roles.assign(9, NodeRole::ancilla);
    g.roles[8] = NodeRole::unused;
    for (int d : data_nodes) {
        if (d < 0 || d > 8) throw std::invalid_argument("fig3b data node out of range");
        if (d == 8) throw std::invalid_argument("fig3b bottom-right node is unused");
        g.roles[static_cast<size_t>(d)] = NodeRole::data;
    }
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            int id = r * 3 + c;
            if (c + 1 < 3) g.add_edge(id, id + 1);
            if (r + 1 < 3) g.add_edge(id, id + 3);
        }
    return g;
}

CouplingGraph chain_graph_fig3c() {
    CouplingGraph g;
    g.roles.assign(8, NodeRole::ancilla);
    for (int i = 0; i < 4; ++i) g.roles[static_cast<size_t>(i)] = NodeRole::data;
    for (int i = 0; i + 1 < 4; ++i) g.add_edge(i, i + 1);
    for (int i = 0; i < 4; ++i) g.add_edge(i, i + 4);  // readout ancilla per data dot
    return g;
}

CouplingGraph parse_coupling_graph(std::istream& in) {
    struct NodeDecl { int id; NodeRole role; };
    std::vector<NodeDecl> nodes;
    std::vector<std::pair<int, int>> edge_decls;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string kw;
        if (!(ss >> kw)) continue;
        if (kw == "node") {
            int id;
            std::string role;
            if (!(ss >> id >> role)) throw std::invalid_argument("bad node line: " + line);
            NodeRole r;
            if (role == "data") r = NodeRole::data;
            else if (role == "ancilla") r = NodeRole::ancilla;
            else if (role == "unused") r = NodeRole::unused;
            else throw std::invalid_argument("unknown node role: " + role);
            nodes.push_back({id, r});
        } else if (kw == "edge") {
            int u, v;
            if (!(ss >> u >> v)) throw std::invalid_argument("bad edge line: " + line);
            edge_decls.emplace_back(u, v);
        } else {
            throw std::invalid_argument("unknown graph directive: " + kw);
        }
    }
    int max_id = -1;
    for (auto& n : nodes) max_id = std::max(max_id, n.id);
    CouplingGraph g;
    g.roles.assign(static_cast<size_t>(max_id + 1), NodeRole::unused);
    for (auto& n : nodes) g.roles[static_cast<size_t>(n.id)] = n.role;
    for (auto [u, v] : edge_decls) g.add_edge(u, v);
    return g;
}

CouplingGraph parse_coupling_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return parse_coupling_graph(in);
}

void write_coupling_graph(std::ostream& out, const CouplingGraph& g) {
    for (int i = 0; i < g.num_nodes(); ++i) {
        const char* role = g.roles[static_cast<size_t>(i)] == NodeRole::data      ? "data"
                           : g.roles[static_cast<size_t>(i)] == NodeRole::ancilla ? "ancilla"
                                                                                  : "unused";
        out << "node " << i << " " << role << "\n";
    }
    for (auto [u, v] : g.edges) out << "edge " << u << " " << v << "\n";
}

}  // namespace qda
