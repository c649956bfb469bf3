#ifndef STELLATE_GRAPH_HPP
#define STELLATE_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "stellate/bits.hpp"

namespace stellate {

// Simple undirected graph on at most 64 vertices, adjacency kept as one bitset
// per vertex.  Vertices are 0-based internally; all file formats and the CLI
// are 1-based.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int edge_count() const;

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return has_bit(adj_[u], v); }
    vset neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return popcount(adj_[v]); }
    vset vertices() const { return full_set(n_); }

    // Optional per-vertex labels (used by generated families, e.g. "i1", "k3").
    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    int n_ = 0;
    std::vector<vset> adj_;
    std::vector<std::string> labels_;

    void check_vertex(int v) const;
};

Graph complement(const Graph& g);

// Subgraph induced on the vertices of `vs` (a bitmask).  Vertices are relabeled
// 0..k-1 in ascending order of their old ids; `vertex_map[new] == old`.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map;
};
InducedSubgraph induced_subgraph(const Graph& g, vset vs);

std::vector<vset> connected_components(const Graph& g);
bool is_connected(const Graph& g);

bool is_stable_set(const Graph& g, vset s);
bool is_clique(const Graph& g, vset s);
bool is_bipartite(const Graph& g, std::vector<int>* side = nullptr);

} // namespace stellate

#endif
