#include "stellate/graph.hpp"

#include <algorithm>

#include "stellate/errors.hpp"

namespace stellate {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > 64) throw input_error("graph must have between 0 and 64 vertices, got " + std::to_string(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw input_error("vertex " + std::to_string(v + 1) + " out of range 1.." + std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw input_error("loop at vertex " + std::to_string(u + 1));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != n_) throw input_error("label count does not match vertex count");
    labels_ = std::move(labels);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for_each_bit(adj_[u] & ~(full_set(u + 1)), [&](int v) { out.emplace_back(u, v); });
    return out;
}

Graph complement(const Graph& g) {
    Graph h(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) h.add_edge(u, v);
    return h;
}

InducedSubgraph induced_subgraph(const Graph& g, vset vs) {
    std::vector<int> map = set_to_vector(vs);
    Graph h(static_cast<int>(map.size()));
    for (int a = 0; a < h.n(); ++a)
        for (int b = a + 1; b < h.n(); ++b)
            if (g.adjacent(map[a], map[b])) h.add_edge(a, b);
    if (g.has_labels()) {
        std::vector<std::string> labels;
        labels.reserve(map.size());
        for (int v : map) labels.push_back(g.labels()[v]);
        h.set_labels(std::move(labels));
    }
    return {std::move(h), std::move(map)};
}

std::vector<vset> connected_components(const Graph& g) {
    std::vector<vset> comps;
    vset seen = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (has_bit(seen, v)) continue;
        vset comp = bit(v), frontier = bit(v);
        while (frontier) {
            vset next = 0;
            for_each_bit(frontier, [&](int u) { next |= g.neighbors(u); });
            frontier = next & ~comp;
            comp |= frontier;
        }
        seen |= comp;
        comps.push_back(comp);
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_stable_set(const Graph& g, vset s) {
    bool ok = true;
    for_each_bit(s, [&](int v) { ok = ok && !(g.neighbors(v) & s); });
    return ok;
}

bool is_clique(const Graph& g, vset s) {
    bool ok = true;
    for_each_bit(s, [&](int v) { ok = ok && (g.neighbors(v) & s) == (s & ~bit(v)); });
    return ok;
}

bool is_bipartite(const Graph& g, std::vector<int>* side) {
    std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
    for (int start = 0; start < g.n(); ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            bool ok = true;
            for_each_bit(g.neighbors(u), [&](int v) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    ok = false;
                }
            });
            if (!ok) return false;
        }
    }
    if (side) *side = std::move(color);
    return true;
}

} // namespace stellate
