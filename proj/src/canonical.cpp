#include "stellate/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "stellate/errors.hpp"

namespace stellate {

namespace {

// One round of colour refinement until stable.  New colour ids depend only on
// (old colour, sorted neighbour colours), never on vertex numbering.
void refine_colors(const Graph& g, std::vector<int>& color) {
    const int n = g.n();
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.push_back(color[v]);
            for_each_bit(g.neighbors(v), [&](int u) { s.push_back(color[u]); });
            std::sort(s.begin() + 1, s.end());
            sig[static_cast<std::size_t>(v)] = {std::move(s), v};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(static_cast<std::size_t>(n));
        int cid = -1;
        const std::vector<int>* prev = nullptr;
        for (const auto& [key, v] : sorted) {
            if (!prev || key != *prev) ++cid;
            next[static_cast<std::size_t>(v)] = cid;
            prev = &key;
        }
        if (next == color) return;
        color = std::move(next);
    }
}

std::vector<std::vector<int>> cells_of(const std::vector<int>& color) {
    int k = 0;
    for (int c : color) k = std::max(k, c + 1);
    std::vector<std::vector<int>> cells(static_cast<std::size_t>(k));
    for (int v = 0; v < static_cast<int>(color.size()); ++v)
        cells[static_cast<std::size_t>(color[v])].push_back(v);
    return cells;
}

// True when adjacency between (and inside) every pair of cells is all-or-none;
// then any cell-respecting ordering yields the same matrix and we can stop
// individualizing.  Covers the empty/complete/multipartite worst cases.
bool homogeneous(const Graph& g, const std::vector<std::vector<int>>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (std::size_t j = i; j < cells.size(); ++j) {
            vset cj = vector_to_set(cells[j]);
            long edges = 0;
            for (int v : cells[i]) edges += popcount(g.neighbors(v) & cj);
            long all = (i == j) ? static_cast<long>(cells[i].size()) * (static_cast<long>(cells[i].size()) - 1)
                                : static_cast<long>(cells[i].size()) * static_cast<long>(cells[j].size());
            if (edges != 0 && edges != all) return false;
        }
    }
    return true;
}

std::string leaf_key(const Graph& g, const std::vector<int>& order) {
    const int n = g.n();
    std::string key;
    key.push_back(static_cast<char>(n));
    int acc = 0, bits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(order[u], order[v]) ? 1 : 0);
            if (++bits == 8) {
                key.push_back(static_cast<char>(acc));
                acc = 0;
                bits = 0;
            }
        }
    if (bits) key.push_back(static_cast<char>(acc << (8 - bits)));
    return key;
}

struct CanonSearch {
    const Graph& g;
    std::string best{};
    long leaves = 0;

    void consider(const std::string& key) {
        if (best.empty() || key < best) best = key;
        if (++leaves > 200000) throw budget_error("canonical form search exceeded its leaf budget");
    }

    void search(std::vector<int> color) {
        refine_colors(g, color);
        auto cells = cells_of(color);
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                target = i;
                break;
            }
        if (target == cells.size() || homogeneous(g, cells)) {
            std::vector<int> order;
            for (const auto& cell : cells)
                for (int v : cell) order.push_back(v);
            consider(leaf_key(g, order));
            return;
        }
        for (int v : cells[target]) {
            // split v off into its own cell, renumbering colours above it
            std::vector<int> next = color;
            for (int u = 0; u < g.n(); ++u)
                if (next[u] > color[v] || (next[u] == color[v] && u != v)) ++next[u];
            search(std::move(next));
        }
    }
};

} // namespace

std::string canonical_key(const Graph& g, int cap) {
    if (g.n() > cap)
        throw budget_error("canonical key capped at " + std::to_string(cap) + " vertices, got " + std::to_string(g.n()));
    if (g.n() == 0) return std::string(1, '\0');
    CanonSearch cs{g};
    cs.search(std::vector<int>(static_cast<std::size_t>(g.n()), 0));
    return cs.best;
}

void enumerate_small_graphs(int n, bool connected_only, const std::function<void(const Graph&)>& fn) {
    if (n < 1) throw input_error("internal enumeration needs at least 1 vertex, got " + std::to_string(n));
    if (n > 7) throw budget_error("internal enumeration supports 1..7 vertices, got " + std::to_string(n));
    const int e = n * (n - 1) / 2;
    auto eidx = [](int u, int v) { return v * (v - 1) / 2 + u; }; // u < v

    // per-permutation edge-bit relabeling tables
    std::vector<std::array<int, 21>> maps;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::array<int, 21> m{};
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) {
                int a = perm[static_cast<std::size_t>(u)], b = perm[static_cast<std::size_t>(v)];
                if (a > b) std::swap(a, b);
                m[static_cast<std::size_t>(eidx(u, v))] = eidx(a, b);
            }
        maps.push_back(m);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<bool> seen(std::size_t{1} << e, false);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << e); ++mask) {
        if (seen[mask]) continue;
        for (const auto& m : maps) {
            std::uint32_t img = 0;
            std::uint32_t rest = mask;
            while (rest) {
                int b = std::countr_zero(rest);
                rest &= rest - 1;
                img |= std::uint32_t{1} << m[static_cast<std::size_t>(b)];
            }
            seen[img] = true;
        }
        Graph g(n);
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if ((mask >> eidx(u, v)) & 1) g.add_edge(u, v);
        if (connected_only && !is_connected(g)) continue;
        fn(g);
    }
}

} // namespace stellate
