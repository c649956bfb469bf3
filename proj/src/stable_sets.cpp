#include "stellate/stable_sets.hpp"

#include <algorithm>

#include "stellate/errors.hpp"

namespace stellate {

namespace {

void collect_stable(const Graph& g, vset chosen, vset free, std::vector<vset>& out, int cap) {
    if (static_cast<int>(out.size()) >= cap)
        throw budget_error("stable-set cap of " + std::to_string(cap) + " exceeded");
    out.push_back(chosen);
    while (free) {
        int v = lowest_bit(free);
        free &= free - 1;
        // branch: take v (dropping its neighbors), or skip it for good
        collect_stable(g, chosen | bit(v), free & ~g.neighbors(v), out, cap);
    }
}

void bron_kerbosch(const Graph& g, vset r, vset p, vset x, std::vector<vset>& out) {
    if (!p && !x) {
        out.push_back(r);
        return;
    }
    // Tomita pivot: the vertex of P|X covering most of P
    int pivot = -1, best = -1;
    for_each_bit(p | x, [&](int u) {
        int c = popcount(p & g.neighbors(u));
        if (c > best) {
            best = c;
            pivot = u;
        }
    });
    vset cand = p & ~g.neighbors(pivot);
    for_each_bit(cand, [&](int v) {
        bron_kerbosch(g, r | bit(v), p & g.neighbors(v), x & g.neighbors(v), out);
        p &= ~bit(v);
        x |= bit(v);
    });
}

} // namespace

void StableSetIndex::rebuild_positions() {
    position.clear();
    position.reserve(sets.size() * 2);
    for (int i = 0; i < size(); ++i) position.emplace(sets[i], i);
}

StableSetIndex enumerate_stable_sets(const Graph& g, int cap) {
    StableSetIndex idx;
    idx.graph = g;
    collect_stable(g, 0, g.vertices(), idx.sets, cap);
    std::sort(idx.sets.begin(), idx.sets.end(), [](vset a, vset b) {
        int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    idx.rebuild_positions();
    return idx;
}

std::vector<vset> enumerate_maximal_cliques(const Graph& g) {
    std::vector<vset> out;
    if (g.n() == 0) return out;
    bron_kerbosch(g, 0, g.vertices(), 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

int clique_number(const Graph& g) {
    int best = 0;
    for (vset c : enumerate_maximal_cliques(g)) best = std::max(best, popcount(c));
    return best;
}

} // namespace stellate
