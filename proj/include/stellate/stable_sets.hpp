#ifndef STELLATE_STABLE_SETS_HPP
#define STELLATE_STABLE_SETS_HPP

#include <unordered_map>
#include <vector>

#include "stellate/graph.hpp"

namespace stellate {

inline constexpr int kDefaultStableSetCap = 20000;

// All stable sets of a graph (the empty set included), in the canonical order
// used everywhere downstream: ascending by size, then by bitmask value.
// One toric variable per entry.
struct StableSetIndex {
    Graph graph;
    std::vector<vset> sets;
    std::unordered_map<vset, int> position;

    int size() const { return static_cast<int>(sets.size()); }
    int index_of(vset s) const {
        auto it = position.find(s);
        return it == position.end() ? -1 : it->second;
    }
    void rebuild_positions();
};

StableSetIndex enumerate_stable_sets(const Graph& g, int cap = kDefaultStableSetCap);

// Maximal cliques (Bron-Kerbosch with pivoting), sorted ascending by bitmask.
std::vector<vset> enumerate_maximal_cliques(const Graph& g);

int clique_number(const Graph& g);

} // namespace stellate

#endif
