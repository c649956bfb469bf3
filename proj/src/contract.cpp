#include "stellate/contract.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "stellate/canonical.hpp"
#include "stellate/errors.hpp"
#include "stellate/recognizers.hpp"

namespace stellate {

std::pair<Graph, std::vector<int>> contract_pair(const Graph& g, int x, int y) {
    int n = g.n();
    if (x < 0 || x >= n || y < 0 || y >= n || x == y)
        throw input_error("contract_pair: invalid vertex pair");
    if (g.adjacent(x, y))
        throw input_error("contract_pair: vertices are adjacent");
    std::vector<int> map(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (v != x && v != y) map[v] = next++;
    map[x] = map[y] = next; // merged vertex is the new last one
    Graph h(n - 1);
    for (auto [u, v] : g.edges())
        if (map[u] != map[v] && !h.adjacent(map[u], map[v])) h.add_edge(map[u], map[v]);
    return {h, map};
}

namespace {

bool whole_graph_clique(const Graph& g) {
    return is_clique(g, full_set(g.n()));
}

// Rule R: keep contracting the running merged vertex while it has a
// non-neighbour; otherwise take the lowest vertex that has one.
int pick_v(const Graph& g, int current) {
    vset all = full_set(g.n());
    if ((g.neighbors(current) | bit(current)) != all) return current;
    for (int v = 0; v < g.n(); ++v)
        if ((g.neighbors(v) | bit(v)) != all) return v;
    return -1; // clique; callers never get here
}

// Partner: non-neighbour of v with the most common neighbours, lowest id wins.
int pick_w(const Graph& g, int v) {
    vset candidates = full_set(g.n()) & ~g.neighbors(v) & ~bit(v);
    int best = -1, best_common = -1;
    for_each_bit(candidates, [&](int w) {
        int common = popcount(g.neighbors(v) & g.neighbors(w));
        if (common > best_common) {
            best_common = common;
            best = w;
        }
    });
    return best;
}

} // namespace

HertzResult hertz_color(const Graph& g, int seed) {
    int n = g.n();
    if (n == 0) throw input_error("hertz_color: empty graph");
    if (seed < 0 || seed >= n) throw input_error("hertz_color: seed out of range");

    HertzResult result;
    Graph cur = g;
    int current = seed; // (vw)_k as a vertex of cur
    // original vertices represented by each current vertex
    std::vector<vset> orig(n);
    for (int v = 0; v < n; ++v) orig[v] = bit(v);

    while (!whole_graph_clique(cur)) {
        int v = pick_v(cur, current);
        int w = pick_w(cur, v);
        HertzStage stage;
        stage.v = v;
        stage.w = w;
        stage.v_was_current = (v == current);
        // w is never a merged vertex: merged vertices either stay current or
        // are universal from then on, and universal vertices have no
        // non-neighbour to be picked as.
        if (popcount(orig[w]) != 1)
            throw std::logic_error("hertz_color: partner is a merged vertex");
        stage.w_original = lowest_bit(orig[w]);

        auto [next_graph, map] = contract_pair(cur, v, w);
        result.trace.steps.push_back({cur, v, w, map});
        result.stages.push_back(stage);

        std::vector<vset> next_orig(next_graph.n());
        for (int u = 0; u < cur.n(); ++u) next_orig[map[u]] |= orig[u];
        orig = std::move(next_orig);
        current = map[v];
        cur = std::move(next_graph);
    }

    // Color the terminal clique 1..k by vertex id, then pull back.
    result.coloring.assign(n, 0);
    for (int v = 0; v < cur.n(); ++v)
        for_each_bit(orig[v], [&](int u) { result.coloring[u] = v + 1; });
    result.colors_used = cur.n();

    // S = {v_0, w_0, ..., w_s} with stages 0..s the opening run that keeps
    // contracting the seed's merged vertex. The run must start at stage 0:
    // once it breaks the merged seed is universal and stays so, and later
    // v_was_current stages belong to other merged vertices.
    int k = static_cast<int>(result.stages.size());
    int s = -1;
    while (s + 1 < k && result.stages[s + 1].v_was_current) ++s;
    if (s >= 0) {
        result.s_found = true;
        result.stable_set = bit(result.stages[0].v); // stage 0: v_0 is original
        for (int i = 0; i <= s; ++i) result.stable_set |= bit(result.stages[i].w_original);
    } else {
        // Stage 0 skipped the seed, so the seed was universal from the start;
        // a universal vertex alone meets every maximal clique.
        result.s_found = false;
        result.stable_set = bit(seed);
    }
    return result;
}

std::optional<bool> ContractileCache::lookup(const std::string& key) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(key);
    if (it == memo_.end()) return std::nullopt;
    return it->second;
}

void ContractileCache::store(const std::string& key, bool value) {
    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(key, value);
}

namespace {

bool even_contractile_search(const Graph& g, ContractileCache* cache, std::vector<ContractionStep>* steps) {
    if (whole_graph_clique(g)) return true;
    std::string key;
    if (cache) {
        key = canonical_key(g);
        if (auto hit = cache->lookup(key); hit && !*hit) return false;
    }
    int n = g.n();
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (g.adjacent(x, y)) continue;
            if (!is_even_pair(g, x, y).even_pair) continue;
            auto [h, map] = contract_pair(g, x, y);
            steps->push_back({g, x, y, map});
            if (even_contractile_search(h, cache, steps)) {
                if (cache) cache->store(key, true);
                return true;
            }
            steps->pop_back();
        }
    }
    if (cache) cache->store(key, false);
    return false;
}

} // namespace

std::optional<ContractionTrace> is_even_contractile(const Graph& g, ContractileCache* cache, int cap) {
    if (g.n() > cap)
        throw budget_error("is_even_contractile: graph exceeds the vertex cap");
    ContractionTrace trace;
    if (even_contractile_search(g, cache, &trace.steps)) return trace;
    return std::nullopt;
}

PerfectlyContractileResult is_perfectly_contractile(const Graph& g, ContractileCache* cache, int cap) {
    int n = g.n();
    if (n > cap)
        throw budget_error("is_perfectly_contractile: graph exceeds the vertex cap");
    ContractileCache local;
    if (!cache) cache = &local;
    // Smallest induced subgraphs first, one representative per isomorphism class.
    std::vector<vset> subsets;
    for (vset mask = 1; mask < (vset{1} << n); ++mask) subsets.push_back(mask);
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](vset a, vset b) { return popcount(a) < popcount(b); });
    std::set<std::string> seen;
    for (vset mask : subsets) {
        Graph sub = induced_subgraph(g, mask).graph;
        if (!seen.insert(canonical_key(sub)).second) continue;
        if (!is_even_contractile(sub, cache, cap)) return {false, mask};
    }
    return {true, 0};
}

} // namespace stellate
