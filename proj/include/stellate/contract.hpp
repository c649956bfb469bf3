#ifndef STELLATE_CONTRACT_HPP
#define STELLATE_CONTRACT_HPP

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "stellate/graph.hpp"

namespace stellate {

inline constexpr int kDefaultContractileCap = 9;

// Contract non-adjacent x and y into one vertex.  Kept vertices are renumbered
// 0..n-3 in their old order; the merged vertex is the new last vertex n-2.
// Returns the graph and the old->new vertex map.
std::pair<Graph, std::vector<int>> contract_pair(const Graph& g, int x, int y);

struct ContractionStep {
    Graph before;         // the graph the pair lives in
    int v = 0, w = 0;     // the contracted pair
    std::vector<int> map; // old -> new vertex ids
};
struct ContractionTrace {
    std::vector<ContractionStep> steps; // ends at a clique
};

struct HertzStage {
    int v = 0, w = 0;        // the pair, as vertices of the stage graph
    bool v_was_current = false; // v_k == (vw)_k
    int w_original = -1;     // w_k as a vertex of the input graph
};

struct HertzResult {
    std::vector<int> coloring; // per input vertex, colors 1..colors_used
    int colors_used = 0;
    vset stable_set = 0;       // S = {v_0, w_0, ..., w_s} in the input graph
    bool s_found = false;      // false: universal seed, S = {seed}
    ContractionTrace trace;
    std::vector<HertzStage> stages;
};

// Hertz's contraction coloring: repeatedly contract an even pair chosen by
// rule R (prefer the running merged vertex; partner = non-neighbour with the
// most common neighbours), color the final clique, pull colors back.
HertzResult hertz_color(const Graph& g, int seed);

// Shared memo of even-contractibility verdicts keyed by canonical form.
class ContractileCache {
public:
    std::optional<bool> lookup(const std::string& key);
    void store(const std::string& key, bool value);

private:
    std::mutex mutex_;
    std::unordered_map<std::string, bool> memo_;
};

// A sequence of even-pair contractions down to a clique, or nullopt when every
// sequence gets stuck.  Exhaustive; capped at `cap` vertices.
std::optional<ContractionTrace> is_even_contractile(const Graph& g, ContractileCache* cache = nullptr,
                                                    int cap = kDefaultContractileCap);

struct PerfectlyContractileResult {
    bool perfectly_contractile = false;
    vset failing_subgraph = 0; // smallest induced subgraph that is not even-contractile
};
PerfectlyContractileResult is_perfectly_contractile(const Graph& g, ContractileCache* cache = nullptr,
                                                    int cap = kDefaultContractileCap);

} // namespace stellate

#endif
