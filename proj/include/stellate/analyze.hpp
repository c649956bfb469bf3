#ifndef STELLATE_ANALYZE_HPP
#define STELLATE_ANALYZE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "stellate/contract.hpp"
#include "stellate/recognizers.hpp"
#include "stellate/toric.hpp"

namespace stellate {

// Per-stage budgets; every knob has a STELLATE_BUDGET_* environment mirror.
struct Budgets {
    int stable_set_cap = kDefaultStableSetCap;
    int gb_var_budget = kDefaultGbVarBudget;
    long long gb_step_budget = kDefaultGbStepBudget;
    long long search_steps = kDefaultSearchSteps;
    int perfect_order_cap = kDefaultPerfectOrderCap;
    int contractile_cap = kDefaultContractileCap;
    int gsp_cap = kDefaultGspCap;
    int cutset_cap = kDefaultCutsetCap;
    int fiber_degree = kDefaultFiberDegree;
    int even_pair_vertex_cap = 20;

    ToricOptions toric() const { return {gb_var_budget, gb_step_budget}; }
    static Budgets from_env(Budgets base);
    static Budgets from_env() { return from_env(Budgets{}); }
};

// One clique-cutset decomposition piece, with its vertices in the input graph.
struct DecompositionPiece {
    Graph graph;
    std::vector<int> orig; // piece vertex -> input vertex
};

struct AtomSummary {
    vset vertices = 0; // input-graph mask
    bool type1 = false;
    bool type2 = false;
};

struct DecompositionSummary {
    std::vector<vset> cutsets; // input-graph masks of the cutsets used
    std::vector<AtomSummary> atoms;
    bool all_atoms_elementary = false; // evidence of clique separability
    bool search_complete = true;       // false: some piece exceeded the cutset cap
};

// Components first, then clique cutsets within each piece until none is left.
std::vector<DecompositionPiece> decompose_graph(const Graph& g, int cutset_cap,
                                                DecompositionSummary* summary = nullptr);

struct OrderProfile {
    std::string order; // "default" or "theorem32"
    int gb_size = 0;
    InitialIdealProfile profile;
};

// A witness binomial with each variable spelled out as its stable set.
struct ReportWitness {
    std::vector<vset> lead; // multisets of stable sets, input-graph masks
    std::vector<vset> tail;
};

struct HertzSummary {
    int seed = 0;
    int colors_used = 0;
    int clique_number = 0;
    bool proper = false;
    vset stable_set = 0;
    bool meets_all_maximal_cliques = false;
};

struct AnalysisReport {
    std::string graph6;
    int n = 0;
    int m = 0;
    bool connected = false;

    std::optional<bool> perfect;
    std::optional<HoleCertificate> odd_hole;
    std::optional<HoleCertificate> odd_antihole;
    std::optional<HoleCertificate> even_antihole;
    std::optional<StretcherEmbedding> odd_stretcher;

    std::optional<bool> meyniel;
    std::optional<bool> perfectly_orderable;
    std::optional<PerfectOrdering> ordering;
    std::optional<bool> generalized_split;
    std::optional<GeneralizedSplitPartition> gsp_partition;
    std::optional<DecompositionSummary> decomposition;
    std::optional<bool> has_dominating_stable_set; // strongly-perfect evidence
    vset dominating_stable_set = 0;

    std::optional<long long> stable_set_count;
    std::vector<OrderProfile> profiles;
    std::optional<bool> quadratically_generated;
    std::optional<ReportWitness> witness; // when not quadratically generated

    std::optional<std::vector<std::array<int, 2>>> even_pairs;
    std::optional<HertzSummary> hertz;
    std::optional<bool> perfectly_contractile;
    vset contractile_failing_subgraph = 0;

    // "COUNTEREXAMPLE-A": quadratically generated yet an even antihole or odd
    // stretcher is present (contradicts proved theorems, i.e. a bug).
    // "COUNTEREXAMPLE-B": clean of both yet not quadratically generated.
    std::vector<std::string> counterexample_flags;
    std::map<std::string, std::string> skipped; // stage -> reason
    std::map<std::string, double> timing_ms;
};

AnalysisReport analyze(const Graph& g, const Budgets& budgets = {});

nlohmann::json report_to_json(const AnalysisReport& report);
std::string report_to_text(const AnalysisReport& report);

} // namespace stellate

#endif
