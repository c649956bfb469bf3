#ifndef STELLATE_RECOGNIZERS_HPP
#define STELLATE_RECOGNIZERS_HPP

#include <array>
#include <optional>
#include <vector>

#include "stellate/families.hpp"
#include "stellate/graph.hpp"

namespace stellate {

inline constexpr long long kDefaultSearchSteps = 50'000'000;
inline constexpr int kDefaultPerfectOrderCap = 9;
inline constexpr int kDefaultCutsetCap = 16;
inline constexpr int kDefaultGspCap = 12;

enum class Parity { any, odd, even };

struct HoleCertificate {
    std::vector<int> cycle; // vertices in cyclic order
    int length() const { return static_cast<int>(cycle.size()); }
    bool odd() const { return length() % 2 == 1; }
};

// First chordless cycle of length >= min_len with the requested parity,
// deterministic search order.
std::optional<HoleCertificate> find_hole(const Graph& g, Parity parity = Parity::any,
                                         int min_len = 4, long long budget = kDefaultSearchSteps);

// Antihole = hole of length >= 5 in the complement; the certificate lists the
// cycle of the complement.
std::optional<HoleCertificate> find_antihole(const Graph& g, Parity parity = Parity::any,
                                             long long budget = kDefaultSearchSteps);

struct StretcherEmbedding {
    StretcherSpec spec;
    std::vector<int> map; // host vertex for i1..i_2s, j1..j_2t, k1..k_2u in layout order
};

// First induced stretcher G_{s,t,u} (two disjoint triangles linked by three
// odd paths), any s,t,u >= 1.
std::optional<StretcherEmbedding> find_odd_stretcher(const Graph& g,
                                                     long long budget = kDefaultSearchSteps);

struct MeynielResult {
    bool meyniel = false;
    std::vector<int> cycle; // when !meyniel: an odd cycle >= 5 with <= 1 chord
    int chord_count = 0;
};
MeynielResult is_meyniel(const Graph& g, long long budget = kDefaultSearchSteps);

struct PerfectnessResult {
    bool perfect = false;
    std::optional<HoleCertificate> odd_hole;
    std::optional<HoleCertificate> odd_antihole;
};
// Strong-perfect-graph-theorem test: perfect iff no odd hole and no odd antihole.
PerfectnessResult is_perfect(const Graph& g, long long budget = kDefaultSearchSteps);

struct PerfectOrdering {
    std::vector<int> order; // order[p] = vertex at position p
};

// nullopt when the ordering is perfect; otherwise an induced path a-b-c-d with
// a before b and d before c.
std::optional<std::array<int, 4>> verify_perfect_ordering(const Graph& g, const PerfectOrdering& po);

// Verified perfect ordering, or nullopt when provably none exists.  Fast paths
// for bipartite, chordal and co-chordal inputs work at any size; the exhaustive
// fallback is capped at `cap` vertices (budget_error beyond).
std::optional<PerfectOrdering> find_perfect_ordering(const Graph& g, int cap = kDefaultPerfectOrderCap);

bool is_chordal(const Graph& g);
// Perfect elimination ordering, or nullopt if none (ordered as eliminated).
std::optional<std::vector<int>> chordal_peo(const Graph& g);

struct EvenPairResult {
    bool even_pair = false;
    std::vector<int> odd_path; // when !even_pair: a chordless x-y path with oddly many edges
};
// x, y must be distinct; an adjacent pair is never an even pair (its certificate
// is the one-edge path).
EvenPairResult is_even_pair(const Graph& g, int x, int y, long long budget = kDefaultSearchSteps);

struct CliqueCutsetSplit {
    vset cutset = 0;
    vset side_a = 0; // one component of G - cutset
    vset side_b = 0; // the remaining vertices
};
// Smallest clique whose removal disconnects g (ties broken by bitmask), for
// connected g; nullopt when no clique cutset exists.
std::optional<CliqueCutsetSplit> find_clique_cutset(const Graph& g, int cap = kDefaultCutsetCap);

struct GeneralizedSplitPartition {
    bool on_complement = false;
    vset c0 = 0;
    std::vector<vset> cliques; // pairwise non-adjacent cliques covering V \ c0
};
std::optional<GeneralizedSplitPartition> is_generalized_split(const Graph& g, int cap = kDefaultGspCap);

// First stable set meeting every maximal clique (contains `anchor` when >= 0),
// in the canonical stable-set order; nullopt when none exists.
std::optional<vset> find_dominating_stable_set(const Graph& g, int anchor = -1,
                                               int stable_set_cap = 20000);

} // namespace stellate

#endif
