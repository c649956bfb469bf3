#ifndef STELLATE_FAMILIES_HPP
#define STELLATE_FAMILIES_HPP

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "stellate/graph.hpp"

namespace stellate {

struct StretcherSpec {
    int s = 1, t = 1, u = 1;
};

// The stretcher G_{s,t,u}: two triangles (i1,j1,k1) and (i_2s,j_2t,k_2u) linked
// by three vertex paths of even vertex counts 2s, 2t, 2u.  Vertices are laid out
// i1..i_{2s}, j1..j_{2t}, k1..k_{2u} and labeled accordingly.
Graph odd_stretcher(const StretcherSpec& spec);

// The six maximum stable sets S_1..S_6 witnessing the cubic relation
// x1 x2 x3 - x4 x5 x6 in the toric ideal of G_{s,t,u}, as bitmasks in the
// odd_stretcher vertex layout.  |S_i| = s+t+u-1 for every i.
std::array<vset, 6> stretcher_witness_sets(const StretcherSpec& spec);

Graph hole(int k);     // chordless cycle C_k, k >= 3
Graph antihole(int k); // complement of C_k, k >= 5 to be a true antihole

// Join: disjoint union plus all edges between the two parts.
Graph join(const Graph& a, const Graph& b);

// Glue h1 and h2 along a common clique: `identify[p] = {v1, v2}` identifies
// vertex v1 of h1 with vertex v2 of h2.  Both identified sets must be cliques.
Graph glue_along_clique(const Graph& h1, const Graph& h2,
                        const std::vector<std::pair<int, int>>& identify);

// Type 1: join of a bipartite graph on more than 3 vertices with a complete graph.
Graph type1(const Graph& bipartite_part, int clique_size);

// Type 2: complete multipartite graph with the given part sizes.
Graph type2(const std::vector<int>& part_sizes);

// Membership tests for the two elementary kinds above.
bool is_type1(const Graph& g);
bool is_type2(const Graph& g);

// Random clique separable graph: recursive gluings of Type 1 / Type 2 pieces.
Graph clique_separable_sample(std::mt19937_64& rng, int target_n = 10);

enum class FamilyKind { chordal, bipartite, meyniel, comparability };

// Seeded random connected graph from the named class; the class membership is
// re-verified before returning.
Graph random_family(FamilyKind kind, int n, std::uint64_t seed);

// Deterministic helpers used instead of std::uniform_* so that seeded results
// are identical across standard libraries.
inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t k) { return rng() % k; }
inline double rand_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

} // namespace stellate

#endif
