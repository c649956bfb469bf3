#ifndef STELLATE_CANONICAL_HPP
#define STELLATE_CANONICAL_HPP

#include <functional>
#include <string>

#include "stellate/graph.hpp"

namespace stellate {

inline constexpr int kDefaultCanonicalCap = 10;

// Isomorphism-invariant key (binary string): equal keys iff isomorphic graphs.
// Colour refinement plus individualization; intended for small graphs, throws
// budget_error above `cap` vertices.
std::string canonical_key(const Graph& g, int cap = kDefaultCanonicalCap);

// Calls fn once per isomorphism class of graphs on exactly n vertices (n <= 7),
// in a deterministic order.  Orbit marking over all edge masks.
void enumerate_small_graphs(int n, bool connected_only, const std::function<void(const Graph&)>& fn);

} // namespace stellate

#endif
