#ifndef STELLATE_BITS_HPP
#define STELLATE_BITS_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace stellate {

// Vertex subsets are 64-bit masks; bit v = vertex v (0-based).  Graphs are capped
// at 64 vertices which keeps every set operation a single word op.
using vset = std::uint64_t;

inline int popcount(vset s) { return std::popcount(s); }

inline int lowest_bit(vset s) { return std::countr_zero(s); }

inline vset bit(int v) { return vset{1} << v; }

inline bool has_bit(vset s, int v) { return (s >> v) & 1; }

inline vset full_set(int n) { return n == 64 ? ~vset{0} : (vset{1} << n) - 1; }

// Calls fn(v) for each set bit, ascending.
template <typename Fn>
void for_each_bit(vset s, Fn&& fn) {
    while (s) {
        int v = std::countr_zero(s);
        fn(v);
        s &= s - 1;
    }
}

inline std::vector<int> set_to_vector(vset s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(popcount(s)));
    for_each_bit(s, [&](int v) { out.push_back(v); });
    return out;
}

inline vset vector_to_set(const std::vector<int>& vs) {
    vset s = 0;
    for (int v : vs) s |= bit(v);
    return s;
}

} // namespace stellate

#endif
