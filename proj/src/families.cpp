#include "stellate/families.hpp"

#include <algorithm>
#include <string>

#include "stellate/errors.hpp"
#include "stellate/recognizers.hpp"
#include "stellate/stable_sets.hpp"

namespace stellate {

namespace {

void check_spec(const StretcherSpec& spec) {
    if (spec.s < 1 || spec.t < 1 || spec.u < 1)
        throw input_error("stretcher parameters must satisfy s,t,u >= 1");
    if (2 * (spec.s + spec.t + spec.u) > 64)
        throw input_error("stretcher exceeds the 64-vertex limit");
}

} // namespace

Graph odd_stretcher(const StretcherSpec& spec) {
    check_spec(spec);
    const int s = spec.s, t = spec.t, u = spec.u;
    const int oi = 0, oj = 2 * s, ok = 2 * s + 2 * t;
    Graph g(2 * (s + t + u));
    // the two triangles
    g.add_edge(oi, oj);
    g.add_edge(oi, ok);
    g.add_edge(oj, ok);
    g.add_edge(oi + 2 * s - 1, oj + 2 * t - 1);
    g.add_edge(oi + 2 * s - 1, ok + 2 * u - 1);
    g.add_edge(oj + 2 * t - 1, ok + 2 * u - 1);
    // the three paths
    for (int p = 1; p < 2 * s; ++p) g.add_edge(oi + p - 1, oi + p);
    for (int p = 1; p < 2 * t; ++p) g.add_edge(oj + p - 1, oj + p);
    for (int p = 1; p < 2 * u; ++p) g.add_edge(ok + p - 1, ok + p);

    std::vector<std::string> labels;
    for (int p = 1; p <= 2 * s; ++p) labels.push_back("i" + std::to_string(p));
    for (int p = 1; p <= 2 * t; ++p) labels.push_back("j" + std::to_string(p));
    for (int p = 1; p <= 2 * u; ++p) labels.push_back("k" + std::to_string(p));
    g.set_labels(std::move(labels));
    return g;
}

std::array<vset, 6> stretcher_witness_sets(const StretcherSpec& spec) {
    check_spec(spec);
    const int s = spec.s, t = spec.t, u = spec.u;
    const int oi = 0, oj = 2 * s, ok = 2 * s + 2 * t;
    // range(offset, first, last): vertices x_first, x_first+2, ..., x_last (1-based
    // within the path); empty when last < first.
    auto range = [](int offset, int first, int last) {
        vset out = 0;
        for (int p = first; p <= last; p += 2) out |= bit(offset + p - 1);
        return out;
    };
    std::array<vset, 6> w{};
    w[0] = range(oi, 1, 2 * s - 1) | range(oj, 2, 2 * t) | range(ok, 2, 2 * u - 2);
    w[1] = range(oi, 2, 2 * s - 2) | range(oj, 1, 2 * t - 1) | range(ok, 2, 2 * u);
    w[2] = range(oi, 2, 2 * s) | range(oj, 2, 2 * t - 2) | range(ok, 1, 2 * u - 1);
    w[3] = range(oi, 1, 2 * s - 1) | range(oj, 2, 2 * t - 2) | range(ok, 2, 2 * u);
    w[4] = range(oi, 2, 2 * s) | range(oj, 1, 2 * t - 1) | range(ok, 2, 2 * u - 2);
    w[5] = range(oi, 2, 2 * s - 2) | range(oj, 2, 2 * t) | range(ok, 1, 2 * u - 1);
    return w;
}

Graph hole(int k) {
    if (k < 3) throw input_error("a cycle needs at least 3 vertices");
    if (k > 64) throw input_error("cycle exceeds the 64-vertex limit");
    Graph g(k);
    for (int v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
    return g;
}

Graph antihole(int k) {
    if (k < 5) throw input_error("antihole needs at least 5 vertices, got " + std::to_string(k));
    return complement(hole(k));
}

Graph join(const Graph& a, const Graph& b) {
    if (a.n() + b.n() > 64) throw input_error("join exceeds the 64-vertex limit");
    Graph g(a.n() + b.n());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.n() + u, a.n() + v);
    for (int u = 0; u < a.n(); ++u)
        for (int v = 0; v < b.n(); ++v) g.add_edge(u, a.n() + v);
    return g;
}

Graph glue_along_clique(const Graph& h1, const Graph& h2,
                        const std::vector<std::pair<int, int>>& identify) {
    vset c1 = 0, c2 = 0;
    for (auto [v1, v2] : identify) {
        if (v1 < 0 || v1 >= h1.n() || v2 < 0 || v2 >= h2.n())
            throw input_error("glue: identified vertex out of range");
        if (has_bit(c1, v1) || has_bit(c2, v2)) throw input_error("glue: vertex identified twice");
        c1 |= bit(v1);
        c2 |= bit(v2);
    }
    if (!is_clique(h1, c1) || !is_clique(h2, c2))
        throw input_error("glue: identified vertices must form a clique in both graphs");

    const int k = static_cast<int>(identify.size());
    if (h1.n() + h2.n() - k > 64) throw input_error("glue exceeds the 64-vertex limit");
    std::vector<int> map2(static_cast<std::size_t>(h2.n()), -1);
    for (auto [v1, v2] : identify) map2[static_cast<std::size_t>(v2)] = v1;
    int next = h1.n();
    for (int v = 0; v < h2.n(); ++v)
        if (map2[static_cast<std::size_t>(v)] == -1) map2[static_cast<std::size_t>(v)] = next++;

    Graph g(h1.n() + h2.n() - k);
    for (auto [u, v] : h1.edges()) g.add_edge(u, v);
    for (auto [u, v] : h2.edges()) {
        int a = map2[static_cast<std::size_t>(u)], b = map2[static_cast<std::size_t>(v)];
        if (!g.adjacent(a, b)) g.add_edge(a, b);
    }
    return g;
}

Graph type1(const Graph& bipartite_part, int clique_size) {
    if (bipartite_part.n() <= 3)
        throw input_error("type 1 requires a bipartite part with more than 3 vertices");
    if (!is_bipartite(bipartite_part)) throw input_error("type 1 requires a bipartite part");
    if (clique_size < 0) throw input_error("type 1 clique size must be nonnegative");
    Graph clique(clique_size);
    for (int u = 0; u < clique_size; ++u)
        for (int v = u + 1; v < clique_size; ++v) clique.add_edge(u, v);
    return join(bipartite_part, clique);
}

Graph type2(const std::vector<int>& part_sizes) {
    if (part_sizes.empty()) throw input_error("type 2 needs at least one part");
    int n = 0;
    for (int p : part_sizes) {
        if (p < 1) throw input_error("type 2 part sizes must be positive");
        n += p;
    }
    if (n > 64) throw input_error("type 2 graph exceeds the 64-vertex limit");
    Graph g(n);
    std::vector<int> part;
    for (std::size_t i = 0; i < part_sizes.size(); ++i)
        for (int p = 0; p < part_sizes[i]; ++p) part.push_back(static_cast<int>(i));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)]) g.add_edge(u, v);
    return g;
}

bool is_type1(const Graph& g) {
    int n = g.n();
    if (n <= 3) return false;
    vset universal = 0;
    for (int v = 0; v < n; ++v)
        if ((g.neighbors(v) | bit(v)) == g.vertices()) universal |= bit(v);
    // Universal vertices are interchangeable, so only how many are peeled off
    // into the complete part matters; peeling more keeps the rest bipartite.
    std::vector<int> peel = set_to_vector(universal);
    for (int j = 0; j <= static_cast<int>(peel.size()); ++j) {
        if (n - j <= 3) break;
        vset kept = g.vertices();
        for (int i = 0; i < j; ++i) kept &= ~bit(peel[static_cast<std::size_t>(i)]);
        if (is_bipartite(induced_subgraph(g, kept).graph)) return true;
    }
    return false;
}

bool is_type2(const Graph& g) {
    // Complete multipartite <=> the complement splits into disjoint cliques.
    Graph co = complement(g);
    for (vset comp : connected_components(co))
        if (!is_clique(co, comp)) return false;
    return g.n() > 0;
}

namespace {

Graph random_type1_or_2(std::mt19937_64& rng, int max_n) {
    if (rand_below(rng, 2) == 0) {
        int bn = 4 + static_cast<int>(rand_below(rng, std::max(1, max_n - 4)));
        bn = std::min(bn, std::max(4, max_n - 1));
        Graph b = random_family(FamilyKind::bipartite, bn, rng());
        int cs = 1 + static_cast<int>(rand_below(rng, std::max(1, max_n - bn)));
        return type1(b, cs);
    }
    int parts = 1 + static_cast<int>(rand_below(rng, 4));
    std::vector<int> sizes;
    int total = 0;
    for (int i = 0; i < parts && total < max_n; ++i) {
        int p = 1 + static_cast<int>(rand_below(rng, std::max(1, (max_n - total) / (parts - i))));
        sizes.push_back(p);
        total += p;
    }
    return type2(sizes);
}

vset random_clique_of_size(const Graph& g, int k, std::mt19937_64& rng) {
    auto cliques = enumerate_maximal_cliques(g);
    std::vector<vset> big;
    for (vset c : cliques)
        if (popcount(c) >= k) big.push_back(c);
    if (big.empty()) return 0;
    vset c = big[rand_below(rng, big.size())];
    // shrink to exactly k vertices, dropping random members
    while (popcount(c) > k) {
        auto vs = set_to_vector(c);
        c &= ~bit(vs[rand_below(rng, vs.size())]);
    }
    return c;
}

} // namespace

Graph clique_separable_sample(std::mt19937_64& rng, int target_n) {
    Graph g = random_type1_or_2(rng, std::max(4, target_n / 2 + 2));
    int guard = 0;
    while (g.n() < target_n && guard++ < 8) {
        Graph h = random_type1_or_2(rng, std::max(4, target_n - g.n() + 2));
        int k = 1 + static_cast<int>(rand_below(rng, 2));
        k = std::min({k, clique_number(g), clique_number(h)});
        if (k < 1) break;
        vset c1 = random_clique_of_size(g, k, rng);
        vset c2 = random_clique_of_size(h, k, rng);
        if (!c1 || !c2) break;
        auto v1 = set_to_vector(c1), v2 = set_to_vector(c2);
        std::vector<std::pair<int, int>> identify;
        for (int i = 0; i < k; ++i) identify.emplace_back(v1[static_cast<std::size_t>(i)], v2[static_cast<std::size_t>(i)]);
        if (g.n() + h.n() - k > 64) break;
        g = glue_along_clique(g, h, identify);
    }
    return g;
}

namespace {

Graph random_chordal(int n, std::mt19937_64& rng) {
    // attach each new vertex to a clique among the earlier vertices; graphs built
    // from simplicial attachments are exactly the chordal graphs
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        int u = static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(v)));
        vset c = bit(u);
        vset candidates = g.neighbors(u) & full_set(v);
        while (candidates && rand_unit(rng) < 0.6) {
            auto vs = set_to_vector(candidates);
            int w = vs[rand_below(rng, vs.size())];
            c |= bit(w);
            candidates &= g.neighbors(w);
        }
        for_each_bit(c, [&](int w) { g.add_edge(v, w); });
    }
    return g;
}

Graph random_bipartite(int n, std::mt19937_64& rng) {
    int a = 1 + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(std::max(1, n - 1))));
    // vertices 0..a-1 on one side, a..n-1 on the other; a spanning tree first
    Graph g(n);
    if (a == n) a = n - 1;
    if (a < 1) a = 1;
    double p = 0.2 + 0.6 * rand_unit(rng);
    for (int v = a; v < n; ++v) g.add_edge(v, static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(a))));
    for (int u = 1; u < a; ++u) g.add_edge(u, a + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(n - a))));
    for (int u = 0; u < a; ++u)
        for (int v = a; v < n; ++v)
            if (!g.adjacent(u, v) && rand_unit(rng) < p) g.add_edge(u, v);
    return g;
}

Graph random_connected(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rand_unit(rng) < p) g.add_edge(u, v);
    return g;
}

Graph random_comparability(int n, std::mt19937_64& rng) {
    // intersection of two random linear orders = a 2-dimensional poset; its
    // comparability graph, connectivity enforced by the caller's retry loop
    std::vector<int> p1(static_cast<std::size_t>(n)), p2(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p1[static_cast<std::size_t>(i)] = p2[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) {
        std::swap(p1[static_cast<std::size_t>(i)], p1[rand_below(rng, static_cast<std::uint64_t>(i + 1))]);
        std::swap(p2[static_cast<std::size_t>(i)], p2[rand_below(rng, static_cast<std::uint64_t>(i + 1))]);
    }
    std::vector<int> r1(static_cast<std::size_t>(n)), r2(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        r1[static_cast<std::size_t>(p1[static_cast<std::size_t>(i)])] = i;
        r2[static_cast<std::size_t>(p2[static_cast<std::size_t>(i)])] = i;
    }
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool uv = r1[static_cast<std::size_t>(u)] < r1[static_cast<std::size_t>(v)] &&
                      r2[static_cast<std::size_t>(u)] < r2[static_cast<std::size_t>(v)];
            bool vu = r1[static_cast<std::size_t>(v)] < r1[static_cast<std::size_t>(u)] &&
                      r2[static_cast<std::size_t>(v)] < r2[static_cast<std::size_t>(u)];
            if (uv || vu) g.add_edge(u, v);
        }
    return g;
}

bool family_member(FamilyKind kind, const Graph& g) {
    switch (kind) {
        case FamilyKind::chordal: return is_chordal(g);
        case FamilyKind::bipartite: return is_bipartite(g);
        case FamilyKind::meyniel: return is_meyniel(g).meyniel;
        case FamilyKind::comparability: return true; // correct by construction
    }
    return false;
}

} // namespace

Graph random_family(FamilyKind kind, int n, std::uint64_t seed) {
    if (n < 1 || n > 64) throw input_error("random family size must be between 1 and 64");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 20000; ++attempt) {
        Graph g;
        switch (kind) {
            case FamilyKind::chordal: g = random_chordal(n, rng); break;
            case FamilyKind::bipartite: g = random_bipartite(n, rng); break;
            case FamilyKind::meyniel: g = random_connected(n, 0.25 + 0.5 * rand_unit(rng), rng); break;
            case FamilyKind::comparability: g = random_comparability(n, rng); break;
        }
        if (!is_connected(g)) continue;
        if (!family_member(kind, g)) continue;
        return g;
    }
    throw budget_error("random family sampling did not converge");
}

} // namespace stellate
