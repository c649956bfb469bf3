#include "stellate/recognizers.hpp"

#include <algorithm>

#include "stellate/errors.hpp"
#include "stellate/stable_sets.hpp"

namespace stellate {

namespace {

struct StepCounter {
    long long left;
    void tick() {
        if (--left < 0) throw budget_error("search step budget exceeded");
    }
};

bool parity_ok(Parity p, int len) {
    if (p == Parity::odd) return len % 2 == 1;
    if (p == Parity::even) return len % 2 == 0;
    return true;
}

struct HoleSearch {
    const Graph& g;
    Parity parity;
    int min_len;
    StepCounter steps;
    std::vector<int> path{};
    vset path_mask = 0;
    vset allowed = 0;
    std::optional<HoleCertificate> found{};

    bool dfs() {
        int a = path[0], last = path.back();
        vset cand = g.neighbors(last) & allowed & ~path_mask;
        while (cand) {
            int w = lowest_bit(cand);
            cand &= cand - 1;
            steps.tick();
            vset others = g.neighbors(w) & path_mask & ~bit(last) & ~bit(a);
            if (others) continue; // chord to a path interior, dead in every role
            if (path.size() >= 2 && g.adjacent(w, a)) {
                if (path.size() < 3) continue; // a triangle, and w-a would chord any extension
                int len = static_cast<int>(path.size()) + 1;
                // each hole is reported once: traverse in the direction where the
                // successor of the anchor is smaller than its predecessor
                if (len >= min_len && len >= 4 && parity_ok(parity, len) && path[1] < w) {
                    auto cycle = path;
                    cycle.push_back(w);
                    found = HoleCertificate{std::move(cycle)};
                    return true;
                }
                continue; // extending past w would leave the chord w-a
            }
            path.push_back(w);
            path_mask |= bit(w);
            bool hit = dfs();
            path.pop_back();
            path_mask &= ~bit(w);
            if (hit) return true;
        }
        return false;
    }
};

} // namespace

std::optional<HoleCertificate> find_hole(const Graph& g, Parity parity, int min_len, long long budget) {
    HoleSearch hs{g, parity, std::max(min_len, 4), StepCounter{budget}};
    for (int a = 0; a < g.n(); ++a) {
        hs.allowed = g.vertices() & ~full_set(a + 1); // vertices > a only
        hs.path = {a};
        hs.path_mask = bit(a);
        if (hs.dfs()) return hs.found;
    }
    return std::nullopt;
}

std::optional<HoleCertificate> find_antihole(const Graph& g, Parity parity, long long budget) {
    return find_hole(complement(g), parity, 5, budget);
}

namespace {

struct StretcherSearch {
    const Graph& g;
    StepCounter steps;
    std::array<int, 3> t1{}, t2{};
    vset placed = 0;
    std::array<std::vector<int>, 3> paths{};
    std::optional<StretcherEmbedding> found{};

    // grow the interior of path `pi` from its last vertex toward target, then
    // move on to the next path / finish
    bool grow(int pi) {
        int target = t2[static_cast<std::size_t>(pi)];
        int cur = paths[static_cast<std::size_t>(pi)].back();
        vset cand = g.neighbors(cur) & ~placed;
        while (cand) {
            int w = lowest_bit(cand);
            cand &= cand - 1;
            steps.tick();
            vset bad = g.neighbors(w) & placed & ~bit(cur) & ~bit(target);
            if (bad) continue;
            bool adj_target = g.adjacent(w, target);
            int interiors = static_cast<int>(paths[static_cast<std::size_t>(pi)].size()); // incl. endpoint start
            // interiors so far = size-1; adding w makes it `interiors`
            if (adj_target) {
                if ((interiors - 0) % 2 == 1) continue; // vertex count would be odd
                paths[static_cast<std::size_t>(pi)].push_back(w);
                placed |= bit(w);
                paths[static_cast<std::size_t>(pi)].push_back(target);
                bool hit = next_path(pi);
                paths[static_cast<std::size_t>(pi)].pop_back();
                placed &= ~bit(w);
                paths[static_cast<std::size_t>(pi)].pop_back();
                if (hit) return true;
                continue;
            }
            paths[static_cast<std::size_t>(pi)].push_back(w);
            placed |= bit(w);
            bool hit = grow(pi);
            placed &= ~bit(w);
            paths[static_cast<std::size_t>(pi)].pop_back();
            if (hit) return true;
        }
        return false;
    }

    bool start_path(int pi) {
        int from = t1[static_cast<std::size_t>(pi)], to = t2[static_cast<std::size_t>(pi)];
        if (g.adjacent(from, to)) {
            // the direct edge: this path is exactly (from, to)
            paths[static_cast<std::size_t>(pi)] = {from, to};
            return next_path(pi);
        }
        paths[static_cast<std::size_t>(pi)] = {from};
        return grow(pi);
    }

    bool next_path(int pi) {
        if (pi == 2) return emit();
        return start_path(pi + 1);
    }

    bool emit() {
        StretcherEmbedding e;
        e.spec = {static_cast<int>(paths[0].size()) / 2, static_cast<int>(paths[1].size()) / 2,
                  static_cast<int>(paths[2].size()) / 2};
        for (const auto& p : paths) e.map.insert(e.map.end(), p.begin(), p.end());
        found = e;
        return true;
    }
};

} // namespace

std::optional<StretcherEmbedding> find_odd_stretcher(const Graph& g, long long budget) {
    std::vector<std::array<int, 3>> triangles;
    for (int a = 0; a < g.n(); ++a)
        for_each_bit(g.neighbors(a) & ~full_set(a + 1), [&](int b) {
            for_each_bit(g.neighbors(a) & g.neighbors(b) & ~full_set(b + 1),
                         [&](int c) { triangles.push_back({a, b, c}); });
        });

    StretcherSearch ss{g, StepCounter{budget}};
    static constexpr int kPerm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (std::size_t x = 0; x < triangles.size(); ++x) {
        for (std::size_t y = x + 1; y < triangles.size(); ++y) {
            vset m1 = vector_to_set({triangles[x][0], triangles[x][1], triangles[x][2]});
            vset m2 = vector_to_set({triangles[y][0], triangles[y][1], triangles[y][2]});
            if (m1 & m2) continue;
            for (const auto& perm : kPerm) {
                ss.steps.tick();
                ss.t1 = triangles[x];
                for (int i = 0; i < 3; ++i) ss.t2[static_cast<std::size_t>(i)] = triangles[y][perm[i]];
                // cross edges other than the matched pairs kill the embedding
                bool ok = true;
                for (int i = 0; i < 3 && ok; ++i)
                    for (int j = 0; j < 3 && ok; ++j)
                        if (i != j && g.adjacent(ss.t1[static_cast<std::size_t>(i)], ss.t2[static_cast<std::size_t>(j)]))
                            ok = false;
                if (!ok) continue;
                ss.placed = m1 | m2;
                if (ss.start_path(0)) return ss.found;
            }
        }
    }
    return std::nullopt;
}

namespace {

struct MeynielSearch {
    const Graph& g;
    StepCounter steps;
    std::vector<int> path{};
    vset path_mask = 0;
    vset allowed = 0;
    int chord_other = 0; // chords among path vertices, anchor excluded
    int a_adj = 0;       // path vertices at position >= 2 adjacent to the anchor
    MeynielResult violation{};

    bool dfs() {
        int a = path[0], last = path.back();
        vset cand = g.neighbors(last) & allowed & ~path_mask;
        while (cand) {
            int w = lowest_bit(cand);
            cand &= cand - 1;
            steps.tick();
            int new_chords = popcount(g.neighbors(w) & path_mask & ~bit(last) & ~bit(a));
            bool adj_a = g.adjacent(w, a);
            int pos = static_cast<int>(path.size()); // w's position if appended
            int next_a_adj = a_adj + ((adj_a && pos >= 2) ? 1 : 0);
            int next_chords = chord_other + new_chords;
            if (next_chords + std::max(0, next_a_adj - 1) >= 2) continue; // can't stay under 2 chords
            if (adj_a && pos >= 4) {
                int len = pos + 1;
                int total = next_chords + (next_a_adj - 1);
                if (len % 2 == 1 && total <= 1) {
                    auto cycle = path;
                    cycle.push_back(w);
                    violation = MeynielResult{false, std::move(cycle), total};
                    return true;
                }
            }
            path.push_back(w);
            path_mask |= bit(w);
            std::swap(chord_other, next_chords);
            std::swap(a_adj, next_a_adj);
            bool hit = dfs();
            std::swap(a_adj, next_a_adj);
            std::swap(chord_other, next_chords);
            path.pop_back();
            path_mask &= ~bit(w);
            if (hit) return true;
        }
        return false;
    }
};

} // namespace

MeynielResult is_meyniel(const Graph& g, long long budget) {
    MeynielSearch ms{g, StepCounter{budget}};
    for (int a = 0; a < g.n(); ++a) {
        ms.allowed = g.vertices() & ~full_set(a + 1);
        ms.path = {a};
        ms.path_mask = bit(a);
        ms.chord_other = 0;
        ms.a_adj = 0;
        if (ms.dfs()) return ms.violation;
    }
    return MeynielResult{true, {}, 0};
}

PerfectnessResult is_perfect(const Graph& g, long long budget) {
    PerfectnessResult r;
    r.odd_hole = find_hole(g, Parity::odd, 5, budget);
    r.odd_antihole = find_antihole(g, Parity::odd, budget);
    r.perfect = !r.odd_hole && !r.odd_antihole;
    return r;
}

namespace {

// all induced paths a-b-c-d, one orientation each (a < d)
std::vector<std::array<int, 4>> induced_p4s(const Graph& g) {
    std::vector<std::array<int, 4>> out;
    for (int b = 0; b < g.n(); ++b)
        for_each_bit(g.neighbors(b), [&](int c) {
            vset as = g.neighbors(b) & ~g.neighbors(c) & ~bit(c);
            vset ds = g.neighbors(c) & ~g.neighbors(b) & ~bit(b);
            for_each_bit(as, [&](int a) {
                for_each_bit(ds & ~g.neighbors(a) & ~full_set(a + 1),
                             [&](int d) { out.push_back({a, b, c, d}); });
            });
        });
    return out;
}

} // namespace

std::optional<std::array<int, 4>> verify_perfect_ordering(const Graph& g, const PerfectOrdering& po) {
    if (static_cast<int>(po.order.size()) != g.n())
        throw input_error("ordering must list every vertex exactly once");
    std::vector<int> pos(static_cast<std::size_t>(g.n()), -1);
    for (int p = 0; p < g.n(); ++p) {
        int v = po.order[static_cast<std::size_t>(p)];
        if (v < 0 || v >= g.n() || pos[static_cast<std::size_t>(v)] != -1)
            throw input_error("ordering must list every vertex exactly once");
        pos[static_cast<std::size_t>(v)] = p;
    }
    for (const auto& [a, b, c, d] : induced_p4s(g)) {
        // obstruction: a-b-c-d with a before b and d before c (same test read
        // backwards covers the reversed orientation)
        if (pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)] &&
            pos[static_cast<std::size_t>(d)] < pos[static_cast<std::size_t>(c)])
            return std::array<int, 4>{a, b, c, d};
    }
    return std::nullopt;
}

std::optional<std::vector<int>> chordal_peo(const Graph& g) {
    std::vector<int> peo;
    vset rest = g.vertices();
    while (rest) {
        int pick = -1;
        vset scan = rest;
        while (scan && pick == -1) {
            int v = lowest_bit(scan);
            scan &= scan - 1;
            if (is_clique(g, g.neighbors(v) & rest & ~bit(v))) pick = v;
        }
        if (pick == -1) return std::nullopt;
        peo.push_back(pick);
        rest &= ~bit(pick);
    }
    return peo;
}

bool is_chordal(const Graph& g) { return chordal_peo(g).has_value(); }

namespace {

struct OrderBacktrack {
    const Graph& g;
    const std::vector<std::array<int, 4>>& p4s;
    std::vector<std::vector<int>> touching; // p4 indices per vertex
    std::vector<int> pos;                   // -1 while unplaced
    std::vector<int> order;

    bool certain(int u, int v) const {
        // will pos[u] < pos[v] hold no matter how the order is completed?
        int pu = pos[static_cast<std::size_t>(u)], pv = pos[static_cast<std::size_t>(v)];
        if (pu != -1 && pv != -1) return pu < pv;
        return pu != -1; // placed before unplaced
    }

    bool obstruction_certain(const std::array<int, 4>& q) const {
        return certain(q[0], q[1]) && certain(q[3], q[2]);
    }

    bool place(int depth) {
        if (depth == g.n()) return true;
        for (int v = 0; v < g.n(); ++v) {
            if (pos[static_cast<std::size_t>(v)] != -1) continue;
            pos[static_cast<std::size_t>(v)] = depth;
            order.push_back(v);
            bool ok = true;
            for (int qi : touching[static_cast<std::size_t>(v)])
                if (obstruction_certain(p4s[static_cast<std::size_t>(qi)])) {
                    ok = false;
                    break;
                }
            if (ok && place(depth + 1)) return true;
            pos[static_cast<std::size_t>(v)] = -1;
            order.pop_back();
        }
        return false;
    }
};

std::optional<PerfectOrdering> try_order(const Graph& g, std::vector<int> order) {
    PerfectOrdering po{std::move(order)};
    if (!verify_perfect_ordering(g, po)) return po;
    return std::nullopt;
}

} // namespace

std::optional<PerfectOrdering> find_perfect_ordering(const Graph& g, int cap) {
    if (g.n() == 0) return PerfectOrdering{};

    std::vector<int> side;
    if (is_bipartite(g, &side)) {
        // one side first is always perfect for bipartite graphs
        std::vector<int> order;
        for (int v = 0; v < g.n(); ++v)
            if (side[static_cast<std::size_t>(v)] == 0) order.push_back(v);
        for (int v = 0; v < g.n(); ++v)
            if (side[static_cast<std::size_t>(v)] != 0) order.push_back(v);
        if (auto po = try_order(g, std::move(order))) return po;
    }
    if (auto peo = chordal_peo(g)) {
        // reversed perfect elimination ordering
        std::reverse(peo->begin(), peo->end());
        if (auto po = try_order(g, std::move(*peo))) return po;
    }
    if (auto peo = chordal_peo(complement(g))) {
        // an elimination ordering of the complement, forward
        if (auto po = try_order(g, std::move(*peo))) return po;
    }

    if (g.n() > cap)
        throw budget_error("perfect-ordering search capped at " + std::to_string(cap) +
                           " vertices and no structural shortcut applied");

    auto p4s = induced_p4s(g);
    OrderBacktrack bt{g, p4s, {}, std::vector<int>(static_cast<std::size_t>(g.n()), -1), {}};
    bt.touching.resize(static_cast<std::size_t>(g.n()));
    for (std::size_t qi = 0; qi < p4s.size(); ++qi)
        for (int v : p4s[qi]) bt.touching[static_cast<std::size_t>(v)].push_back(static_cast<int>(qi));
    if (bt.place(0)) return PerfectOrdering{bt.order};
    return std::nullopt;
}

EvenPairResult is_even_pair(const Graph& g, int x, int y, long long budget) {
    if (x == y || x < 0 || y < 0 || x >= g.n() || y >= g.n())
        throw input_error("even-pair test needs two distinct vertices");
    if (g.adjacent(x, y)) return {false, {x, y}};

    StepCounter steps{budget};
    std::vector<int> path{x};
    vset path_mask = bit(x);
    EvenPairResult result{true, {}};

    auto dfs = [&](auto&& self, int last) -> bool {
        vset cand = g.neighbors(last) & ~path_mask;
        while (cand) {
            int w = lowest_bit(cand);
            cand &= cand - 1;
            steps.tick();
            vset others = g.neighbors(w) & path_mask & ~bit(last);
            if (others) continue; // not an induced path
            if (w == y) {
                if (path.size() % 2 == 1) { // edges = |path|, odd
                    auto odd = path;
                    odd.push_back(y);
                    result = {false, std::move(odd)};
                    return true;
                }
                continue;
            }
            path.push_back(w);
            path_mask |= bit(w);
            bool hit = self(self, w);
            path.pop_back();
            path_mask &= ~bit(w);
            if (hit) return true;
        }
        return false;
    };
    dfs(dfs, x);
    return result;
}

std::optional<CliqueCutsetSplit> find_clique_cutset(const Graph& g, int cap) {
    if (g.n() > cap)
        throw budget_error("clique-cutset search capped at " + std::to_string(cap) + " vertices");
    if (g.n() == 0) return std::nullopt;
    if (!is_connected(g))
        throw input_error("clique-cutset search expects a connected graph; split into components first");

    std::vector<vset> cliques;
    auto extend = [&](auto&& self, vset cur, vset candidates) -> void {
        while (candidates) {
            int v = lowest_bit(candidates);
            candidates &= candidates - 1;
            vset next = cur | bit(v);
            cliques.push_back(next);
            self(self, next, candidates & g.neighbors(v));
        }
    };
    extend(extend, 0, g.vertices());
    std::sort(cliques.begin(), cliques.end(), [](vset a, vset b) {
        int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    for (vset c : cliques) {
        vset rest = g.vertices() & ~c;
        if (!rest) continue;
        auto sub = induced_subgraph(g, rest);
        auto comps = connected_components(sub.graph);
        if (comps.size() < 2) continue;
        vset side_a = 0;
        for_each_bit(comps[0], [&](int v) { side_a |= bit(sub.vertex_map[static_cast<std::size_t>(v)]); });
        return CliqueCutsetSplit{c, side_a, rest & ~side_a};
    }
    return std::nullopt;
}

namespace {

std::optional<GeneralizedSplitPartition> gsp_side(const Graph& g, bool on_complement) {
    std::vector<vset> cliques{0};
    auto extend = [&](auto&& self, vset cur, vset candidates) -> void {
        while (candidates) {
            int v = lowest_bit(candidates);
            candidates &= candidates - 1;
            vset next = cur | bit(v);
            cliques.push_back(next);
            self(self, next, candidates & g.neighbors(v));
        }
    };
    extend(extend, 0, g.vertices());
    std::sort(cliques.begin(), cliques.end(), [](vset a, vset b) {
        int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa > pb : a < b; // big C0 first
    });

    for (vset c0 : cliques) {
        vset rest = g.vertices() & ~c0;
        auto sub = induced_subgraph(g, rest);
        auto comps = connected_components(sub.graph);
        bool ok = true;
        std::vector<vset> parts;
        for (vset comp : comps) {
            if (!is_clique(sub.graph, comp)) {
                ok = false;
                break;
            }
            vset orig = 0;
            for_each_bit(comp, [&](int v) { orig |= bit(sub.vertex_map[static_cast<std::size_t>(v)]); });
            parts.push_back(orig);
        }
        if (ok) return GeneralizedSplitPartition{on_complement, c0, std::move(parts)};
    }
    return std::nullopt;
}

} // namespace

std::optional<GeneralizedSplitPartition> is_generalized_split(const Graph& g, int cap) {
    if (g.n() > cap)
        throw budget_error("generalized-split search capped at " + std::to_string(cap) + " vertices");
    if (auto p = gsp_side(g, false)) return p;
    return gsp_side(complement(g), true);
}

std::optional<vset> find_dominating_stable_set(const Graph& g, int anchor, int stable_set_cap) {
    auto cliques = enumerate_maximal_cliques(g);
    auto idx = enumerate_stable_sets(g, stable_set_cap);
    for (vset s : idx.sets) {
        if (anchor >= 0 && !has_bit(s, anchor)) continue;
        bool dominating = true;
        for (vset c : cliques)
            if (!(c & s)) {
                dominating = false;
                break;
            }
        if (dominating) return s;
    }
    return std::nullopt;
}

} // namespace stellate
