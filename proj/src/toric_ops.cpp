#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "stellate/errors.hpp"
#include "stellate/toric.hpp"

namespace stellate {

namespace {

Monomial mono_of_pair(int m, int i, int j) {
    Monomial mo = Monomial::one(m);
    mo.e[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(mo.e[static_cast<std::size_t>(i)] + 1);
    mo.e[static_cast<std::size_t>(j)] = static_cast<std::int16_t>(mo.e[static_cast<std::size_t>(j)] + 1);
    mo.deg = 2;
    return mo;
}

std::vector<int> rho_of_sets(const StableSetIndex& idx, std::initializer_list<int> sets) {
    std::vector<int> rho(static_cast<std::size_t>(idx.graph.n()), 0);
    for (int s : sets)
        for_each_bit(idx.sets[static_cast<std::size_t>(s)], [&](int v) { ++rho[static_cast<std::size_t>(v)]; });
    return rho;
}

} // namespace

std::vector<Binomial> quadratic_binomials(const StableSetIndex& idx, const MonomialOrder& order) {
    const int m = idx.size();
    // bucket the degree-2 monomials x_i x_j by rho-sum
    std::map<std::vector<int>, std::vector<std::pair<int, int>>> buckets;
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) buckets[rho_of_sets(idx, {i, j})].push_back({i, j});

    std::vector<Binomial> out;
    for (const auto& [rho, pairs] : buckets) {
        for (std::size_t a = 0; a < pairs.size(); ++a)
            for (std::size_t b = a + 1; b < pairs.size(); ++b) {
                Monomial u = mono_of_pair(m, pairs[a].first, pairs[a].second);
                Monomial v = mono_of_pair(m, pairs[b].first, pairs[b].second);
                if (order.cmp(u, v) < 0) std::swap(u, v);
                out.push_back(Binomial{std::move(u), std::move(v)});
            }
    }
    return out;
}

QuadGenResult is_quadratically_generated(const StableSetIndex& idx, const ToricOptions& opts) {
    MonomialOrder order = MonomialOrder::grevlex(idx.size());
    QuadGenResult r;
    r.gb = toric_groebner(idx, order, opts);

    // closure of the quadratic part only; no saturation shortcuts are sound here
    GroebnerBasis quad_gb = buchberger_closure(quadratic_binomials(idx, order), order, opts.step_budget);

    r.quadratically_generated = true;
    for (const auto& b : r.gb.elements) {
        if (b.degree() <= 2) continue;
        if (normal_form(b, quad_gb)) {
            r.quadratically_generated = false;
            r.witness = b;
            break;
        }
    }
    return r;
}

Theorem32Setup theorem32_order(const Graph& g, const PerfectOrdering& po, int stable_set_cap) {
    if (verify_perfect_ordering(g, po))
        throw input_error("theorem32_order requires a perfect ordering");

    // renumber vertices so that the perfect order reads 0, 1, 2, ...
    std::vector<int> pos(static_cast<std::size_t>(g.n()));
    for (int p = 0; p < g.n(); ++p) pos[static_cast<std::size_t>(po.order[static_cast<std::size_t>(p)])] = p;
    Graph relabeled(g.n());
    for (auto [u, v] : g.edges())
        relabeled.add_edge(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);

    Theorem32Setup setup;
    setup.relabeled = relabeled;
    setup.vertex_map = po.order;
    setup.index = enumerate_stable_sets(relabeled, stable_set_cap);
    // sort descending by rho, lexicographically: of two distinct sets, the one
    // containing the smallest differing vertex comes first
    std::sort(setup.index.sets.begin(), setup.index.sets.end(), [](vset a, vset b) {
        vset d = a ^ b;
        return d != 0 && has_bit(a, lowest_bit(d));
    });
    setup.index.rebuild_positions();
    setup.order = MonomialOrder::grevlex(setup.index.size());
    return setup;
}

vset greedy_stable_set(const Graph& g, vset support) {
    vset kept = 0;
    for_each_bit(support, [&](int v) {
        if (!(g.neighbors(v) & kept)) kept |= bit(v);
    });
    return kept;
}

std::optional<Binomial> fij_binomial(const Theorem32Setup& setup, int i, int j) {
    const StableSetIndex& idx = setup.index;
    const int m = idx.size();
    if (i < 0 || j < 0 || i >= m || j >= m || i == j) throw input_error("fij_binomial needs two distinct variables");
    vset si = idx.sets[static_cast<std::size_t>(i)], sj = idx.sets[static_cast<std::size_t>(j)];

    vset sk = greedy_stable_set(setup.relabeled, si | sj);
    int k = idx.index_of(sk);
    if (k < 0) throw input_error("greedy stable set missing from the index");
    if (k == i || k == j) return std::nullopt; // f_ij = 0

    // rho(S_l) = rho(S_i) + rho(S_j) - rho(S_k); for stable sets this resolves
    // to the symmetric-difference arithmetic below, and must land on a stable set
    vset sl = 0;
    bool ok = true;
    for_each_bit(si | sj | sk, [&](int v) {
        int c = static_cast<int>(has_bit(si, v)) + static_cast<int>(has_bit(sj, v)) - static_cast<int>(has_bit(sk, v));
        if (c < 0 || c > 1) ok = false;
        else if (c == 1) sl |= bit(v);
    });
    if (!ok) throw input_error("structural binomial left the 0/1 range");
    int l = idx.index_of(sl);
    if (l < 0) throw input_error("structural binomial tail is not a stable set");

    Binomial b{mono_of_pair(m, std::min(i, j), std::max(i, j)), mono_of_pair(m, std::min(k, l), std::max(k, l))};
    if (!binomial_in_ideal(idx, b)) throw input_error("structural binomial fails the membership test");
    return b;
}

Fiber fiber(const StableSetIndex& idx, const std::vector<int>& target, int degree,
            long long step_budget) {
    if (static_cast<int>(target.size()) != idx.graph.n())
        throw input_error("fiber target must give one count per vertex");
    const int m = idx.size();
    Fiber f;
    long long steps = step_budget;

    // choose a multiset i1 <= i2 <= ... <= i_degree whose rho-vectors sum to target
    std::vector<int> left = target;
    Monomial mono = Monomial::one(m);
    auto rec = [&](auto&& self, int next, int remaining) -> void {
        if (--steps < 0) throw budget_error("fiber enumeration budget exceeded");
        if (remaining == 0) {
            for (int v : left)
                if (v != 0) return;
            f.monomials.push_back(mono);
            return;
        }
        for (int s = next; s < m; ++s) {
            bool fits = true;
            for_each_bit(idx.sets[static_cast<std::size_t>(s)], [&](int v) {
                if (left[static_cast<std::size_t>(v)] <= 0) fits = false;
            });
            if (!fits) continue;
            for_each_bit(idx.sets[static_cast<std::size_t>(s)], [&](int v) { --left[static_cast<std::size_t>(v)]; });
            mono.e[static_cast<std::size_t>(s)] = static_cast<std::int16_t>(mono.e[static_cast<std::size_t>(s)] + 1);
            ++mono.deg;
            self(self, s, remaining - 1);
            mono.e[static_cast<std::size_t>(s)] = static_cast<std::int16_t>(mono.e[static_cast<std::size_t>(s)] - 1);
            --mono.deg;
            for_each_bit(idx.sets[static_cast<std::size_t>(s)], [&](int v) { ++left[static_cast<std::size_t>(v)]; });
        }
    };
    rec(rec, 0, degree);
    return f;
}

std::vector<std::vector<int>> fiber_components(const StableSetIndex& idx, const Fiber& f) {
    const int count = static_cast<int>(f.monomials.size());
    std::map<std::vector<std::int16_t>, int> where;
    for (int i = 0; i < count; ++i) where[f.monomials[static_cast<std::size_t>(i)].e] = i;

    std::vector<int> parent(static_cast<std::size_t>(count));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    };

    auto quads = quadratic_binomials(idx, MonomialOrder::grevlex(idx.size()));
    for (int i = 0; i < count; ++i) {
        const Monomial& mo = f.monomials[static_cast<std::size_t>(i)];
        for (const auto& q : quads) {
            if (!mono_divides(q.lead, mo)) continue;
            Monomial other = mono_mul(mono_div(mo, q.lead), q.tail);
            auto it = where.find(other.e);
            if (it != where.end()) unite(i, it->second);
        }
    }

    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < count; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

bool quadratic_generation_oracle(const StableSetIndex& idx, int max_degree, long long step_budget) {
    const int m = idx.size();
    // enumerate every fiber of each degree by grouping the degree-d monomials by
    // rho-sum, then check connectivity under quadratic moves
    for (int d = 3; d <= max_degree; ++d) {
        std::map<std::vector<int>, int> seen;
        std::vector<int> choose(static_cast<std::size_t>(d), 0);
        // iterate multisets i1 <= ... <= id
        while (true) {
            if (--step_budget < 0) throw budget_error("oracle budget exceeded");
            Monomial mo = Monomial::one(m);
            for (int p : choose) {
                mo.e[static_cast<std::size_t>(p)] = static_cast<std::int16_t>(mo.e[static_cast<std::size_t>(p)] + 1);
                ++mo.deg;
            }
            auto rho = rho_sum(idx, mo);
            if (seen.emplace(rho, 1).second) {
                Fiber f = fiber(idx, rho, d, step_budget);
                if (fiber_components(idx, f).size() > 1) return false;
            }
            // next multiset
            int pos = d - 1;
            while (pos >= 0 && choose[static_cast<std::size_t>(pos)] == m - 1) --pos;
            if (pos < 0) break;
            int v = choose[static_cast<std::size_t>(pos)] + 1;
            for (int q = pos; q < d; ++q) choose[static_cast<std::size_t>(q)] = v;
        }
    }
    return true;
}

std::vector<Binomial> component_swap_binomials(const StableSetIndex& idx, int i, int j,
                                               const MonomialOrder& order) {
    const int m = idx.size();
    if (i < 0 || j < 0 || i >= m || j >= m || i == j)
        throw input_error("component swap needs two distinct variables");
    vset si = idx.sets[static_cast<std::size_t>(i)], sj = idx.sets[static_cast<std::size_t>(j)];
    vset only_i = si & ~sj, only_j = sj & ~si;
    vset diff = only_i | only_j;

    std::vector<Binomial> out;
    vset left = diff;
    while (left) {
        // flood the component of the difference graph containing the lowest vertex
        vset comp = bit(lowest_bit(left));
        while (true) {
            vset grow = comp;
            for_each_bit(comp, [&](int v) { grow |= idx.graph.neighbors(v) & diff; });
            if (grow == comp) break;
            comp = grow;
        }
        left &= ~comp;

        vset si2 = (si & ~comp) | (sj & comp);
        vset sj2 = (sj & ~comp) | (si & comp);
        int a = idx.index_of(si2), b = idx.index_of(sj2);
        if (a < 0 || b < 0) throw input_error("component swap produced a non-stable set");
        if ((std::min(a, b) == std::min(i, j)) && (std::max(a, b) == std::max(i, j))) continue;
        Monomial u = mono_of_pair(m, std::min(i, j), std::max(i, j));
        Monomial v = mono_of_pair(m, std::min(a, b), std::max(a, b));
        if (order.cmp(u, v) < 0) std::swap(u, v);
        out.push_back(Binomial{std::move(u), std::move(v)});
    }
    return out;
}

} // namespace stellate
