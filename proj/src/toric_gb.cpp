#include <algorithm>
#include <array>
#include <set>

#include "stellate/errors.hpp"
#include "stellate/toric.hpp"

namespace stellate {

namespace {

using SupportMask = std::array<std::uint64_t, 4>; // up to 256 variables

SupportMask support_mask(const Monomial& m) {
    SupportMask s{};
    for (int i = 0; i < m.vars(); ++i)
        if (m.e[static_cast<std::size_t>(i)] > 0) s[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
    return s;
}

bool mask_subset(const SupportMask& a, const SupportMask& b) {
    for (int w = 0; w < 4; ++w)
        if (a[static_cast<std::size_t>(w)] & ~b[static_cast<std::size_t>(w)]) return false;
    return true;
}

struct Engine {
    MonomialOrder order;
    bool saturating;
    long long steps_left;

    struct Elem {
        Binomial b;
        SupportMask lead_mask;
    };
    std::vector<Elem> elems;

    struct PairKey {
        Monomial lcm;
        int i, j;
    };
    struct PairLess {
        const MonomialOrder* order;
        bool operator()(const PairKey& a, const PairKey& b) const {
            int c = order->cmp(a.lcm, b.lcm);
            if (c) return c < 0;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };
    std::set<PairKey, PairLess> pairs;

    Engine(const MonomialOrder& ord, bool sat, long long budget)
        : order(ord), saturating(sat), steps_left(budget), pairs(PairLess{&order}) {}

    void tick() {
        if (--steps_left < 0) throw budget_error("Groebner step budget exceeded");
    }

    // one full normal form pass; deterministic: always the lowest-index divisor
    Monomial reduce(Monomial m) {
        bool progress = true;
        while (progress) {
            progress = false;
            SupportMask mm = support_mask(m);
            for (const auto& el : elems) {
                if (el.b.lead.deg > m.deg) continue;
                if (!mask_subset(el.lead_mask, mm)) continue;
                if (!mono_divides(el.b.lead, m)) continue;
                tick();
                m = mono_mul(mono_div(m, el.b.lead), el.b.tail);
                progress = true;
                break;
            }
        }
        return m;
    }

    // full reduction of a binomial; in saturating mode also divides out the
    // common factor and re-reduces until a fixpoint (sound for toric ideals:
    // the target ideal is saturated).  Returns nullopt for zero.
    std::optional<Binomial> reduce_binomial(Monomial u, Monomial v) {
        while (true) {
            u = reduce(u);
            v = reduce(v);
            if (u == v) return std::nullopt;
            if (saturating) {
                Monomial g = mono_gcd(u, v);
                if (g.deg > 0) {
                    u = mono_div(u, g);
                    v = mono_div(v, g);
                    continue;
                }
            }
            break;
        }
        int c = order.cmp(u, v);
        if (c == 0) return std::nullopt;
        if (c < 0) std::swap(u, v);
        return Binomial{std::move(u), std::move(v)};
    }

    // Gebauer-Moeller update: install h as a new basis element, pruning the
    // pair set with the M/F/B criteria.
    void update(Binomial h) {
        const int nt = static_cast<int>(elems.size());
        const Monomial& lt = h.lead;

        std::vector<PairKey> cand;
        cand.reserve(elems.size());
        for (int i = 0; i < nt; ++i) cand.push_back(PairKey{mono_lcm(elems[static_cast<std::size_t>(i)].b.lead, lt), i, nt});

        // criterion M/F: drop (i,nt) when another candidate's lcm divides its lcm
        // (properly, or same lcm at a smaller index); coprime-lead candidates
        // survive this stage so they can still knock out their classmates
        std::vector<PairKey> kept;
        for (std::size_t a = 0; a < cand.size(); ++a) {
            bool coprime = mono_coprime(elems[static_cast<std::size_t>(cand[a].i)].b.lead, lt);
            bool dead = false;
            if (!coprime) {
                for (std::size_t b = 0; b < cand.size() && !dead; ++b) {
                    if (a == b) continue;
                    if (!mono_divides(cand[b].lcm, cand[a].lcm)) continue;
                    if (cand[b].lcm == cand[a].lcm && b > a) continue; // equal lcm: keep the first
                    dead = true;
                }
            }
            if (!dead) kept.push_back(cand[a]);
        }

        // criterion B on the old pairs
        for (auto it = pairs.begin(); it != pairs.end();) {
            const Monomial& lij = it->lcm;
            if (mono_divides(lt, lij) &&
                mono_lcm(elems[static_cast<std::size_t>(it->i)].b.lead, lt) != lij &&
                mono_lcm(elems[static_cast<std::size_t>(it->j)].b.lead, lt) != lij)
                it = pairs.erase(it);
            else
                ++it;
        }

        // finally the product criterion on the survivors
        for (auto& p : kept)
            if (!mono_coprime(elems[static_cast<std::size_t>(p.i)].b.lead, lt)) pairs.insert(std::move(p));

        SupportMask lm = support_mask(h.lead);
        elems.push_back(Elem{std::move(h), lm});
    }

    void run(std::vector<Binomial> gens) {
        std::sort(gens.begin(), gens.end(), [&](const Binomial& a, const Binomial& b) {
            int c = order.cmp(a.lead, b.lead);
            if (c) return c < 0;
            return order.cmp(a.tail, b.tail) < 0;
        });
        for (auto& g : gens) {
            tick();
            if (auto r = reduce_binomial(g.lead, g.tail)) update(std::move(*r));
        }
        while (!pairs.empty()) {
            PairKey p = *pairs.begin();
            pairs.erase(pairs.begin());
            tick();
            const Binomial& fi = elems[static_cast<std::size_t>(p.i)].b;
            const Binomial& fj = elems[static_cast<std::size_t>(p.j)].b;
            // S-binomial of two binomials: x^(L-lead_j) tail_j - x^(L-lead_i) tail_i
            Monomial u = mono_mul(mono_div(p.lcm, fj.lead), fj.tail);
            Monomial v = mono_mul(mono_div(p.lcm, fi.lead), fi.tail);
            if (auto r = reduce_binomial(std::move(u), std::move(v))) update(std::move(*r));
        }
    }

    std::vector<Binomial> autoreduced() {
        std::vector<Binomial> out;
        out.reserve(elems.size());
        for (auto& el : elems) out.push_back(std::move(el.b));
        std::sort(out.begin(), out.end(), [&](const Binomial& a, const Binomial& b) {
            int c = order.cmp(a.lead, b.lead);
            if (c) return c < 0;
            return order.cmp(a.tail, b.tail) < 0;
        });
        // minimal: keep elements whose lead no kept lead divides
        std::vector<Binomial> minimal;
        for (auto& b : out) {
            bool redundant = false;
            for (const auto& k : minimal)
                if (mono_divides(k.lead, b.lead)) {
                    redundant = true;
                    break;
                }
            if (!redundant) minimal.push_back(std::move(b));
        }
        // reduced: every tail in normal form w.r.t. the minimal leads
        elems.clear();
        pairs.clear();
        for (auto& b : minimal) elems.push_back(Elem{b, support_mask(b.lead)});
        for (auto& b : minimal) b.tail = reduce(b.tail);
        return minimal;
    }
};

std::vector<Binomial> complete(std::vector<Binomial> gens, const MonomialOrder& order, bool saturating,
                               long long step_budget) {
    Engine eng(order, saturating, step_budget);
    eng.run(std::move(gens));
    return eng.autoreduced();
}

} // namespace

GroebnerBasis buchberger_closure(std::vector<Binomial> gens, const MonomialOrder& order,
                                 long long step_budget) {
    return GroebnerBasis{order, complete(std::move(gens), order, false, step_budget)};
}

GroebnerBasis toric_groebner(const StableSetIndex& idx, const MonomialOrder& order,
                             const ToricOptions& opts) {
    const int m = idx.size();
    if (m != order.vars()) throw input_error("order priority size does not match the variable count");
    if (m > opts.var_budget)
        throw budget_error("variable budget " + std::to_string(opts.var_budget) + " exceeded: " +
                           std::to_string(m) + " stable sets");

    // columns: incidence vector of each stable set plus a homogenizing 1-row
    const int n = idx.graph.n();
    std::vector<std::vector<long long>> a(static_cast<std::size_t>(n) + 1,
                                          std::vector<long long>(static_cast<std::size_t>(m), 0));
    for (int c = 0; c < m; ++c) {
        for_each_bit(idx.sets[static_cast<std::size_t>(c)], [&](int v) { a[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] = 1; });
        a[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)] = 1;
    }

    std::vector<Binomial> basis;
    for (const auto& vec : integer_kernel_basis(a)) {
        Monomial plus = Monomial::one(m), minus = Monomial::one(m);
        for (int i = 0; i < m; ++i) {
            long long x = vec[static_cast<std::size_t>(i)];
            if (x > 30000 || x < -30000) throw budget_error("kernel basis exponent exceeds the engine range");
            if (x > 0) {
                plus.e[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(x);
                plus.deg += static_cast<int>(x);
            } else if (x < 0) {
                minus.e[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(-x);
                minus.deg += static_cast<int>(-x);
            }
        }
        if (plus == minus) continue;
        basis.push_back(Binomial{std::move(plus), std::move(minus)});
    }

    // one saturation round per variable: grevlex with that variable cheapest
    // makes dividing x_v out of a Groebner basis reach (J : x_v^inf); rounds for
    // variables absent from every element are free to skip, and the variable the
    // requested order already treats as cheapest is handled by the final round.
    for (int v = 0; v < m; ++v) {
        if (v == order.priority[0]) continue;
        bool occurs = false;
        for (const auto& b : basis)
            if (b.lead.e[static_cast<std::size_t>(v)] > 0 || b.tail.e[static_cast<std::size_t>(v)] > 0) {
                occurs = true;
                break;
            }
        if (!occurs) continue;
        basis = complete(std::move(basis), MonomialOrder::grevlex_cheapest(m, v), true, opts.step_budget);
    }
    return GroebnerBasis{order, complete(std::move(basis), order, true, opts.step_budget)};
}

Monomial normal_form(Monomial mono, const GroebnerBasis& gb) {
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& el : gb.elements) {
            if (el.lead.deg > mono.deg) continue;
            if (!mono_divides(el.lead, mono)) continue;
            mono = mono_mul(mono_div(mono, el.lead), el.tail);
            progress = true;
            break;
        }
    }
    return mono;
}

std::optional<Binomial> normal_form(const Binomial& b, const GroebnerBasis& gb) {
    Monomial u = normal_form(b.lead, gb);
    Monomial v = normal_form(b.tail, gb);
    int c = gb.order.cmp(u, v);
    if (c == 0) return std::nullopt;
    if (c < 0) std::swap(u, v);
    return Binomial{std::move(u), std::move(v)};
}

InitialIdealProfile initial_ideal_profile(const GroebnerBasis& gb) {
    InitialIdealProfile p;
    for (const auto& b : gb.elements) {
        p.max_degree = std::max(p.max_degree, b.lead.deg);
        if (b.lead.deg != 2) p.all_quadratic = false;
        if (!mono_squarefree(b.lead)) p.all_squarefree = false;
    }
    return p;
}

} // namespace stellate
