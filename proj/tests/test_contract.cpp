#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "stellate/contract.hpp"
#include "stellate/errors.hpp"
#include "stellate/families.hpp"
#include "stellate/graph_io.hpp"
#include "stellate/recognizers.hpp"
#include "stellate/stable_sets.hpp"

using namespace stellate;

namespace {

// re-validate a full contraction trace against the even-pair recognizer
void check_trace(const Graph& g, const ContractionTrace& trace) {
    Graph cur = g;
    for (const ContractionStep& step : trace.steps) {
        REQUIRE(step.before == cur);
        CHECK(!cur.adjacent(step.v, step.w));
        CHECK(is_even_pair(cur, step.v, step.w).even_pair);
        auto [next, map] = contract_pair(cur, step.v, step.w);
        CHECK(map == step.map);
        cur = next;
    }
    CHECK(is_clique(cur, cur.vertices()));
}

} // namespace

TEST_CASE("contract_pair mechanics") {
    // C6 with the antipodal pair {0,3} contracted is the bowtie: two triangles
    // sharing the merged vertex [DERIVED: hand contraction]
    Graph c6 = hole(6);
    auto [bowtie, map] = contract_pair(c6, 0, 3);
    CHECK(bowtie.n() == 5);
    CHECK(map == std::vector<int>{4, 0, 1, 4, 2, 3}); // 0 and 3 both land on 4
    std::vector<std::pair<int, int>> expect = {{0, 1}, {0, 4}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    CHECK(bowtie.edges() == expect);

    // contracting in the other argument order gives the same graph
    auto [bowtie2, map2] = contract_pair(c6, 3, 0);
    CHECK(bowtie2 == bowtie);
    CHECK(map2 == map);

    // P3: merging the endpoints leaves a single edge
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    auto [k2, pmap] = contract_pair(p3, 0, 2);
    CHECK(k2.n() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(pmap == std::vector<int>{1, 0, 1});

    CHECK_THROWS_AS(contract_pair(c6, 0, 1), input_error); // adjacent
    CHECK_THROWS_AS(contract_pair(c6, 2, 2), input_error); // same vertex
    CHECK_THROWS_AS(contract_pair(c6, 0, 6), input_error); // out of range
}

TEST_CASE("even contractile search") {
    // cliques need no contractions at all
    auto k4 = is_even_contractile(parse_graph6("C~"));
    REQUIRE(k4);
    CHECK(k4->steps.empty());

    // C4 contracts twice: a diagonal, then the remaining even pair of P3
    Graph c4 = hole(4);
    auto t4 = is_even_contractile(c4);
    REQUIRE(t4);
    CHECK(t4->steps.size() == 2);
    check_trace(c4, *t4);

    // [DERIVED] C5 has no even pairs at all, so no sequence exists
    CHECK(!is_even_contractile(hole(5)));
    // the prism is stuck the same way
    CHECK(!is_even_contractile(odd_stretcher({1, 1, 1})));

    // C6 and the wheel W4 reach a clique
    auto t6 = is_even_contractile(hole(6));
    REQUIRE(t6);
    check_trace(hole(6), *t6);
    auto tw = is_even_contractile(parse_graph6("Dl{"));
    REQUIRE(tw);
    check_trace(parse_graph6("Dl{"), *tw);

    CHECK_THROWS_AS(is_even_contractile(Graph(10)), budget_error); // cap is 9

    // a shared cache changes nothing about the verdicts
    ContractileCache cache;
    CHECK(is_even_contractile(hole(6), &cache).has_value());
    CHECK(is_even_contractile(hole(6), &cache).has_value());
    CHECK(!is_even_contractile(hole(5), &cache));
    CHECK(!is_even_contractile(hole(5), &cache));
}

TEST_CASE("perfectly contractile") {
    CHECK(is_perfectly_contractile(parse_graph6("C~")).perfectly_contractile);
    CHECK(is_perfectly_contractile(hole(6)).perfectly_contractile);
    CHECK(is_perfectly_contractile(parse_graph6("Cx")).perfectly_contractile); // paw

    auto c5 = is_perfectly_contractile(hole(5));
    CHECK(!c5.perfectly_contractile);
    CHECK(c5.failing_subgraph == hole(5).vertices()); // C5 itself is the failure

    auto prism = is_perfectly_contractile(odd_stretcher({1, 1, 1}));
    CHECK(!prism.perfectly_contractile);
    // the failing subgraph must itself be stuck
    auto sub = induced_subgraph(odd_stretcher({1, 1, 1}), prism.failing_subgraph);
    CHECK(!is_even_contractile(sub.graph));

    // C5 plus a dominating vertex contains C5: not perfectly contractile
    auto w5 = is_perfectly_contractile(join(hole(5), Graph(1)));
    CHECK(!w5.perfectly_contractile);
    CHECK(popcount(w5.failing_subgraph) == 5);

    // chordal samples are perfectly contractile
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        Graph g = random_family(FamilyKind::chordal, 7, seed);
        CHECK(is_perfectly_contractile(g).perfectly_contractile);
    }
}

TEST_CASE("hertz color on the wheel with a universal seed") {
    // W4: rim C4 plus universal center 4; the seed has no non-neighbour, no
    // stage ever keeps the running vertex, and S falls back to the seed alone
    Graph w4 = parse_graph6("Dl{");
    HertzResult r = hertz_color(w4, 4);
    CHECK(r.colors_used == 3);
    CHECK(!r.s_found);
    CHECK(r.stable_set == bit(4));
    check_trace(w4, r.trace);

    // the coloring is proper and the color count equals the clique number
    for (auto [u, v] : w4.edges()) CHECK(r.coloring[u] != r.coloring[v]);
    CHECK(r.colors_used == clique_number(w4));
    for (int c : r.coloring) {
        CHECK(c >= 1);
        CHECK(c <= r.colors_used);
    }

    // regression: here a LATER merged vertex keeps the running vertex for a
    // stage of its own; that run must not be mistaken for the seed's, which
    // never starts (vertex 0 is universal)
    Graph g = parse_graph6("E}q?");
    REQUIRE((g.neighbors(0) | bit(0)) == full_set(g.n()));
    HertzResult u = hertz_color(g, 0);
    CHECK(u.colors_used == clique_number(g));
    CHECK(!u.s_found);
    CHECK(u.stable_set == bit(0));
    CHECK(is_stable_set(g, u.stable_set));
}

TEST_CASE("hertz color properties over meyniel samples") {
    std::vector<Graph> graphs = {
        hole(4), hole(6), parse_graph6("Bg"), parse_graph6("C~"), parse_graph6("Cx"),
        parse_graph6("EhEG"), parse_graph6("EFz_"),
    };
    for (std::uint64_t seed = 1; seed <= 6; ++seed)
        graphs.push_back(random_family(FamilyKind::meyniel, 6, seed));

    for (const Graph& g : graphs) {
        REQUIRE(is_meyniel(g).meyniel);
        int omega = clique_number(g);
        auto cliques = enumerate_maximal_cliques(g);
        for (int seed = 0; seed < g.n(); ++seed) {
            CAPTURE(encode_graph6(g));
            CAPTURE(seed);
            HertzResult r = hertz_color(g, seed);

            // proper, and exactly omega colors: Meyniel graphs are perfect
            for (auto [u, v] : g.edges()) CHECK(r.coloring[u] != r.coloring[v]);
            CHECK(r.colors_used == omega);

            // every contracted pair is an even pair in its stage graph
            check_trace(g, r.trace);
            REQUIRE(r.trace.steps.size() == r.stages.size());
            for (std::size_t k = 0; k < r.stages.size(); ++k) {
                CHECK(r.stages[k].v == r.trace.steps[k].v);
                CHECK(r.stages[k].w == r.trace.steps[k].w);
            }

            // S is stable and meets all maximal cliques
            CHECK(is_stable_set(g, r.stable_set));
            for (vset c : cliques) CHECK((r.stable_set & c) != 0);
            if (r.s_found) CHECK(has_bit(r.stable_set, r.trace.steps[0].v));
        }
    }

    // non-Meyniel inputs still complete with a proper coloring; the omega
    // guarantee is forfeit (C5 needs 3 colors anyway)
    HertzResult c5 = hertz_color(hole(5), 0);
    for (auto [u, v] : hole(5).edges()) CHECK(c5.coloring[u] != c5.coloring[v]);
    CHECK(c5.colors_used == 3);

    CHECK_THROWS_AS(hertz_color(hole(6), 6), input_error);  // bad seed
    CHECK_THROWS_AS(hertz_color(Graph(0), 0), input_error); // empty graph
}

TEST_CASE("hertz stable set certificate has the documented shape") {
    // on an even cycle with seed 0: v_0 = 0 keeps the running vertex, so s
    // exists and S = {v_0, w_0, ..., w_s}
    Graph c6 = hole(6);
    HertzResult r = hertz_color(c6, 0);
    REQUIRE(r.s_found);
    CHECK(has_bit(r.stable_set, 0));
    CHECK(popcount(r.stable_set) >= 2);

    // every w_r recorded as original must be an input vertex
    for (const HertzStage& st : r.stages)
        if (st.w_original >= 0) CHECK(st.w_original < c6.n());
}
