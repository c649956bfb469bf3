#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "stellate/analyze.hpp"
#include "stellate/errors.hpp"
#include "stellate/families.hpp"
#include "stellate/graph_io.hpp"
#include "stellate/sweep.hpp"
#include "stellate/toric.hpp"

using namespace stellate;
using nlohmann::json;

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::trunc);
    REQUIRE(out.good());
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// per-vertex counts over a multiset of stable sets
std::vector<int> multiset_rho(const std::vector<vset>& sets, int n) {
    std::vector<int> rho(static_cast<std::size_t>(n), 0);
    for (vset s : sets)
        for_each_bit(s, [&](int v) { ++rho[static_cast<std::size_t>(v)]; });
    return rho;
}

} // namespace

TEST_CASE("analyze on the complete graph") {
    Graph k5 = parse_graph6("D~{");
    AnalysisReport r = analyze(k5);

    CHECK(r.graph6 == "D~{");
    CHECK(r.n == 5);
    CHECK(r.m == 10);
    CHECK(r.connected);
    CHECK(r.skipped.empty());

    CHECK(!r.odd_hole);
    CHECK(!r.odd_antihole);
    CHECK(!r.even_antihole);
    CHECK(!r.odd_stretcher);
    CHECK(r.perfect == true);
    CHECK(r.meyniel == true);
    CHECK(r.perfectly_orderable == true);
    REQUIRE(r.ordering);
    CHECK(!verify_perfect_ordering(k5, *r.ordering));
    CHECK(r.generalized_split == true);
    CHECK(r.has_dominating_stable_set == true);

    REQUIRE(r.decomposition);
    CHECK(r.decomposition->search_complete);
    CHECK(r.decomposition->cutsets.empty());
    REQUIRE(r.decomposition->atoms.size() == 1);
    CHECK(!r.decomposition->atoms[0].type1); // no bipartite part on > 3 vertices
    CHECK(r.decomposition->atoms[0].type2);  // K5 is complete multipartite
    CHECK(r.decomposition->all_atoms_elementary);

    CHECK(r.stable_set_count == 6); // empty set + five singletons
    CHECK(r.quadratically_generated == true);
    CHECK(!r.witness);
    REQUIRE(r.profiles.size() == 2); // default + theorem32 (ordering exists)
    for (const OrderProfile& p : r.profiles) {
        CHECK(p.gb_size == 0); // the ideal of a complete graph is zero
        CHECK(p.profile.all_quadratic);
        CHECK(p.profile.all_squarefree);
    }

    REQUIRE(r.even_pairs);
    CHECK(r.even_pairs->empty()); // no non-adjacent pairs at all
    REQUIRE(r.hertz);
    CHECK(r.hertz->colors_used == 5);
    CHECK(r.hertz->clique_number == 5);
    CHECK(r.hertz->proper);
    CHECK(r.hertz->meets_all_maximal_cliques);
    CHECK(r.perfectly_contractile == true);
    CHECK(r.counterexample_flags.empty());
}

TEST_CASE("analyze on the five-cycle") {
    Graph c5 = hole(5);
    AnalysisReport r = analyze(c5);

    CHECK(r.graph6 == "Dhc");
    CHECK(r.skipped.empty());
    REQUIRE(r.odd_hole);
    CHECK(r.odd_hole->cycle.size() == 5);
    REQUIRE(r.odd_antihole); // C5 is its own complement
    CHECK(r.odd_antihole->cycle.size() == 5);
    CHECK(!r.even_antihole);
    CHECK(!r.odd_stretcher);

    CHECK(r.perfect == false);
    CHECK(r.meyniel == false);
    CHECK(r.perfectly_orderable == false);
    CHECK(!r.ordering);
    CHECK(r.generalized_split == false);
    CHECK(r.has_dominating_stable_set == false);

    REQUIRE(r.decomposition);
    CHECK(r.decomposition->search_complete);
    REQUIRE(r.decomposition->atoms.size() == 1);
    CHECK(!r.decomposition->atoms[0].type1);
    CHECK(!r.decomposition->atoms[0].type2);
    CHECK(!r.decomposition->all_atoms_elementary);

    CHECK(r.stable_set_count == 11);
    CHECK(r.quadratically_generated == true);
    CHECK(!r.witness);
    // no perfect ordering, so only the default order gets profiled
    REQUIRE(r.profiles.size() == 1);
    CHECK(r.profiles[0].order == "default");
    CHECK(r.profiles[0].gb_size == 12);
    CHECK(r.profiles[0].profile.max_degree == 4);
    CHECK(!r.profiles[0].profile.all_quadratic);
    CHECK(!r.profiles[0].profile.all_squarefree); // the quartic lead has a square

    REQUIRE(r.even_pairs);
    CHECK(r.even_pairs->empty()); // C5 has no even pair
    REQUIRE(r.hertz);
    CHECK(r.hertz->proper); // no Meyniel guarantee, but always a proper coloring
    CHECK(r.hertz->colors_used == 3);
    CHECK(r.hertz->clique_number == 2);

    CHECK(r.perfectly_contractile == false);
    CHECK(popcount(r.contractile_failing_subgraph) == 5);
    CHECK(r.counterexample_flags.empty()); // quadratic and clean: consistent
}

TEST_CASE("analyze on the prism finds the cubic witness") {
    Graph pr = odd_stretcher({1, 1, 1});
    AnalysisReport r = analyze(pr);

    CHECK(r.skipped.empty());
    REQUIRE(r.even_antihole); // the prism is the complement of C6
    CHECK(r.even_antihole->cycle.size() == 6);
    REQUIRE(r.odd_stretcher);
    CHECK(r.odd_stretcher->spec.s == 1);
    CHECK(r.odd_stretcher->spec.t == 1);
    CHECK(r.odd_stretcher->spec.u == 1);
    CHECK(r.perfect == true); // the prism is perfect, yet not quadratic

    CHECK(r.quadratically_generated == false);
    REQUIRE(r.witness);
    REQUIRE(r.witness->lead.size() == 3);
    REQUIRE(r.witness->tail.size() == 3);
    for (vset s : r.witness->lead) CHECK(is_stable_set(pr, s));
    for (vset s : r.witness->tail) CHECK(is_stable_set(pr, s));
    CHECK(multiset_rho(r.witness->lead, 6) == multiset_rho(r.witness->tail, 6));

    // not quadratic, but the forbidden structures are present: no counterexample
    CHECK(r.counterexample_flags.empty());
    CHECK(r.perfectly_contractile == false);
}

TEST_CASE("decomposed quadratic-generation verdict matches the monolithic one") {
    Graph pr = odd_stretcher({1, 1, 1});
    std::vector<Graph> samples = {
        Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}),         // P5: vertex cutsets
        glue_along_clique(parse_graph6("Cx"), parse_graph6("Bw"), {{0, 0}}),
        glue_along_clique(hole(4), hole(4), {{0, 0}}),                  // two C4 at a vertex
        glue_along_clique(pr, parse_graph6("Bw"), {{0, 0}, {1, 1}}),    // prism + ear on an edge
        parse_graph6("DyG"),                                            // bull
    };
    for (const Graph& g : samples) {
        CAPTURE(encode_graph6(g));
        AnalysisReport r = analyze(g);
        REQUIRE(r.quadratically_generated.has_value());
        StableSetIndex idx = enumerate_stable_sets(g);
        bool monolithic = is_quadratically_generated(idx).quadratically_generated;
        CHECK(*r.quadratically_generated == monolithic);
        CHECK(r.counterexample_flags.empty());
    }
}

TEST_CASE("budgets from the environment") {
    unsetenv("STELLATE_BUDGET_STABLE_SETS");
    unsetenv("STELLATE_BUDGET_GB_STEPS");
    Budgets base = Budgets::from_env();
    CHECK(base.stable_set_cap == kDefaultStableSetCap);
    CHECK(base.gb_step_budget == kDefaultGbStepBudget);

    setenv("STELLATE_BUDGET_STABLE_SETS", "123", 1);
    setenv("STELLATE_BUDGET_GB_STEPS", "777", 1);
    Budgets b = Budgets::from_env();
    CHECK(b.stable_set_cap == 123);
    CHECK(b.gb_step_budget == 777);
    CHECK(b.gb_var_budget == kDefaultGbVarBudget); // untouched knobs keep defaults

    setenv("STELLATE_BUDGET_STABLE_SETS", "banana", 1);
    CHECK_THROWS_AS(Budgets::from_env(), input_error);
    setenv("STELLATE_BUDGET_STABLE_SETS", "-5", 1);
    CHECK_THROWS_AS(Budgets::from_env(), input_error);

    unsetenv("STELLATE_BUDGET_STABLE_SETS");
    unsetenv("STELLATE_BUDGET_GB_STEPS");
}

TEST_CASE("budget overruns are recorded in-band, never thrown") {
    Budgets tiny;
    tiny.stable_set_cap = 3;        // C5 has 11 stable sets
    tiny.even_pair_vertex_cap = 2;  // C5 has 5 vertices
    AnalysisReport r = analyze(hole(5), tiny);

    CHECK(r.skipped.count("stable_sets") == 1);
    CHECK(r.skipped.count("quadgen") == 1);
    CHECK(r.skipped.count("gb_default") == 1);
    CHECK(r.skipped.count("even_pairs") == 1);
    for (const auto& [name, why] : r.skipped) {
        CAPTURE(name);
        CHECK(!why.empty());
    }
    CHECK(!r.stable_set_count);
    CHECK(!r.quadratically_generated);
    CHECK(!r.even_pairs);
    // structural searches are unaffected by those caps
    CHECK(r.odd_hole);
    CHECK(r.perfect == false);
    // no verdict, no counterexample bookkeeping
    CHECK(r.counterexample_flags.empty());
}

TEST_CASE("report json shape") {
    json j5 = report_to_json(analyze(hole(5)));
    CHECK(j5["schema"] == 1);
    CHECK(j5["graph"]["graph6"] == "Dhc");
    CHECK(j5["graph"]["n"] == 5);
    CHECK(j5["graph"]["m"] == 5);
    CHECK(j5["graph"]["connected"] == true);
    CHECK(j5["classes"]["perfect"] == false);
    CHECK(j5["classes"]["ordering"].is_null());
    CHECK(j5["classes"]["clique_separable"]["all_atoms_elementary"] == false);

    // vertices are 1-based in every serialized certificate
    const json& hole5 = j5["certificates"]["odd_hole"]["hole"];
    REQUIRE(hole5.is_array());
    REQUIRE(hole5.size() == 5);
    for (const json& v : hole5) {
        CHECK(v.get<int>() >= 1);
        CHECK(v.get<int>() <= 5);
    }
    CHECK(j5["certificates"]["even_antihole"].is_null());

    CHECK(j5["toric"]["stable_set_count"] == 11);
    REQUIRE(j5["toric"]["profiles"].size() == 1);
    CHECK(j5["toric"]["profiles"][0]["order"] == "default");
    CHECK(j5["toric"]["profiles"][0]["gb_size"] == 12);
    CHECK(j5["toric"]["profiles"][0]["max_degree"] == 4);
    CHECK(j5["toric"]["quadratically_generated"] == true);
    CHECK(j5["toric"]["witness"].is_null());

    CHECK(j5["contraction"]["even_pairs"].is_array());
    CHECK(j5["contraction"]["even_pairs"].empty());
    CHECK(j5["contraction"]["perfectly_contractile"] == false);
    REQUIRE(j5["contraction"]["failing_subgraph"].is_array());
    CHECK(j5["contraction"]["failing_subgraph"].size() == 5);
    CHECK(j5["counterexample_flags"].is_array());
    CHECK(j5["counterexample_flags"].empty());
    CHECK(j5["skipped"].is_object());
    CHECK(j5["skipped"].empty());
    CHECK(j5["timing_ms"].is_object());

    json jk = report_to_json(analyze(parse_graph6("D~{")));
    REQUIRE(jk["classes"]["ordering"].is_array());
    CHECK(jk["classes"]["ordering"].size() == 5);
    CHECK(jk["contraction"]["hertz"]["seed"] == 1); // 1-based in serialized form
    CHECK(jk["contraction"]["hertz"]["colors_used"] == 5);
    CHECK(jk["contraction"]["failing_subgraph"].is_null());
    CHECK(jk["toric"]["profiles"].size() == 2);

    json jp = report_to_json(analyze(odd_stretcher({1, 1, 1})));
    CHECK(jp["toric"]["quadratically_generated"] == false);
    REQUIRE(jp["toric"]["witness"]["lead"].size() == 3);
    REQUIRE(jp["toric"]["witness"]["tail"].size() == 3);
    for (const json& s : jp["toric"]["witness"]["lead"])
        for (const json& v : s) {
            CHECK(v.get<int>() >= 1);
            CHECK(v.get<int>() <= 6);
        }
    const json& st = jp["certificates"]["odd_stretcher"]["stretcher"];
    CHECK(st["s"] == 1);
    CHECK(st["map"].size() == 6);

    std::string text = report_to_text(analyze(hole(5)));
    CHECK(text.find("graph Dhc") != std::string::npos);
    CHECK(text.find("perfectly_contractile=false") != std::string::npos);
    CHECK(text.find("!!") == std::string::npos);
}

TEST_CASE("sweep over the internal enumeration") {
    SweepOptions opts;
    opts.max_n = 5;
    SweepState s = run_sweep(opts);
    CHECK(s.source == "enumerate:n<=5");
    CHECK(s.finished);
    CHECK(s.cursor == 31); // connected graphs on 1..5 vertices
    CHECK(s.tallies.both_true == 31);
    CHECK(s.tallies.both_false == 0);
    CHECK(s.tallies.counterexample_a == 0);
    CHECK(s.tallies.counterexample_b == 0);
    CHECK(s.tallies.skipped == 0);
    CHECK(s.tallies.total() == s.cursor);
    CHECK(s.counterexamples.empty());
    CHECK(s.tallies.conjecture1_checked == 0); // not requested

    // n <= 6 brings in the prism: the single both-false graph
    SweepOptions opts6;
    opts6.max_n = 6;
    opts6.check_conjecture1 = true;
    SweepState s6 = run_sweep(opts6);
    CHECK(s6.cursor == 143);
    CHECK(s6.tallies.both_true == 142);
    CHECK(s6.tallies.both_false == 1);
    CHECK(s6.tallies.counterexample_a == 0);
    CHECK(s6.tallies.counterexample_b == 0);
    CHECK(s6.counterexamples.empty()); // both-false is consistency, not a counterexample
    CHECK(s6.tallies.conjecture1_checked == 143);
    CHECK(s6.tallies.conjecture1_failed == 0);
}

TEST_CASE("sweep checkpointing, resume, and parallelism") {
    const std::string ckpt = "/tmp/stellate_test_ckpt.json";
    std::remove(ckpt.c_str());

    SweepOptions part;
    part.max_n = 5;
    part.stop_after = 13;
    part.checkpoint_every = 4;
    part.checkpoint_path = ckpt;
    SweepState first = run_sweep(part);
    CHECK(first.cursor == 13);
    CHECK(!first.finished);
    CHECK(first.tallies.total() == 13);

    SweepOptions rest;
    rest.max_n = 5;
    rest.resume_path = ckpt;
    rest.checkpoint_path = ckpt;
    SweepState resumed = run_sweep(rest);
    CHECK(resumed.finished);

    SweepOptions whole;
    whole.max_n = 5;
    SweepState oneshot = run_sweep(whole);
    CHECK(sweep_state_to_json(resumed).dump() == sweep_state_to_json(oneshot).dump());

    // the checkpoint file ends up holding the final state
    json tail = json::parse(read_file(ckpt));
    CHECK(tail == sweep_state_to_json(resumed));

    // jobs only changes wall time
    SweepOptions par;
    par.max_n = 5;
    par.jobs = 4;
    SweepState parallel = run_sweep(par);
    CHECK(sweep_state_to_json(parallel).dump() == sweep_state_to_json(oneshot).dump());

    std::remove(ckpt.c_str());
}

TEST_CASE("sweep rejects bad checkpoints and inputs") {
    const std::string path = "/tmp/stellate_test_bad_ckpt.json";

    write_file(path, "{this is not json");
    SweepOptions opts;
    opts.max_n = 5;
    opts.resume_path = path;
    CHECK_THROWS_AS(run_sweep(opts), input_error);

    // valid json, wrong schema
    write_file(path, "{\"schema\": 2}\n");
    CHECK_THROWS_AS(run_sweep(opts), input_error);

    // tamper with the tallies of a genuine checkpoint
    SweepOptions gen;
    gen.max_n = 5;
    gen.stop_after = 9;
    gen.checkpoint_path = path;
    run_sweep(gen);
    json j = json::parse(read_file(path));
    j["tallies"]["both_true"] = j["tallies"]["both_true"].get<long long>() + 1;
    write_file(path, j.dump());
    CHECK_THROWS_AS(run_sweep(opts), input_error);

    // a checkpoint for a different source
    gen.checkpoint_path = path;
    run_sweep(gen);
    SweepOptions other;
    other.max_n = 4;
    other.resume_path = path;
    CHECK_THROWS_AS(run_sweep(other), input_error);
    // cursor past the end of a shorter source
    SweepOptions eight;
    eight.max_n = 8;
    CHECK_THROWS_AS(run_sweep(eight), input_error); // enumeration cap, distinct failure

    std::remove(path.c_str());
}

TEST_CASE("sweep over a graph6 file with per-graph reports") {
    const std::string input = "/tmp/stellate_test_input.g6";
    const std::string report = "/tmp/stellate_test_report.jsonl";
    write_file(input, "Dhc\nD~{\n\nBw\n"); // blank lines are skipped

    SweepOptions opts;
    opts.input_path = input;
    opts.report_path = report;
    SweepState s = run_sweep(opts);
    CHECK(s.source == "file:" + input);
    CHECK(s.finished);
    CHECK(s.cursor == 3);
    CHECK(s.tallies.both_true == 3);

    std::istringstream lines(read_file(report));
    std::string line;
    std::vector<json> rows;
    while (std::getline(lines, line))
        if (!line.empty()) rows.push_back(json::parse(line));
    REQUIRE(rows.size() == 3);
    CHECK(rows[0]["graph6"] == "Dhc");
    CHECK(rows[1]["graph6"] == "D~{");
    CHECK(rows[2]["graph6"] == "Bw");
    for (const json& row : rows) {
        CHECK(row["schema"] == 1);
        CHECK(row["quadratically_generated"] == true);
        CHECK(row["even_antihole"] == false);
        CHECK(row["odd_stretcher"] == false);
        CHECK(row["verdict"] == "both-true");
    }

    // malformed graph6 lines name the offending line
    write_file(input, "Dhc\n!!bogus\n");
    SweepOptions bad;
    bad.input_path = input;
    try {
        run_sweep(bad);
        FAIL("expected input_error");
    } catch (const input_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }

    std::remove(input.c_str());
    std::remove(report.c_str());
}
