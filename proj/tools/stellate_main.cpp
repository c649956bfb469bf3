// stellate: command line front end.
//
// Exit codes: 0 ok, 1 counterexample found, 2 budget exceeded, 3 input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "stellate/analyze.hpp"
#include "stellate/canonical.hpp"
#include "stellate/contract.hpp"
#include "stellate/errors.hpp"
#include "stellate/families.hpp"
#include "stellate/graph_io.hpp"
#include "stellate/recognizers.hpp"
#include "stellate/stable_sets.hpp"
#include "stellate/sweep.hpp"
#include "stellate/toric.hpp"

namespace {

using namespace stellate;
using nlohmann::json;

std::vector<Graph> read_graphs(const std::string& path) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) throw input_error("cannot open '" + path + "'");
        in = &file;
    }
    std::vector<Graph> graphs;
    std::string line;
    int lineno = 0;
    while (std::getline(*in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        try {
            graphs.push_back(parse_graph_line(line));
        } catch (const input_error& e) {
            throw input_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (graphs.empty()) throw input_error("no graphs in input");
    return graphs;
}

json vertex_list(const std::vector<int>& vs) {
    json arr = json::array();
    for (int v : vs) arr.push_back(v + 1);
    return arr;
}

json mask_list(vset mask) { return vertex_list(set_to_vector(mask)); }

// A monomial as the list of stable sets it multiplies, each set as 1-based
// vertices of the graph the caller cares about (`orig` maps index vertices).
json monomial_json(const Monomial& mono, const StableSetIndex& idx, const std::vector<int>* orig) {
    json arr = json::array();
    for (int var = 0; var < static_cast<int>(mono.e.size()); ++var)
        for (int k = 0; k < mono.e[static_cast<std::size_t>(var)]; ++k) {
            vset s = idx.sets[static_cast<std::size_t>(var)];
            std::vector<int> vs;
            for_each_bit(s, [&](int v) { vs.push_back(orig ? (*orig)[static_cast<std::size_t>(v)] : v); });
            arr.push_back(vertex_list(vs));
        }
    return arr;
}

std::string monomial_text(const Monomial& mono, const StableSetIndex& idx, const std::vector<int>* orig) {
    std::ostringstream out;
    bool first = true;
    for (int var = 0; var < static_cast<int>(mono.e.size()); ++var)
        for (int k = 0; k < mono.e[static_cast<std::size_t>(var)]; ++k) {
            if (!first) out << "*";
            first = false;
            out << "x{";
            bool inner = true;
            for_each_bit(idx.sets[static_cast<std::size_t>(var)], [&](int v) {
                if (!inner) out << ",";
                inner = false;
                out << ((orig ? (*orig)[static_cast<std::size_t>(v)] : v) + 1);
            });
            out << "}";
        }
    if (first) out << "1";
    return out.str();
}

struct CommonFlags {
    bool text = false;
    Budgets budgets;
    std::uint64_t seed = 0;
    int jobs = 1;
};

int cmd_analyze(const std::string& path, const CommonFlags& flags) {
    int worst = 0;
    for (const Graph& g : read_graphs(path)) {
        AnalysisReport report = analyze(g, flags.budgets);
        if (flags.text)
            std::cout << report_to_text(report);
        else
            std::cout << report_to_json(report).dump() << "\n";
        if (!report.counterexample_flags.empty()) worst = std::max(worst, 1);
    }
    return worst;
}

int cmd_recognize(const std::string& path, const std::string& what, const CommonFlags& flags) {
    for (const Graph& g : read_graphs(path)) {
        json out;
        if (what == "hole") {
            auto h = find_hole(g, Parity::any, 4, flags.budgets.search_steps);
            out = {{"found", h.has_value()}, {"hole", h ? vertex_list(h->cycle) : json(nullptr)}};
        } else if (what == "antihole") {
            auto h = find_antihole(g, Parity::any, flags.budgets.search_steps);
            out = {{"found", h.has_value()}, {"antihole", h ? vertex_list(h->cycle) : json(nullptr)}};
        } else if (what == "stretcher") {
            auto st = find_odd_stretcher(g, flags.budgets.search_steps);
            out["found"] = st.has_value();
            out["stretcher"] = st ? json{{"s", st->spec.s},
                                        {"t", st->spec.t},
                                        {"u", st->spec.u},
                                        {"map", vertex_list(st->map)}}
                                  : json(nullptr);
        } else if (what == "meyniel") {
            MeynielResult r = is_meyniel(g, flags.budgets.search_steps);
            out = {{"meyniel", r.meyniel},
                   {"cycle", r.meyniel ? json(nullptr) : vertex_list(r.cycle)},
                   {"chord_count", r.meyniel ? json(nullptr) : json(r.chord_count)}};
        } else if (what == "perfect-order") {
            auto po = find_perfect_ordering(g, flags.budgets.perfect_order_cap);
            out = {{"found", po.has_value()},
                   {"ordering", po ? vertex_list(po->order) : json(nullptr)}};
        } else if (what == "gsp") {
            auto part = is_generalized_split(g, flags.budgets.gsp_cap);
            out["found"] = part.has_value();
            if (part) {
                json cl = json::array();
                for (vset c : part->cliques) cl.push_back(mask_list(c));
                out["gsp_partition"] = {{"side", part->on_complement ? "complement" : "graph"},
                                        {"c0", mask_list(part->c0)},
                                        {"cliques", cl}};
            } else {
                out["gsp_partition"] = nullptr;
            }
        } else if (what == "clique-cutset") {
            auto split = find_clique_cutset(g, flags.budgets.cutset_cap);
            out["found"] = split.has_value();
            out["clique_cutset"] = split ? mask_list(split->cutset) : json(nullptr);
            out["side_a"] = split ? mask_list(split->side_a) : json(nullptr);
            out["side_b"] = split ? mask_list(split->side_b) : json(nullptr);
        } else {
            throw input_error("unknown --what '" + what + "'");
        }
        if (flags.text) {
            std::cout << what << ": " << out.dump() << "\n";
        } else {
            std::cout << out.dump() << "\n";
        }
    }
    return 0;
}

int cmd_color(const std::string& path, int seed1, const CommonFlags& flags) {
    for (const Graph& g : read_graphs(path)) {
        if (seed1 < 1 || seed1 > g.n())
            throw input_error("--seed must name a vertex between 1 and " + std::to_string(g.n()));
        HertzResult hz = hertz_color(g, seed1 - 1);
        bool proper = true;
        for (auto [u, v] : g.edges())
            if (hz.coloring[static_cast<std::size_t>(u)] == hz.coloring[static_cast<std::size_t>(v)])
                proper = false;
        // Replay the contraction maps to spell each stage pair in input vertices.
        json stages = json::array();
        {
            std::vector<vset> orig(static_cast<std::size_t>(g.n()));
            for (int v = 0; v < g.n(); ++v) orig[static_cast<std::size_t>(v)] = bit(v);
            for (std::size_t i = 0; i < hz.stages.size(); ++i) {
                const ContractionStep& step = hz.trace.steps[i];
                stages.push_back({{"v", mask_list(orig[static_cast<std::size_t>(hz.stages[i].v)])},
                                  {"w", hz.stages[i].w_original + 1},
                                  {"kept_current", hz.stages[i].v_was_current}});
                std::vector<vset> next(orig.size() - 1);
                for (std::size_t u = 0; u < orig.size(); ++u)
                    next[static_cast<std::size_t>(step.map[u])] |= orig[u];
                orig = std::move(next);
            }
        }
        json coloring = json::array();
        for (int c : hz.coloring) coloring.push_back(c);
        json out = {{"seed", seed1},
                    {"coloring", coloring},
                    {"colors_used", hz.colors_used},
                    {"clique_number", clique_number(g)},
                    {"proper", proper},
                    {"stable_set", mask_list(hz.stable_set)},
                    {"s_found", hz.s_found},
                    {"stages", stages}};
        if (flags.text) {
            std::cout << "colors_used=" << hz.colors_used << " clique_number=" << clique_number(g)
                      << " proper=" << (proper ? "true" : "false") << "\n  coloring:";
            for (int v = 0; v < g.n(); ++v)
                std::cout << " " << (v + 1) << ":" << hz.coloring[static_cast<std::size_t>(v)];
            std::cout << "\n  stable_set: " << mask_list(hz.stable_set).dump() << "\n";
        } else {
            std::cout << out.dump() << "\n";
        }
    }
    return 0;
}

int cmd_toric_gb(const std::string& path, const std::string& order_name, const CommonFlags& flags) {
    for (const Graph& g : read_graphs(path)) {
        StableSetIndex idx;
        MonomialOrder order = MonomialOrder::grevlex(0);
        std::vector<int> orig; // index vertex -> input vertex (theorem32 relabels)
        const std::vector<int>* origp = nullptr;
        if (order_name == "default") {
            idx = enumerate_stable_sets(g, flags.budgets.stable_set_cap);
            order = MonomialOrder::grevlex(idx.size());
        } else if (order_name == "theorem32") {
            auto po = find_perfect_ordering(g, flags.budgets.perfect_order_cap);
            if (!po) throw input_error("theorem32 order needs a perfectly orderable graph");
            Theorem32Setup setup = theorem32_order(g, *po, flags.budgets.stable_set_cap);
            idx = std::move(setup.index);
            order = std::move(setup.order);
            orig = std::move(setup.vertex_map);
            origp = &orig;
        } else {
            throw input_error("unknown --order '" + order_name + "'");
        }
        GroebnerBasis gb = toric_groebner(idx, order, flags.budgets.toric());
        InitialIdealProfile profile = initial_ideal_profile(gb);
        if (flags.text) {
            std::cout << "order=" << order_name << " variables=" << idx.size()
                      << " gb_size=" << gb.elements.size() << " max_degree=" << profile.max_degree
                      << " all_quadratic=" << (profile.all_quadratic ? "true" : "false")
                      << " all_squarefree=" << (profile.all_squarefree ? "true" : "false") << "\n";
            for (const Binomial& b : gb.elements)
                std::cout << "  " << monomial_text(b.lead, idx, origp) << " - "
                          << monomial_text(b.tail, idx, origp) << "\n";
        } else {
            json elems = json::array();
            for (const Binomial& b : gb.elements)
                elems.push_back({{"lead", monomial_json(b.lead, idx, origp)},
                                 {"tail", monomial_json(b.tail, idx, origp)}});
            std::cout << json{{"order", order_name},
                              {"variables", idx.size()},
                              {"gb_size", gb.elements.size()},
                              {"max_degree", profile.max_degree},
                              {"all_quadratic", profile.all_quadratic},
                              {"all_squarefree", profile.all_squarefree},
                              {"elements", elems}}
                             .dump()
                      << "\n";
        }
    }
    return 0;
}

int cmd_toric_quadgen(const std::string& path, bool oracle, int max_degree, const CommonFlags& flags) {
    int worst = 0;
    for (const Graph& g : read_graphs(path)) {
        StableSetIndex idx = enumerate_stable_sets(g, flags.budgets.stable_set_cap);
        QuadGenResult qr = is_quadratically_generated(idx, flags.budgets.toric());
        json out = {{"quadratically_generated", qr.quadratically_generated}};
        out["witness"] = qr.witness ? json{{"lead", monomial_json(qr.witness->lead, idx, nullptr)},
                                           {"tail", monomial_json(qr.witness->tail, idx, nullptr)}}
                                    : json(nullptr);
        if (oracle) {
            InitialIdealProfile profile = initial_ideal_profile(qr.gb);
            int depth = std::max(max_degree, profile.max_degree);
            bool oracle_verdict =
                quadratic_generation_oracle(idx, depth, flags.budgets.gb_step_budget);
            out["oracle"] = oracle_verdict;
            out["oracle_max_degree"] = depth;
            if (oracle_verdict != qr.quadratically_generated) {
                out["oracle_agrees"] = false;
                worst = std::max(worst, 1);
            } else {
                out["oracle_agrees"] = true;
            }
        }
        if (flags.text) {
            std::cout << "quadratically_generated="
                      << (qr.quadratically_generated ? "true" : "false");
            if (qr.witness)
                std::cout << " witness: " << monomial_text(qr.witness->lead, idx, nullptr) << " - "
                          << monomial_text(qr.witness->tail, idx, nullptr);
            if (oracle) std::cout << " oracle=" << (out["oracle"].get<bool>() ? "true" : "false");
            std::cout << "\n";
        } else {
            std::cout << out.dump() << "\n";
        }
    }
    return worst;
}

int cmd_sweep(SweepOptions opts, const CommonFlags& flags) {
    opts.budgets = flags.budgets;
    opts.jobs = flags.jobs;
    opts.seed = flags.seed;
    SweepState state = run_sweep(opts);
    if (flags.text) {
        std::cout << "source=" << state.source << " cursor=" << state.cursor
                  << (state.finished ? " finished" : " paused") << "\n"
                  << "  both_true=" << state.tallies.both_true
                  << " both_false=" << state.tallies.both_false
                  << " counterexample_a=" << state.tallies.counterexample_a
                  << " counterexample_b=" << state.tallies.counterexample_b
                  << " skipped=" << state.tallies.skipped << "\n";
        if (state.check_conjecture1)
            std::cout << "  conjecture1_checked=" << state.tallies.conjecture1_checked
                      << " conjecture1_failed=" << state.tallies.conjecture1_failed << "\n";
        for (const SweepCounterexample& c : state.counterexamples)
            std::cout << "  !! " << c.kind << " " << c.graph6 << "\n";
    } else {
        std::cout << sweep_state_to_json(state).dump() << "\n";
    }
    return state.counterexamples.empty() ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"stellate: toric ideals of stable set polytopes, perfect-graph structure, and a conjecture sweep"};
    app.require_subcommand(1);

    CommonFlags flags;
    flags.budgets = Budgets::from_env();
    bool json_flag = false;
    app.add_flag("--json", json_flag, "machine-readable output (default)");
    app.add_flag("--text", flags.text, "human-readable output");
    app.add_option("--jobs", flags.jobs, "worker threads for the sweep")->check(CLI::PositiveNumber);
    app.add_option("--seed", flags.seed, "random seed echoed into checkpoints");
    app.add_option("--budget-stable-sets", flags.budgets.stable_set_cap);
    app.add_option("--budget-gb-vars", flags.budgets.gb_var_budget);
    app.add_option("--budget-gb-steps", flags.budgets.gb_step_budget);
    app.add_option("--budget-search-steps", flags.budgets.search_steps);
    app.add_option("--budget-perfect-order", flags.budgets.perfect_order_cap);
    app.add_option("--budget-contractile", flags.budgets.contractile_cap);
    app.add_option("--budget-gsp", flags.budgets.gsp_cap);
    app.add_option("--budget-cutset", flags.budgets.cutset_cap);
    app.add_option("--budget-fiber-degree", flags.budgets.fiber_degree);
    app.add_option("--budget-even-pair", flags.budgets.even_pair_vertex_cap);

    std::string an_path;
    CLI::App* an = app.add_subcommand("analyze", "full structural + toric report per graph");
    an->add_option("file", an_path, "graph6 or JSON graphs, one per line; - for stdin")->required();
    an->fallthrough();

    std::string rec_path, rec_what;
    CLI::App* rec = app.add_subcommand("recognize", "run one recognizer");
    rec->add_option("file", rec_path)->required();
    rec->add_option("--what", rec_what, "hole|antihole|stretcher|meyniel|perfect-order|gsp|clique-cutset")
        ->required();
    rec->fallthrough();

    std::string col_path;
    int col_seed = 1;
    CLI::App* col = app.add_subcommand("color", "Hertz contraction coloring");
    col->add_option("file", col_path)->required();
    col->add_option("--seed", col_seed, "1-based start vertex (default 1)");
    col->fallthrough();

    CLI::App* toric = app.add_subcommand("toric", "toric ideal computations");
    toric->require_subcommand(1);
    toric->fallthrough();
    std::string gb_path, gb_order = "default";
    CLI::App* gb = toric->add_subcommand("gb", "reduced Groebner basis");
    gb->add_option("file", gb_path)->required();
    gb->add_option("--order", gb_order, "default|theorem32");
    gb->fallthrough();
    std::string qg_path;
    bool qg_oracle = false;
    int qg_max_degree = kDefaultFiberDegree;
    CLI::App* qg = toric->add_subcommand("quadgen", "quadratic generation test");
    qg->add_option("file", qg_path)->required();
    qg->add_flag("--oracle", qg_oracle, "cross-check with the fiber-connectivity oracle");
    qg->add_option("--max-degree", qg_max_degree, "fiber depth for the oracle");
    qg->fallthrough();

    CLI::App* fam = app.add_subcommand("family", "print a named family member as graph6");
    fam->require_subcommand(1);
    fam->fallthrough();
    int fs = 1, ft = 1, fu = 1;
    CLI::App* fam_st = fam->add_subcommand("stretcher", "stretcher G_{s,t,u}");
    fam_st->add_option("s", fs)->required();
    fam_st->add_option("t", ft)->required();
    fam_st->add_option("u", fu)->required();
    fam_st->fallthrough();
    int fak = 5;
    CLI::App* fam_ah = fam->add_subcommand("antihole", "complement of a k-cycle");
    fam_ah->add_option("k", fak)->required();
    fam_ah->fallthrough();
    int fhk = 4;
    CLI::App* fam_h = fam->add_subcommand("hole", "chordless k-cycle");
    fam_h->add_option("k", fhk)->required();
    fam_h->fallthrough();
    std::string ft2_parts;
    CLI::App* fam_t2 = fam->add_subcommand("type2", "complete multipartite, part sizes a,b,...");
    fam_t2->add_option("parts", ft2_parts, "comma-separated part sizes")->required();
    fam_t2->fallthrough();

    SweepOptions sw;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "conjecture sweep over small graphs");
    sweep_cmd->add_option("--n", sw.max_n, "enumerate connected graphs on 1..n vertices (default 6)");
    sweep_cmd->add_option("--input", sw.input_path, "graph6 file to sweep instead");
    sweep_cmd->add_flag("--check-conjecture1", sw.check_conjecture1,
                        "also test perfectly-contractile vs forbidden structures");
    sweep_cmd->add_option("--resume", sw.resume_path, "checkpoint file to resume from");
    sweep_cmd->add_option("--checkpoint", sw.checkpoint_path, "checkpoint file to keep updated");
    sweep_cmd->add_option("--report", sw.report_path, "newline-delimited JSON report file");
    sweep_cmd->add_option("--stop-after", sw.stop_after, "consume at most this many graphs, then pause");
    sweep_cmd->add_option("--checkpoint-every", sw.checkpoint_every, "graphs per checkpoint write");
    sweep_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    if (an->parsed()) return cmd_analyze(an_path, flags);
    if (rec->parsed()) return cmd_recognize(rec_path, rec_what, flags);
    if (col->parsed()) return cmd_color(col_path, col_seed, flags);
    if (gb->parsed()) return cmd_toric_gb(gb_path, gb_order, flags);
    if (qg->parsed()) return cmd_toric_quadgen(qg_path, qg_oracle, qg_max_degree, flags);
    if (fam_st->parsed()) {
        std::cout << encode_graph6(odd_stretcher({fs, ft, fu})) << "\n";
        return 0;
    }
    if (fam_ah->parsed()) {
        std::cout << encode_graph6(antihole(fak)) << "\n";
        return 0;
    }
    if (fam_h->parsed()) {
        std::cout << encode_graph6(hole(fhk)) << "\n";
        return 0;
    }
    if (fam_t2->parsed()) {
        std::vector<int> parts;
        std::stringstream ss(ft2_parts);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                parts.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw input_error("type2 parts must be integers, got '" + tok + "'");
            }
        }
        std::cout << encode_graph6(type2(parts)) << "\n";
        return 0;
    }
    if (sweep_cmd->parsed()) return cmd_sweep(sw, flags);
    return 3; // unreachable: require_subcommand guarantees one branch
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const stellate::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const stellate::budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
