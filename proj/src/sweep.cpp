#include "stellate/sweep.hpp"

#include <atomic>
#include <fstream>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "stellate/canonical.hpp"
#include "stellate/errors.hpp"
#include "stellate/graph_io.hpp"
#include "stellate/recognizers.hpp"
#include "stellate/stable_sets.hpp"

namespace stellate {

namespace {

// Caches shared by all workers: verdicts are pure facts, so sharing only saves
// time and cannot change any result.
struct SharedCaches {
    std::mutex mutex;
    std::unordered_map<std::string, bool> quad_memo; // canonical key -> piece verdict
    ContractileCache contractile;

    std::optional<bool> quad_lookup(const std::string& key) {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = quad_memo.find(key);
        if (it == quad_memo.end()) return std::nullopt;
        return it->second;
    }
    void quad_store(const std::string& key, bool value) {
        std::lock_guard<std::mutex> lock(mutex);
        quad_memo.emplace(key, value);
    }
};

enum Bucket { kBothTrue = 0, kBothFalse, kCounterA, kCounterB, kSkipped };

struct GraphVerdict {
    std::string graph6;
    Bucket bucket = kSkipped;
    bool c1_checked = false;
    bool c1_ok = true;
    nlohmann::json report;
};

GraphVerdict evaluate_graph(const Graph& g, const SweepOptions& opts, SharedCaches& caches) {
    const Budgets& budgets = opts.budgets;
    GraphVerdict out;
    out.graph6 = encode_graph6(g);

    std::optional<bool> quad;
    try {
        bool all = true;
        for (const DecompositionPiece& piece : decompose_graph(g, budgets.cutset_cap, nullptr)) {
            std::string key = canonical_key(piece.graph);
            std::optional<bool> hit = caches.quad_lookup(key);
            bool verdict;
            if (hit) {
                verdict = *hit;
            } else {
                StableSetIndex idx = enumerate_stable_sets(piece.graph, budgets.stable_set_cap);
                verdict = is_quadratically_generated(idx, budgets.toric()).quadratically_generated;
                caches.quad_store(key, verdict);
            }
            if (!verdict) {
                all = false;
                break;
            }
        }
        quad = all;
    } catch (const budget_error&) {
        quad = std::nullopt;
    }

    std::optional<bool> even_antihole, stretcher;
    try {
        even_antihole = find_antihole(g, Parity::even, budgets.search_steps).has_value();
        stretcher = find_odd_stretcher(g, budgets.search_steps).has_value();
    } catch (const budget_error&) {
    }

    if (!quad || !even_antihole || !stretcher) {
        out.bucket = kSkipped;
    } else {
        bool forbidden = *even_antihole || *stretcher;
        if (*quad && !forbidden)
            out.bucket = kBothTrue;
        else if (!*quad && forbidden)
            out.bucket = kBothFalse;
        else if (*quad && forbidden)
            out.bucket = kCounterA;
        else
            out.bucket = kCounterB;
    }

    if (opts.check_conjecture1) {
        try {
            bool contractile =
                is_perfectly_contractile(g, &caches.contractile, budgets.contractile_cap)
                    .perfectly_contractile;
            bool odd_hole = find_hole(g, Parity::odd, 5, budgets.search_steps).has_value();
            bool any_antihole = find_antihole(g, Parity::any, budgets.search_steps).has_value();
            bool odd_stretcher = find_odd_stretcher(g, budgets.search_steps).has_value();
            bool clean = !odd_hole && !any_antihole && !odd_stretcher;
            out.c1_checked = true;
            out.c1_ok = (contractile == clean);
        } catch (const budget_error&) {
            out.c1_checked = false;
        }
    }

    static const char* kBucketNames[] = {"both-true", "both-false", "counterexample-a",
                                         "counterexample-b", "skipped"};
    out.report = {{"schema", 1},
                  {"graph6", out.graph6},
                  {"n", g.n()},
                  {"m", g.edge_count()},
                  {"quadratically_generated", quad ? nlohmann::json(*quad) : nlohmann::json(nullptr)},
                  {"even_antihole", even_antihole ? nlohmann::json(*even_antihole) : nlohmann::json(nullptr)},
                  {"odd_stretcher", stretcher ? nlohmann::json(*stretcher) : nlohmann::json(nullptr)},
                  {"verdict", kBucketNames[out.bucket]}};
    if (opts.check_conjecture1)
        out.report["conjecture1"] =
            out.c1_checked ? nlohmann::json(out.c1_ok ? "holds" : "FAILS") : nlohmann::json(nullptr);
    return out;
}

nlohmann::json budgets_to_json(const Budgets& b) {
    return {{"stable_set_cap", b.stable_set_cap},
            {"gb_var_budget", b.gb_var_budget},
            {"gb_step_budget", b.gb_step_budget},
            {"search_steps", b.search_steps},
            {"perfect_order_cap", b.perfect_order_cap},
            {"contractile_cap", b.contractile_cap},
            {"gsp_cap", b.gsp_cap},
            {"cutset_cap", b.cutset_cap},
            {"fiber_degree", b.fiber_degree},
            {"even_pair_vertex_cap", b.even_pair_vertex_cap}};
}

Budgets budgets_from_json(const nlohmann::json& j) {
    Budgets b;
    b.stable_set_cap = j.at("stable_set_cap").get<int>();
    b.gb_var_budget = j.at("gb_var_budget").get<int>();
    b.gb_step_budget = j.at("gb_step_budget").get<long long>();
    b.search_steps = j.at("search_steps").get<long long>();
    b.perfect_order_cap = j.at("perfect_order_cap").get<int>();
    b.contractile_cap = j.at("contractile_cap").get<int>();
    b.gsp_cap = j.at("gsp_cap").get<int>();
    b.cutset_cap = j.at("cutset_cap").get<int>();
    b.fiber_degree = j.at("fiber_degree").get<int>();
    b.even_pair_vertex_cap = j.at("even_pair_vertex_cap").get<int>();
    return b;
}

std::vector<Graph> load_source(const SweepOptions& opts, std::string* source_name) {
    std::vector<Graph> graphs;
    if (!opts.input_path.empty()) {
        *source_name = "file:" + opts.input_path;
        std::ifstream in(opts.input_path);
        if (!in) throw input_error("cannot open input file '" + opts.input_path + "'");
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
            try {
                graphs.push_back(parse_graph_line(line));
            } catch (const input_error& e) {
                throw input_error("line " + std::to_string(lineno) + ": " + e.what());
            }
        }
        return graphs;
    }
    if (opts.max_n < 1 || opts.max_n > 7)
        throw input_error("internal enumeration covers n in 1..7; supply larger graphs via --input");
    *source_name = "enumerate:n<=" + std::to_string(opts.max_n);
    for (int n = 1; n <= opts.max_n; ++n)
        enumerate_small_graphs(n, true, [&](const Graph& g) { graphs.push_back(g); });
    return graphs;
}

void write_checkpoint(const std::string& path, const SweepState& state) {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw input_error("cannot write checkpoint file '" + path + "'");
    out << sweep_state_to_json(state).dump() << "\n";
}

} // namespace

nlohmann::json sweep_state_to_json(const SweepState& s) {
    nlohmann::json counters = nlohmann::json::array();
    for (const SweepCounterexample& c : s.counterexamples)
        counters.push_back({{"kind", c.kind}, {"graph6", c.graph6}});
    return {{"schema", 1},
            {"source", s.source},
            {"cursor", s.cursor},
            {"tallies",
             {{"both_true", s.tallies.both_true},
              {"both_false", s.tallies.both_false},
              {"counterexample_a", s.tallies.counterexample_a},
              {"counterexample_b", s.tallies.counterexample_b},
              {"skipped", s.tallies.skipped},
              {"conjecture1_checked", s.tallies.conjecture1_checked},
              {"conjecture1_failed", s.tallies.conjecture1_failed}}},
            {"counterexamples", counters},
            {"budgets", budgets_to_json(s.budgets)},
            {"rng_state", s.rng_state},
            {"check_conjecture1", s.check_conjecture1},
            {"finished", s.finished}};
}

SweepState sweep_state_from_json(const nlohmann::json& j) {
    try {
        if (j.at("schema").get<int>() != 1) throw input_error("unknown checkpoint schema");
        SweepState s;
        s.source = j.at("source").get<std::string>();
        s.cursor = j.at("cursor").get<long long>();
        const nlohmann::json& t = j.at("tallies");
        s.tallies.both_true = t.at("both_true").get<long long>();
        s.tallies.both_false = t.at("both_false").get<long long>();
        s.tallies.counterexample_a = t.at("counterexample_a").get<long long>();
        s.tallies.counterexample_b = t.at("counterexample_b").get<long long>();
        s.tallies.skipped = t.at("skipped").get<long long>();
        s.tallies.conjecture1_checked = t.at("conjecture1_checked").get<long long>();
        s.tallies.conjecture1_failed = t.at("conjecture1_failed").get<long long>();
        for (const nlohmann::json& c : j.at("counterexamples"))
            s.counterexamples.push_back(
                {c.at("kind").get<std::string>(), c.at("graph6").get<std::string>()});
        s.budgets = budgets_from_json(j.at("budgets"));
        s.rng_state = j.at("rng_state").get<std::string>();
        s.check_conjecture1 = j.at("check_conjecture1").get<bool>();
        s.finished = j.at("finished").get<bool>();
        if (s.cursor < 0 || s.tallies.total() != s.cursor)
            throw input_error("corrupted checkpoint: tallies do not sum to the cursor");
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("corrupted checkpoint: ") + e.what());
    }
}

SweepState run_sweep(const SweepOptions& opts) {
    std::string source_name;
    std::vector<Graph> graphs = load_source(opts, &source_name);

    SweepState state;
    state.source = source_name;
    state.budgets = opts.budgets;
    state.rng_state = "seed:" + std::to_string(opts.seed);
    state.check_conjecture1 = opts.check_conjecture1;
    if (!opts.resume_path.empty()) {
        std::ifstream in(opts.resume_path);
        if (!in) throw input_error("cannot open checkpoint '" + opts.resume_path + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw input_error(std::string("corrupted checkpoint: ") + e.what());
        }
        state = sweep_state_from_json(j);
        if (state.source != source_name)
            throw input_error("checkpoint was written for source '" + state.source +
                              "', not for '" + source_name + "'");
        if (state.cursor > static_cast<long long>(graphs.size()))
            throw input_error("corrupted checkpoint: cursor is past the end of the source");
    }

    std::ofstream report_out;
    if (!opts.report_path.empty()) {
        report_out.open(opts.report_path, state.cursor == 0 ? std::ios::trunc : std::ios::app);
        if (!report_out) throw input_error("cannot write report file '" + opts.report_path + "'");
    }

    long long todo = static_cast<long long>(graphs.size()) - state.cursor;
    if (opts.stop_after >= 0) todo = std::min(todo, opts.stop_after);
    SharedCaches caches;
    int jobs = std::max(1, opts.jobs);
    long long chunk_size = std::max<long long>(1, opts.checkpoint_every);

    long long done = 0;
    while (done < todo) {
        long long chunk = std::min(chunk_size, todo - done);
        long long base = state.cursor;
        std::vector<GraphVerdict> verdicts(static_cast<std::size_t>(chunk));
        std::atomic<long long> next{0};
        auto worker = [&] {
            for (;;) {
                long long i = next.fetch_add(1);
                if (i >= chunk) return;
                verdicts[static_cast<std::size_t>(i)] = evaluate_graph(
                    graphs[static_cast<std::size_t>(base + i)], opts, caches);
            }
        };
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
            for (std::thread& t : pool) t.join();
        }
        // Single-writer fold, in source order.
        for (const GraphVerdict& v : verdicts) {
            switch (v.bucket) {
            case kBothTrue: ++state.tallies.both_true; break;
            case kBothFalse: ++state.tallies.both_false; break;
            case kCounterA:
                ++state.tallies.counterexample_a;
                state.counterexamples.push_back({"COUNTEREXAMPLE-A", v.graph6});
                break;
            case kCounterB:
                ++state.tallies.counterexample_b;
                state.counterexamples.push_back({"COUNTEREXAMPLE-B", v.graph6});
                break;
            case kSkipped: ++state.tallies.skipped; break;
            }
            if (v.c1_checked) {
                ++state.tallies.conjecture1_checked;
                if (!v.c1_ok) {
                    ++state.tallies.conjecture1_failed;
                    state.counterexamples.push_back({"CONJECTURE-1", v.graph6});
                }
            }
            if (report_out.is_open()) report_out << v.report.dump() << "\n";
        }
        done += chunk;
        state.cursor += chunk;
        state.finished = (state.cursor == static_cast<long long>(graphs.size()));
        write_checkpoint(opts.checkpoint_path, state);
    }
    state.finished = (state.cursor == static_cast<long long>(graphs.size()));
    if (todo == 0) write_checkpoint(opts.checkpoint_path, state);
    return state;
}

} // namespace stellate
