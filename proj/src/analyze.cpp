#include "stellate/analyze.hpp"

#include <chrono>
#include <cstdlib>
#include <map>
#include <sstream>

#include "stellate/canonical.hpp"
#include "stellate/errors.hpp"
#include "stellate/families.hpp"
#include "stellate/graph_io.hpp"

namespace stellate {

namespace {

long long env_number(const char* name, long long fallback) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return fallback;
    char* end = nullptr;
    long long value = std::strtoll(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 0)
        throw input_error(std::string(name) + ": expected a nonnegative integer, got '" + raw + "'");
    return value;
}

} // namespace

Budgets Budgets::from_env(Budgets base) {
    base.stable_set_cap = static_cast<int>(env_number("STELLATE_BUDGET_STABLE_SETS", base.stable_set_cap));
    base.gb_var_budget = static_cast<int>(env_number("STELLATE_BUDGET_GB_VARS", base.gb_var_budget));
    base.gb_step_budget = env_number("STELLATE_BUDGET_GB_STEPS", base.gb_step_budget);
    base.search_steps = env_number("STELLATE_BUDGET_SEARCH_STEPS", base.search_steps);
    base.perfect_order_cap = static_cast<int>(env_number("STELLATE_BUDGET_PERFECT_ORDER", base.perfect_order_cap));
    base.contractile_cap = static_cast<int>(env_number("STELLATE_BUDGET_CONTRACTILE", base.contractile_cap));
    base.gsp_cap = static_cast<int>(env_number("STELLATE_BUDGET_GSP", base.gsp_cap));
    base.cutset_cap = static_cast<int>(env_number("STELLATE_BUDGET_CUTSET", base.cutset_cap));
    base.fiber_degree = static_cast<int>(env_number("STELLATE_BUDGET_FIBER_DEGREE", base.fiber_degree));
    base.even_pair_vertex_cap =
        static_cast<int>(env_number("STELLATE_BUDGET_EVEN_PAIR", base.even_pair_vertex_cap));
    return base;
}

std::vector<DecompositionPiece> decompose_graph(const Graph& g, int cutset_cap,
                                                DecompositionSummary* summary) {
    std::vector<DecompositionPiece> atoms;
    std::vector<DecompositionPiece> work;
    for (vset comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        work.push_back({std::move(sub.graph), std::move(sub.vertex_map)});
    }
    while (!work.empty()) {
        DecompositionPiece piece = std::move(work.back());
        work.pop_back();
        std::optional<CliqueCutsetSplit> split;
        if (piece.graph.n() <= cutset_cap) {
            split = find_clique_cutset(piece.graph, cutset_cap);
        } else if (summary) {
            summary->search_complete = false;
        }
        if (!split) {
            if (summary) {
                vset mask = 0;
                for (int v : piece.orig) mask |= bit(v);
                summary->atoms.push_back({mask, is_type1(piece.graph), is_type2(piece.graph)});
            }
            atoms.push_back(std::move(piece));
            continue;
        }
        if (summary) {
            vset cut = 0;
            for_each_bit(split->cutset, [&](int v) { cut |= bit(piece.orig[static_cast<std::size_t>(v)]); });
            summary->cutsets.push_back(cut);
        }
        for (vset side : {split->side_a | split->cutset, split->side_b | split->cutset}) {
            auto sub = induced_subgraph(piece.graph, side);
            std::vector<int> orig;
            orig.reserve(sub.vertex_map.size());
            for (int v : sub.vertex_map) orig.push_back(piece.orig[static_cast<std::size_t>(v)]);
            work.push_back({std::move(sub.graph), std::move(orig)});
        }
    }
    if (summary) {
        summary->all_atoms_elementary = summary->search_complete;
        for (const AtomSummary& a : summary->atoms)
            if (!a.type1 && !a.type2) summary->all_atoms_elementary = false;
    }
    return atoms;
}

namespace {

// Run one stage, catch its budget overruns in-band, time it.
template <typename F>
void stage(AnalysisReport& report, const std::string& name, F&& body) {
    auto start = std::chrono::steady_clock::now();
    try {
        body();
    } catch (const budget_error& e) {
        report.skipped[name] = e.what();
    }
    auto end = std::chrono::steady_clock::now();
    report.timing_ms[name] = std::chrono::duration<double, std::milli>(end - start).count();
}

ReportWitness witness_from_piece(const Binomial& b, const StableSetIndex& idx,
                                 const std::vector<int>& orig) {
    auto lift = [&](const Monomial& mono) {
        std::vector<vset> out;
        for (int var = 0; var < static_cast<int>(mono.e.size()); ++var) {
            vset original = 0;
            for_each_bit(idx.sets[static_cast<std::size_t>(var)],
                         [&](int v) { original |= bit(orig[static_cast<std::size_t>(v)]); });
            for (int k = 0; k < mono.e[static_cast<std::size_t>(var)]; ++k) out.push_back(original);
        }
        return out;
    };
    return {lift(b.lead), lift(b.tail)};
}

} // namespace

AnalysisReport analyze(const Graph& g, const Budgets& budgets) {
    AnalysisReport report;
    report.graph6 = encode_graph6(g);
    report.n = g.n();
    report.m = g.edge_count();
    report.connected = is_connected(g);

    stage(report, "holes", [&] {
        report.odd_hole = find_hole(g, Parity::odd, 5, budgets.search_steps);
    });
    stage(report, "antiholes", [&] {
        report.odd_antihole = find_antihole(g, Parity::odd, budgets.search_steps);
        report.even_antihole = find_antihole(g, Parity::even, budgets.search_steps);
    });
    stage(report, "stretcher", [&] {
        report.odd_stretcher = find_odd_stretcher(g, budgets.search_steps);
    });
    stage(report, "perfect", [&] {
        report.perfect = is_perfect(g, budgets.search_steps).perfect;
    });
    stage(report, "meyniel", [&] { report.meyniel = is_meyniel(g, budgets.search_steps).meyniel; });
    stage(report, "perfect_order", [&] {
        auto po = find_perfect_ordering(g, budgets.perfect_order_cap);
        report.perfectly_orderable = po.has_value();
        if (po) report.ordering = std::move(po);
    });
    stage(report, "gsp", [&] {
        auto part = is_generalized_split(g, budgets.gsp_cap);
        report.generalized_split = part.has_value();
        if (part) report.gsp_partition = std::move(part);
    });
    stage(report, "dominating", [&] {
        if (report.n == 0) return;
        auto s = find_dominating_stable_set(g, -1, budgets.stable_set_cap);
        report.has_dominating_stable_set = s.has_value();
        if (s) report.dominating_stable_set = *s;
    });

    // Decomposition drives both the clique-separable evidence and the
    // quadratic-generation conjunction (components, then clique cutsets).
    DecompositionSummary summary;
    std::vector<DecompositionPiece> pieces;
    stage(report, "decomposition", [&] {
        pieces = decompose_graph(g, budgets.cutset_cap, &summary);
        if (summary.search_complete) {
            report.decomposition = summary;
        } else {
            report.decomposition = summary;
            throw budget_error("clique cutset search skipped on a piece over the vertex cap");
        }
    });

    stage(report, "stable_sets", [&] {
        report.stable_set_count = enumerate_stable_sets(g, budgets.stable_set_cap).size();
    });

    stage(report, "quadgen", [&] {
        bool all_true = true;
        std::map<std::string, bool> memo; // canonical key -> verdict
        for (const DecompositionPiece& piece : pieces) {
            std::string key = canonical_key(piece.graph);
            auto it = memo.find(key);
            if (it == memo.end()) {
                StableSetIndex idx = enumerate_stable_sets(piece.graph, budgets.stable_set_cap);
                bool verdict = is_quadratically_generated(idx, budgets.toric()).quadratically_generated;
                it = memo.emplace(key, verdict).first;
            }
            if (!it->second) {
                // Redo on this piece: a memoized witness would index the stable
                // sets of the isomorphic piece it was computed for.
                StableSetIndex idx = enumerate_stable_sets(piece.graph, budgets.stable_set_cap);
                QuadGenResult qr = is_quadratically_generated(idx, budgets.toric());
                report.quadratically_generated = false;
                if (qr.witness) report.witness = witness_from_piece(*qr.witness, idx, piece.orig);
                all_true = false;
                break;
            }
        }
        if (all_true) report.quadratically_generated = true;
    });

    stage(report, "gb_default", [&] {
        StableSetIndex idx = enumerate_stable_sets(g, budgets.stable_set_cap);
        GroebnerBasis gb = toric_groebner(idx, MonomialOrder::grevlex(idx.size()), budgets.toric());
        report.profiles.push_back(
            {"default", static_cast<int>(gb.elements.size()), initial_ideal_profile(gb)});
    });
    stage(report, "gb_theorem32", [&] {
        if (!report.ordering) return;
        Theorem32Setup setup = theorem32_order(g, *report.ordering, budgets.stable_set_cap);
        GroebnerBasis gb = toric_groebner(setup.index, setup.order, budgets.toric());
        report.profiles.push_back(
            {"theorem32", static_cast<int>(gb.elements.size()), initial_ideal_profile(gb)});
    });

    stage(report, "even_pairs", [&] {
        if (report.n > budgets.even_pair_vertex_cap)
            throw budget_error("even-pair scan capped at " +
                               std::to_string(budgets.even_pair_vertex_cap) + " vertices");
        std::vector<std::array<int, 2>> pairs;
        for (int x = 0; x < report.n; ++x)
            for (int y = x + 1; y < report.n; ++y)
                if (!g.adjacent(x, y) && is_even_pair(g, x, y, budgets.search_steps).even_pair)
                    pairs.push_back({x, y});
        report.even_pairs = std::move(pairs);
    });

    stage(report, "hertz", [&] {
        if (report.n == 0) return;
        HertzResult hz = hertz_color(g, 0);
        HertzSummary hs;
        hs.seed = 0;
        hs.colors_used = hz.colors_used;
        hs.clique_number = clique_number(g);
        hs.proper = true;
        for (auto [u, v] : g.edges())
            if (hz.coloring[static_cast<std::size_t>(u)] == hz.coloring[static_cast<std::size_t>(v)])
                hs.proper = false;
        hs.stable_set = hz.stable_set;
        hs.meets_all_maximal_cliques = true;
        for (vset clique : enumerate_maximal_cliques(g))
            if (!(clique & hz.stable_set)) hs.meets_all_maximal_cliques = false;
        report.hertz = hs;
    });

    stage(report, "contractile", [&] {
        auto pc = is_perfectly_contractile(g, nullptr, budgets.contractile_cap);
        report.perfectly_contractile = pc.perfectly_contractile;
        report.contractile_failing_subgraph = pc.failing_subgraph;
    });

    // Conjecture-2 consistency, never silent: quadratic generation must rule
    // out even antiholes and odd stretchers; a clean graph must be quadratic.
    bool forbidden_searched = !report.skipped.count("antiholes") && !report.skipped.count("stretcher");
    if (report.quadratically_generated.has_value() && forbidden_searched) {
        bool forbidden = report.even_antihole.has_value() || report.odd_stretcher.has_value();
        if (*report.quadratically_generated && forbidden)
            report.counterexample_flags.push_back("COUNTEREXAMPLE-A");
        if (!*report.quadratically_generated && !forbidden)
            report.counterexample_flags.push_back("COUNTEREXAMPLE-B");
    }
    return report;
}

namespace {

nlohmann::json vertex_list(const std::vector<int>& vs) {
    nlohmann::json arr = nlohmann::json::array();
    for (int v : vs) arr.push_back(v + 1);
    return arr;
}

nlohmann::json mask_list(vset mask) { return vertex_list(set_to_vector(mask)); }

nlohmann::json sets_list(const std::vector<vset>& sets) {
    nlohmann::json arr = nlohmann::json::array();
    for (vset s : sets) arr.push_back(mask_list(s));
    return arr;
}

template <typename T>
nlohmann::json opt(const std::optional<T>& value) {
    if (!value) return nullptr;
    return *value;
}

} // namespace

nlohmann::json report_to_json(const AnalysisReport& r) {
    nlohmann::json j;
    j["schema"] = 1;
    j["graph"] = {{"graph6", r.graph6}, {"n", r.n}, {"m", r.m}, {"connected", r.connected}};

    nlohmann::json classes;
    classes["perfect"] = opt(r.perfect);
    classes["meyniel"] = opt(r.meyniel);
    classes["perfectly_orderable"] = opt(r.perfectly_orderable);
    classes["ordering"] = r.ordering ? vertex_list(r.ordering->order) : nlohmann::json(nullptr);
    classes["generalized_split"] = opt(r.generalized_split);
    if (r.gsp_partition) {
        nlohmann::json part;
        part["side"] = r.gsp_partition->on_complement ? "complement" : "graph";
        part["c0"] = mask_list(r.gsp_partition->c0);
        part["cliques"] = sets_list(r.gsp_partition->cliques);
        classes["gsp_partition"] = part;
    } else {
        classes["gsp_partition"] = nullptr;
    }
    if (r.decomposition) {
        nlohmann::json d;
        d["cutsets"] = sets_list(r.decomposition->cutsets);
        nlohmann::json atoms = nlohmann::json::array();
        for (const AtomSummary& a : r.decomposition->atoms)
            atoms.push_back({{"vertices", mask_list(a.vertices)}, {"type1", a.type1}, {"type2", a.type2}});
        d["atoms"] = atoms;
        d["all_atoms_elementary"] = r.decomposition->all_atoms_elementary;
        d["search_complete"] = r.decomposition->search_complete;
        classes["clique_separable"] = d;
    } else {
        classes["clique_separable"] = nullptr;
    }
    classes["strongly_perfect_evidence"] = opt(r.has_dominating_stable_set);
    classes["dominating_stable_set"] =
        r.has_dominating_stable_set.value_or(false) ? mask_list(r.dominating_stable_set) : nlohmann::json(nullptr);
    j["classes"] = classes;

    nlohmann::json certs;
    certs["odd_hole"] =
        r.odd_hole ? nlohmann::json{{"hole", vertex_list(r.odd_hole->cycle)}} : nlohmann::json(nullptr);
    certs["odd_antihole"] = r.odd_antihole
                                ? nlohmann::json{{"antihole", vertex_list(r.odd_antihole->cycle)}}
                                : nlohmann::json(nullptr);
    certs["even_antihole"] = r.even_antihole
                                 ? nlohmann::json{{"antihole", vertex_list(r.even_antihole->cycle)}}
                                 : nlohmann::json(nullptr);
    if (r.odd_stretcher) {
        certs["odd_stretcher"] = {{"stretcher",
                                   {{"s", r.odd_stretcher->spec.s},
                                    {"t", r.odd_stretcher->spec.t},
                                    {"u", r.odd_stretcher->spec.u},
                                    {"map", vertex_list(r.odd_stretcher->map)}}}};
    } else {
        certs["odd_stretcher"] = nullptr;
    }
    j["certificates"] = certs;

    nlohmann::json toric;
    toric["stable_set_count"] = opt(r.stable_set_count);
    nlohmann::json profiles = nlohmann::json::array();
    for (const OrderProfile& p : r.profiles)
        profiles.push_back({{"order", p.order},
                            {"gb_size", p.gb_size},
                            {"max_degree", p.profile.max_degree},
                            {"all_quadratic", p.profile.all_quadratic},
                            {"all_squarefree", p.profile.all_squarefree}});
    toric["profiles"] = profiles;
    toric["quadratically_generated"] = opt(r.quadratically_generated);
    if (r.witness) {
        toric["witness"] = {{"lead", sets_list(r.witness->lead)}, {"tail", sets_list(r.witness->tail)}};
    } else {
        toric["witness"] = nullptr;
    }
    j["toric"] = toric;

    nlohmann::json contraction;
    if (r.even_pairs) {
        nlohmann::json pairs = nlohmann::json::array();
        for (const auto& p : *r.even_pairs) pairs.push_back({p[0] + 1, p[1] + 1});
        contraction["even_pairs"] = pairs;
    } else {
        contraction["even_pairs"] = nullptr;
    }
    if (r.hertz) {
        contraction["hertz"] = {{"seed", r.hertz->seed + 1},
                                {"colors_used", r.hertz->colors_used},
                                {"clique_number", r.hertz->clique_number},
                                {"proper", r.hertz->proper},
                                {"stable_set", mask_list(r.hertz->stable_set)},
                                {"meets_all_maximal_cliques", r.hertz->meets_all_maximal_cliques}};
    } else {
        contraction["hertz"] = nullptr;
    }
    contraction["perfectly_contractile"] = opt(r.perfectly_contractile);
    contraction["failing_subgraph"] = r.perfectly_contractile.has_value() && !*r.perfectly_contractile
                                          ? mask_list(r.contractile_failing_subgraph)
                                          : nlohmann::json(nullptr);
    j["contraction"] = contraction;

    j["counterexample_flags"] = r.counterexample_flags;
    j["skipped"] = r.skipped;
    j["timing_ms"] = r.timing_ms;
    return j;
}

namespace {

std::string tri(const std::optional<bool>& v) {
    if (!v) return "skipped";
    return *v ? "true" : "false";
}

} // namespace

std::string report_to_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "graph " << r.graph6 << "  n=" << r.n << " m=" << r.m
        << (r.connected ? " connected" : " disconnected") << "\n";
    out << "  perfect=" << tri(r.perfect) << " meyniel=" << tri(r.meyniel)
        << " perfectly_orderable=" << tri(r.perfectly_orderable)
        << " generalized_split=" << tri(r.generalized_split) << "\n";
    out << "  odd_hole=" << (r.odd_hole ? "present" : "absent")
        << " odd_antihole=" << (r.odd_antihole ? "present" : "absent")
        << " even_antihole=" << (r.even_antihole ? "present" : "absent")
        << " odd_stretcher=" << (r.odd_stretcher ? "present" : "absent") << "\n";
    if (r.stable_set_count)
        out << "  stable_sets=" << *r.stable_set_count;
    else
        out << "  stable_sets=skipped";
    out << " quadratically_generated=" << tri(r.quadratically_generated) << "\n";
    for (const OrderProfile& p : r.profiles)
        out << "  gb[" << p.order << "]: size=" << p.gb_size << " max_degree=" << p.profile.max_degree
            << " all_quadratic=" << (p.profile.all_quadratic ? "true" : "false")
            << " all_squarefree=" << (p.profile.all_squarefree ? "true" : "false") << "\n";
    if (r.hertz)
        out << "  hertz: colors=" << r.hertz->colors_used << " omega=" << r.hertz->clique_number
            << " proper=" << (r.hertz->proper ? "true" : "false") << "\n";
    out << "  perfectly_contractile=" << tri(r.perfectly_contractile) << "\n";
    for (const std::string& flag : r.counterexample_flags) out << "  !! " << flag << "\n";
    if (!r.skipped.empty()) {
        out << "  skipped:";
        for (const auto& [name, why] : r.skipped) out << " " << name;
        out << "\n";
    }
    return out.str();
}

} // namespace stellate
