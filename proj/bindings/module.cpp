// Python bindings.  Vertices are 0-based here, matching the C++ API; only the
// CLI and file formats speak 1-based.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

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

namespace py = pybind11;
using namespace stellate;

namespace {

Parity parity_of(const std::string& name) {
    if (name == "any") return Parity::any;
    if (name == "odd") return Parity::odd;
    if (name == "even") return Parity::even;
    throw input_error("parity must be any|odd|even, got '" + name + "'");
}

std::vector<std::vector<int>> sets_as_lists(const std::vector<vset>& sets) {
    std::vector<std::vector<int>> out;
    out.reserve(sets.size());
    for (vset s : sets) out.push_back(set_to_vector(s));
    return out;
}

py::object binomial_as_sets(const Binomial& b, const StableSetIndex& idx) {
    auto side = [&](const Monomial& mono) {
        std::vector<std::vector<int>> out;
        for (int var = 0; var < static_cast<int>(mono.e.size()); ++var)
            for (int k = 0; k < mono.e[static_cast<std::size_t>(var)]; ++k)
                out.push_back(set_to_vector(idx.sets[static_cast<std::size_t>(var)]));
        return out;
    };
    return py::make_tuple(side(b.lead), side(b.tail));
}

} // namespace

PYBIND11_MODULE(_stellate, m) {
    m.doc() = "Toric ideals of stable set polytopes and perfect-graph structure";

    py::register_exception<input_error>(m, "InputError");
    py::register_exception<budget_error>(m, "BudgetError");

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::n)
        .def("edge_count", &Graph::edge_count)
        .def("add_edge", &Graph::add_edge)
        .def("adjacent", &Graph::adjacent)
        .def("edges", &Graph::edges)
        .def("degree", &Graph::degree)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("parse_graph6", &parse_graph6);
    m.def("encode_graph6", &encode_graph6);
    m.def("graph_from_json", [](const std::string& text) {
        return graph_from_json(nlohmann::json::parse(text));
    });
    m.def("graph_to_json", [](const Graph& g) { return graph_to_json(g).dump(); });
    m.def("complement", &complement);
    m.def("is_connected", &is_connected);
    m.def("canonical_key", [](const Graph& g) {
        std::string key = canonical_key(g);
        return py::bytes(key);
    });

    m.def("hole", &hole, py::arg("k"));
    m.def("antihole", &antihole, py::arg("k"));
    m.def(
        "odd_stretcher",
        [](int s, int t, int u) { return odd_stretcher({s, t, u}); },
        py::arg("s"), py::arg("t"), py::arg("u"));
    m.def(
        "stretcher_witness_sets",
        [](int s, int t, int u) {
            auto sets = stretcher_witness_sets({s, t, u});
            return sets_as_lists(std::vector<vset>(sets.begin(), sets.end()));
        },
        py::arg("s"), py::arg("t"), py::arg("u"));
    m.def("type1", &type1, py::arg("bipartite_part"), py::arg("clique_size"));
    m.def("type2", &type2, py::arg("part_sizes"));
    m.def(
        "random_family",
        [](const std::string& kind, int n, std::uint64_t seed) {
            FamilyKind k;
            if (kind == "chordal")
                k = FamilyKind::chordal;
            else if (kind == "bipartite")
                k = FamilyKind::bipartite;
            else if (kind == "meyniel")
                k = FamilyKind::meyniel;
            else if (kind == "comparability")
                k = FamilyKind::comparability;
            else
                throw input_error("unknown family '" + kind + "'");
            return random_family(k, n, seed);
        },
        py::arg("kind"), py::arg("n"), py::arg("seed"));

    m.def(
        "find_hole",
        [](const Graph& g, const std::string& parity, int min_len) -> py::object {
            auto h = find_hole(g, parity_of(parity), min_len);
            if (!h) return py::none();
            return py::cast(h->cycle);
        },
        py::arg("g"), py::arg("parity") = "any", py::arg("min_len") = 4);
    m.def(
        "find_antihole",
        [](const Graph& g, const std::string& parity) -> py::object {
            auto h = find_antihole(g, parity_of(parity));
            if (!h) return py::none();
            return py::cast(h->cycle);
        },
        py::arg("g"), py::arg("parity") = "any");
    m.def(
        "find_odd_stretcher",
        [](const Graph& g) -> py::object {
            auto st = find_odd_stretcher(g);
            if (!st) return py::none();
            py::dict d;
            d["s"] = st->spec.s;
            d["t"] = st->spec.t;
            d["u"] = st->spec.u;
            d["map"] = st->map;
            return d;
        },
        py::arg("g"));
    m.def(
        "is_meyniel", [](const Graph& g) { return is_meyniel(g).meyniel; }, py::arg("g"));
    m.def(
        "is_perfect", [](const Graph& g) { return is_perfect(g).perfect; }, py::arg("g"));
    m.def(
        "find_perfect_ordering",
        [](const Graph& g, int cap) -> py::object {
            auto po = find_perfect_ordering(g, cap);
            if (!po) return py::none();
            return py::cast(po->order);
        },
        py::arg("g"), py::arg("cap") = kDefaultPerfectOrderCap);
    m.def(
        "verify_perfect_ordering",
        [](const Graph& g, const std::vector<int>& order) -> py::object {
            auto obstruction = verify_perfect_ordering(g, PerfectOrdering{order});
            if (!obstruction) return py::none();
            return py::cast(std::vector<int>(obstruction->begin(), obstruction->end()));
        },
        py::arg("g"), py::arg("order"));
    m.def(
        "is_even_pair",
        [](const Graph& g, int x, int y) { return is_even_pair(g, x, y).even_pair; },
        py::arg("g"), py::arg("x"), py::arg("y"));
    m.def(
        "find_clique_cutset",
        [](const Graph& g, int cap) -> py::object {
            auto split = find_clique_cutset(g, cap);
            if (!split) return py::none();
            py::dict d;
            d["cutset"] = set_to_vector(split->cutset);
            d["side_a"] = set_to_vector(split->side_a);
            d["side_b"] = set_to_vector(split->side_b);
            return d;
        },
        py::arg("g"), py::arg("cap") = kDefaultCutsetCap);
    m.def(
        "is_generalized_split",
        [](const Graph& g, int cap) -> py::object {
            auto part = is_generalized_split(g, cap);
            if (!part) return py::none();
            py::dict d;
            d["side"] = part->on_complement ? "complement" : "graph";
            d["c0"] = set_to_vector(part->c0);
            d["cliques"] = sets_as_lists(part->cliques);
            return d;
        },
        py::arg("g"), py::arg("cap") = kDefaultGspCap);

    m.def(
        "hertz_color",
        [](const Graph& g, int seed) {
            HertzResult hz = hertz_color(g, seed);
            py::dict d;
            d["coloring"] = hz.coloring;
            d["colors_used"] = hz.colors_used;
            d["stable_set"] = set_to_vector(hz.stable_set);
            d["s_found"] = hz.s_found;
            d["stages"] = static_cast<int>(hz.stages.size());
            return d;
        },
        py::arg("g"), py::arg("seed") = 0);
    m.def(
        "is_even_contractile",
        [](const Graph& g, int cap) -> py::object {
            auto trace = is_even_contractile(g, nullptr, cap);
            if (!trace) return py::none();
            std::vector<std::pair<int, int>> pairs;
            for (const ContractionStep& s : trace->steps) pairs.emplace_back(s.v, s.w);
            return py::cast(pairs);
        },
        py::arg("g"), py::arg("cap") = kDefaultContractileCap);
    m.def(
        "is_perfectly_contractile",
        [](const Graph& g, int cap) {
            auto pc = is_perfectly_contractile(g, nullptr, cap);
            return py::make_tuple(pc.perfectly_contractile, set_to_vector(pc.failing_subgraph));
        },
        py::arg("g"), py::arg("cap") = kDefaultContractileCap);

    m.def(
        "stable_sets",
        [](const Graph& g, int cap) { return sets_as_lists(enumerate_stable_sets(g, cap).sets); },
        py::arg("g"), py::arg("cap") = kDefaultStableSetCap);
    m.def(
        "toric_gb",
        [](const Graph& g, const std::string& order_name) {
            StableSetIndex idx = enumerate_stable_sets(g);
            GroebnerBasis gb;
            if (order_name == "default") {
                gb = toric_groebner(idx, MonomialOrder::grevlex(idx.size()));
            } else if (order_name == "theorem32") {
                auto po = find_perfect_ordering(g);
                if (!po) throw input_error("theorem32 order needs a perfectly orderable graph");
                Theorem32Setup setup = theorem32_order(g, *po);
                GroebnerBasis gb32 = toric_groebner(setup.index, setup.order);
                py::list elems;
                for (const Binomial& b : gb32.elements) elems.append(binomial_as_sets(b, setup.index));
                InitialIdealProfile p = initial_ideal_profile(gb32);
                py::dict d;
                d["elements"] = elems;
                d["max_degree"] = p.max_degree;
                d["all_quadratic"] = p.all_quadratic;
                d["all_squarefree"] = p.all_squarefree;
                d["vertex_map"] = setup.vertex_map;
                return d;
            } else {
                throw input_error("order must be default|theorem32");
            }
            py::list elems;
            for (const Binomial& b : gb.elements) elems.append(binomial_as_sets(b, idx));
            InitialIdealProfile p = initial_ideal_profile(gb);
            py::dict d;
            d["elements"] = elems;
            d["max_degree"] = p.max_degree;
            d["all_quadratic"] = p.all_quadratic;
            d["all_squarefree"] = p.all_squarefree;
            return d;
        },
        py::arg("g"), py::arg("order") = "default");
    m.def(
        "is_quadratically_generated",
        [](const Graph& g) {
            StableSetIndex idx = enumerate_stable_sets(g);
            QuadGenResult qr = is_quadratically_generated(idx);
            py::object witness = py::none();
            if (qr.witness) witness = binomial_as_sets(*qr.witness, idx);
            return py::make_tuple(qr.quadratically_generated, witness);
        },
        py::arg("g"));
    m.def(
        "quadratic_generation_oracle",
        [](const Graph& g, int max_degree) {
            StableSetIndex idx = enumerate_stable_sets(g);
            return quadratic_generation_oracle(idx, max_degree);
        },
        py::arg("g"), py::arg("max_degree") = kDefaultFiberDegree);

    m.def(
        "analyze_json",
        [](const Graph& g) { return report_to_json(analyze(g)).dump(); }, py::arg("g"));
    m.def(
        "sweep_json",
        [](int max_n, bool check_conjecture1, int jobs) {
            SweepOptions opts;
            opts.max_n = max_n;
            opts.check_conjecture1 = check_conjecture1;
            opts.jobs = jobs;
            return sweep_state_to_json(run_sweep(opts)).dump();
        },
        py::arg("max_n") = 5, py::arg("check_conjecture1") = false, py::arg("jobs") = 1);
}
