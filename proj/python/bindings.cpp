#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tricover/claims.hpp"
#include "tricover/constructions.hpp"
#include "tricover/covering.hpp"
#include "tricover/errors.hpp"
#include "tricover/io.hpp"
#include "tricover/patterns.hpp"
#include "tricover/search.hpp"

namespace py = pybind11;
using namespace tricover;

namespace {

SearchOptions make_options(std::optional<std::string> mode, int shards, bool randomized,
                           long long trials, std::uint64_t seed) {
    SearchOptions opts;
    if (mode) {
        if (*mode == "all_labeled")
            opts.mode = EnumMode::all_labeled;
        else if (*mode == "canonical_only")
            opts.mode = EnumMode::canonical_only;
        else
            fail(errc::bad_arguments, "mode must be 'all_labeled' or 'canonical_only'");
    }
    opts.shards = shards;
    opts.randomized = randomized;
    opts.trials = trials;
    opts.seed = seed;
    return opts;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Loose-triangle covering toolkit for 3-uniform hypergraphs";
    m.attr("__version__") = kToolkitVersion;

    py::register_exception<Error>(m, "ToolkitError");

    py::class_<ThreeGraph>(m, "ThreeGraph")
        .def(py::init<>())
        .def(py::init<int, std::vector<Triple>>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &ThreeGraph::vertex_count)
        .def_property_readonly("edges", [](const ThreeGraph& g) { return g.edges(); })
        .def("edge_count", &ThreeGraph::edge_count)
        .def("has_edge", &ThreeGraph::has_edge)
        .def("degree", &ThreeGraph::degree)
        .def("codegree", &ThreeGraph::codegree)
        .def("link_graph", &ThreeGraph::link_graph)
        .def(py::self == py::self)
        .def("__repr__", [](const ThreeGraph& g) {
            return "<ThreeGraph n=" + std::to_string(g.vertex_count()) + " m=" +
                   std::to_string(g.edge_count()) + ">";
        });

    py::class_<SimpleGraph>(m, "SimpleGraph")
        .def(py::init<>())
        .def(py::init<std::vector<int>, std::vector<Pair>>(), py::arg("labels"),
             py::arg("position_edges"))
        .def_property_readonly("labels", &SimpleGraph::labels)
        .def_property_readonly("edges", &SimpleGraph::labeled_edges)
        .def("size", &SimpleGraph::size)
        .def("edge_count", &SimpleGraph::edge_count)
        .def("degree", &SimpleGraph::degree_label)
        .def("has_edge", &SimpleGraph::has_edge_labels)
        .def(py::self == py::self);

    py::class_<DegreeProfile>(m, "DegreeProfile")
        .def_readonly("min1", &DegreeProfile::min1)
        .def_readonly("min2", &DegreeProfile::min2)
        .def_readonly("vertex_degrees", &DegreeProfile::vertex_degrees)
        .def("codegree", &DegreeProfile::codegree);

    m.def("degree_profile", &degree_profile);
    m.def("min_codegree", &min_codegree);
    m.def("loose_triangle_c63", &loose_triangle_c63);
    m.def("complete_three_graph", &complete_three_graph);
    m.def("delete_vertices", [](const SimpleGraph& h, std::vector<int> labels) {
        return delete_vertices(h, labels);
    });

    // patterns
    py::class_<PathWitness>(m, "PathWitness")
        .def_readonly("vertices", &PathWitness::vertices)
        .def("validates", &PathWitness::validates);
    py::class_<Component>(m, "Component")
        .def_readonly("vertices", &Component::vertices)
        .def_property_readonly("classification",
                               [](const Component& c) { return component_class_name(c.cls); })
        .def_readonly("has_cycle", &Component::has_cycle)
        .def_readonly("edge_count", &Component::edge_count)
        .def_readonly("longest_path", &Component::longest_path);
    m.def("find_p5", &find_p5);
    m.def("find_two_disjoint_p3", &find_two_disjoint_p3);
    m.def("components", [](const SimpleGraph& h) { return components(h).components; });
    m.def("min_degree_2graph", &min_degree_2graph);
    m.def("is_triangle_free", &is_triangle_free);
    m.def("turan_edge_count", &turan_edge_count);
    m.def("max_edges_clique_free_bruteforce", &max_edges_clique_free_bruteforce);

    // covering
    py::class_<C6Witness>(m, "C6Witness")
        .def_readonly("roles", &C6Witness::roles)
        .def_readonly("edges", &C6Witness::edges)
        .def("validates", &C6Witness::validates)
        .def("contains", &C6Witness::contains);
    py::class_<CoverReport>(m, "CoverReport")
        .def_readonly("n", &CoverReport::n)
        .def_readonly("uncovered", &CoverReport::uncovered)
        .def_readonly("fully_covered", &CoverReport::fully_covered)
        .def("witness", [](const CoverReport& r, int v) {
            return r.witness.at(static_cast<std::size_t>(v));
        });
    m.def("find_c6_through", &find_c6_through);
    m.def("cover_report", &cover_report);
    m.def("fast_witness_via_link", &fast_witness_via_link);
    m.def("find_f_cover", &find_f_cover);

    // constructions
    py::enum_<Part>(m, "Part")
        .value("Apex", Part::Apex)
        .value("A1", Part::A1)
        .value("A2", Part::A2)
        .value("B1", Part::B1)
        .value("B2", Part::B2);
    py::class_<Construction2Params>(m, "Construction2Params")
        .def_readonly("n", &Construction2Params::n)
        .def_readonly("b", &Construction2Params::b)
        .def_readonly("a_floor", &Construction2Params::a_floor)
        .def_readonly("a_ceil", &Construction2Params::a_ceil)
        .def_readonly("apex", &Construction2Params::apex)
        .def_readonly("part_of", &Construction2Params::part_of);
    py::class_<Construction2Degrees>(m, "Construction2Degrees")
        .def_readonly("apex", &Construction2Degrees::apex)
        .def_readonly("a1_vertex", &Construction2Degrees::a1_vertex)
        .def_readonly("a2_vertex", &Construction2Degrees::a2_vertex)
        .def_readonly("b1_vertex", &Construction2Degrees::b1_vertex)
        .def_readonly("b2_vertex", &Construction2Degrees::b2_vertex);
    m.def("construction1", &construction1);
    m.def("construction2", &construction2);
    m.def("construction2_degree_formulas", &construction2_degree_formulas);
    m.def("threshold_exceeded", &threshold_exceeded);
    m.def("turan_graph", &turan_graph);

    // claims
    py::class_<VertexPartition>(m, "VertexPartition")
        .def_readonly("u", &VertexPartition::u)
        .def_readonly("v", &VertexPartition::v)
        .def_readonly("m0", &VertexPartition::m0)
        .def_readonly("i0", &VertexPartition::i0)
        .def_readonly("mv", &VertexPartition::mv)
        .def_readonly("iv", &VertexPartition::iv)
        .def_readonly("xv", &VertexPartition::xv)
        .def_readonly("jv", &VertexPartition::jv)
        .def_readonly("good", &VertexPartition::good);
    py::class_<ClaimVerdict>(m, "ClaimVerdict")
        .def_readonly("holds", &ClaimVerdict::holds)
        .def_readonly("violations", &ClaimVerdict::violations);
    py::class_<EdgeClassification>(m, "EdgeClassification")
        .def_readonly("bad_vertices", &EdgeClassification::bad_vertices)
        .def_readonly("iv_sizes", &EdgeClassification::iv_sizes)
        .def_readonly("e1", &EdgeClassification::e1)
        .def_readonly("e2", &EdgeClassification::e2)
        .def_readonly("e3", &EdgeClassification::e3);
    m.def("partition_around", &partition_around);
    m.def("check_claim_4_1", &check_claim_4_1);
    m.def("check_claim_4_2", &check_claim_4_2);
    m.def("classify_edges", &classify_edges);
    m.def("check_lemma_3_1", &check_lemma_3_1);
    m.def("eq1_lower_bound", &eq1_lower_bound);

    // search
    py::class_<ThresholdResult>(m, "ThresholdResult")
        .def_property_readonly("kind",
                               [](const ThresholdResult& r) {
                                   return r.kind == ThresholdKind::codegree ? "codegree"
                                                                            : "degree";
                               })
        .def_readonly("n", &ThresholdResult::n)
        .def_readonly("value", &ThresholdResult::value)
        .def_readonly("witness", &ThresholdResult::witness)
        .def_readonly("graphs_scanned", &ThresholdResult::graphs_scanned)
        .def_readonly("wall_time_s", &ThresholdResult::wall_time_s)
        .def_readonly("exact", &ThresholdResult::exact);
    py::class_<StructureCheck>(m, "StructureCheck")
        .def_readonly("holds", &StructureCheck::holds)
        .def_readonly("counterexamples", &StructureCheck::counterexamples)
        .def_readonly("graphs_checked", &StructureCheck::graphs_checked);
    m.def(
        "compute_c2",
        [](int n, std::optional<std::string> mode, int shards, bool randomized, long long trials,
           std::uint64_t seed) {
            return compute_c2(n, make_options(std::move(mode), shards, randomized, trials, seed));
        },
        py::arg("n"), py::arg("mode") = std::nullopt, py::arg("shards") = 1,
        py::arg("randomized") = false, py::arg("trials") = 1000, py::arg("seed") = 0,
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "compute_c1",
        [](int n, std::optional<std::string> mode, int shards, bool randomized, long long trials,
           std::uint64_t seed) {
            return compute_c1(n, make_options(std::move(mode), shards, randomized, trials, seed));
        },
        py::arg("n"), py::arg("mode") = std::nullopt, py::arg("shards") = 1,
        py::arg("randomized") = false, py::arg("trials") = 1000, py::arg("seed") = 0,
        py::call_guard<py::gil_scoped_release>());
    m.def("verify_min_deg2_implies_pattern", &verify_min_deg2_implies_pattern,
          py::call_guard<py::gil_scoped_release>());
    m.def("random_3graph", &random_3graph);
    m.def("random_planted_link_host", &random_planted_link_host);
    m.def(
        "enumerate_3graphs",
        [](int n, std::optional<long long> min_codegree_floor,
           std::optional<long long> min_degree_floor, bool canonical_only, int shard_count,
           int shard_index, const std::function<void(const ThreeGraph&, std::uint64_t)>& visit) {
            EnumerationPlan plan;
            plan.n = n;
            plan.min_codegree = min_codegree_floor;
            plan.min_degree = min_degree_floor;
            plan.mode = canonical_only ? EnumMode::canonical_only : EnumMode::all_labeled;
            plan.shard_count = shard_count;
            plan.shard_index = shard_index;
            EnumerationStats stats = enumerate_3graphs(plan, visit);
            py::dict out;
            out["scanned"] = stats.scanned;
            out["visited"] = stats.visited;
            out["pruned_filter"] = stats.pruned_filter;
            out["pruned_noncanonical"] = stats.pruned_noncanonical;
            return out;
        },
        py::arg("n"), py::arg("min_codegree") = std::nullopt, py::arg("min_degree") = std::nullopt,
        py::arg("canonical_only") = false, py::arg("shard_count") = 1, py::arg("shard_index") = 0,
        py::arg("visit"));

    // io
    m.def("serialize", py::overload_cast<const ThreeGraph&>(&serialize));
    m.def("serialize_2graph", py::overload_cast<const SimpleGraph&>(&serialize));
    m.def("parse_three_graph", [](const std::string& text) { return parse_three_graph(text); });
    m.def("parse_two_graph", [](const std::string& text) { return parse_two_graph(text); });
    m.def("fnv1a_hex", [](const std::string& text) { return fnv1a_hex(text); });
}
