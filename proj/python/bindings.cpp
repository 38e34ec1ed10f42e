#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rbbg/bipartition.hpp"
#include "rbbg/connectivity.hpp"
#include "rbbg/generators.hpp"
#include "rbbg/io.hpp"
#include "rbbg/oracle.hpp"
#include "rbbg/st_numbering.hpp"

namespace py = pybind11;
using namespace rbbg;

namespace {

DecisionOptions make_options(bool strict_paper, std::size_t budget) {
    DecisionOptions o;
    o.strict_paper = strict_paper;
    o.max_block_size = budget;
    return o;
}

std::vector<Edge> to_edges(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    std::vector<Edge> out;
    out.reserve(pairs.size());
    for (const auto& [u, v] : pairs) out.push_back({u, v});
    return out;
}

std::vector<std::pair<Vertex, Vertex>> from_edges(const std::vector<Edge>& edges) {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges.size());
    for (const auto& e : edges) out.emplace_back(e.u, e.v);
    return out;
}

}  // namespace

PYBIND11_MODULE(_rbbg, m) {
    m.doc() = "Recursive biconnected bipartition of biconnected graphs";

    py::register_exception<SearchBudgetExceeded>(m, "SearchBudgetExceeded", PyExc_RuntimeError);
    py::register_exception<io::ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t>(), py::arg("vertex_count") = 0)
        .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
                 const auto list = to_edges(edges);
                 return Graph::from_edges(n, list);
             }),
             py::arg("vertex_count"), py::arg("edges"))
        .def_static(
            "from_edges",
            [](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
                const auto list = to_edges(edges);
                return Graph::from_edges(n, list);
            },
            py::arg("vertex_count"), py::arg("edges"))
        .def("add_edge", &Graph::add_edge)
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("neighbors",
             [](const Graph& g, Vertex v) {
                 const auto n = g.neighbors(v);
                 return std::vector<Vertex>(n.begin(), n.end());
             })
        .def("has_edge", &Graph::has_edge)
        .def("edges", [](const Graph& g) { return from_edges(g.edges()); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<rbbg.Graph n=" + std::to_string(g.vertex_count()) +
                   " m=" + std::to_string(g.edge_count()) + ">";
        });

    py::class_<BlockDecomposition>(m, "BlockDecomposition")
        .def_readonly("blocks", &BlockDecomposition::blocks)
        .def_readonly("articulation_points", &BlockDecomposition::articulation_points)
        .def_readonly("tree_edges", &BlockDecomposition::tree_edges)
        .def_readonly("leaf_block_indices", &BlockDecomposition::leaf_block_indices);

    m.def("connected_components", &connected_components);
    m.def("articulation_points", &articulation_points);
    m.def("is_biconnected", &is_biconnected);
    m.def("block_decomposition", &block_decomposition);
    m.def("components_after_pair_removal", &components_after_pair_removal);
    m.def("two_internally_disjoint_paths", &two_internally_disjoint_paths);
    m.def("induced_subgraph", [](const Graph& g, const std::vector<Vertex>& members) {
        auto sub = induced_subgraph(g, members);
        return py::make_tuple(sub.graph, sub.to_parent);
    });

    py::class_<StNumbering>(m, "StNumbering")
        .def_readonly("order", &StNumbering::order)
        .def_readonly("rank", &StNumbering::rank);
    m.def("st_numbering", &st_numbering);
    m.def("connected_bipartition", [](const Graph& g, Vertex s1, Vertex s2, std::size_t n1,
                                      std::size_t n2) {
        auto p = connected_bipartition(g, s1, s2, n1, n2);
        return py::make_tuple(p.v1, p.v2);
    });

    py::enum_<Status>(m, "Status")
        .value("FEASIBLE", Status::Feasible)
        .value("INFEASIBLE", Status::Infeasible)
        .value("INDETERMINATE", Status::Indeterminate);
    py::enum_<Placement>(m, "Placement")
        .value("SEPARATED", Placement::Separated)
        .value("TOGETHER_IN_V1", Placement::TogetherInV1)
        .value("TOGETHER_IN_V2", Placement::TogetherInV2);
    auto branch = py::enum_<Branch>(m, "Branch");
    for (auto b : {Branch::None, Branch::KGt2SeparatedInfeasible, Branch::KEq2Separated,
                   Branch::KEq1SeparatedTwoBlocks, Branch::KEq1BiconnectedSplit,
                   Branch::KEq1SeparatedGeneral, Branch::WholeComponent, Branch::KGt2LeafBlock,
                   Branch::KEq1TogetherLeafBlock, Branch::TogetherInnerBlock}) {
        branch.value(std::string(to_string(b)).c_str(), b);
    }
    py::enum_<StopReason>(m, "StopReason")
        .value("SPLIT", StopReason::Split)
        .value("BELOW_MINIMUM_SIZE", StopReason::BelowMinimumSize)
        .value("INFEASIBLE", StopReason::Infeasible)
        .value("INDETERMINATE", StopReason::Indeterminate);

    py::class_<SearchCounters>(m, "SearchCounters")
        .def_readonly("edges_tried", &SearchCounters::edges_tried)
        .def_readonly("subsets_enumerated", &SearchCounters::subsets_enumerated)
        .def_readonly("leaf_blocks_seen", &SearchCounters::leaf_blocks_seen);
    py::class_<CaseTrace>(m, "CaseTrace")
        .def_readonly("k", &CaseTrace::k)
        .def_readonly("branch", &CaseTrace::branch)
        .def_readonly("component_index", &CaseTrace::component_index)
        .def_readonly("block_index", &CaseTrace::block_index)
        .def_readonly("split_part", &CaseTrace::split_part)
        .def_readonly("split_complement", &CaseTrace::split_complement)
        .def_readonly("counters", &CaseTrace::counters);
    py::class_<Witness>(m, "Witness")
        .def_readonly("v1", &Witness::v1)
        .def_readonly("v2", &Witness::v2)
        .def_readonly("placement", &Witness::placement);
    py::class_<DecisionResult>(m, "DecisionResult")
        .def_readonly("status", &DecisionResult::status)
        .def_readonly("witness", &DecisionResult::witness)
        .def_readonly("trace", &DecisionResult::trace)
        .def_readonly("reason", &DecisionResult::reason)
        .def_property_readonly("terminals",
                               [](const DecisionResult& r) -> std::optional<std::pair<Vertex, Vertex>> {
                                   if (!r.terminals) return std::nullopt;
                                   return std::make_pair(r.terminals->u, r.terminals->v);
                               })
        .def_property_readonly("feasible", &DecisionResult::feasible);

    const auto decide = [](auto fn) {
        return [fn](const Graph& g, Vertex s1, Vertex s2, std::size_t n1, std::size_t n2,
                    bool strict_paper, std::size_t budget) {
            return fn(BipartitionInstance{g, s1, s2, n1, n2}, make_options(strict_paper, budget));
        };
    };
    const auto decision_args = [](auto& mod, const char* name, auto f) {
        mod.def(name, f, py::arg("graph"), py::arg("s1"), py::arg("s2"), py::arg("n1"),
                py::arg("n2"), py::arg("strict_paper") = false, py::arg("budget") = 24);
    };
    decision_args(m, "decide_bbg2", decide([](const BipartitionInstance& i, const DecisionOptions& o) {
                      return decide_bbg2(i, o);
                  }));
    decision_args(m, "decide_separated",
                  decide([](const BipartitionInstance& i, const DecisionOptions& o) {
                      return decide_separated(i, o);
                  }));
    decision_args(m, "decide_together",
                  decide([](const BipartitionInstance& i, const DecisionOptions& o) {
                      return decide_together(i, o);
                  }));
    m.def(
        "decide_bbg2_any_edge",
        [](const Graph& g, std::size_t n1, std::size_t n2, bool strict_paper, std::size_t budget) {
            return decide_bbg2_any_edge(g, n1, n2, make_options(strict_paper, budget));
        },
        py::arg("graph"), py::arg("n1"), py::arg("n2"), py::arg("strict_paper") = false,
        py::arg("budget") = 24);
    m.def(
        "biconnected_split_search",
        [](const Graph& g, std::size_t size2, const std::vector<Vertex>& anchor, std::size_t budget) {
            SplitSearchOptions o;
            o.max_block_size = budget;
            return biconnected_split_search(g, size2, anchor, o);
        },
        py::arg("graph"), py::arg("size2"), py::arg("anchor"), py::arg("budget") = 24);
    m.def("default_split", &default_split);

    py::class_<PartitionTree>(m, "PartitionTree")
        .def_readonly("vertices", &PartitionTree::vertices)
        .def_property_readonly("split_edge",
                               [](const PartitionTree& t) -> std::optional<std::pair<Vertex, Vertex>> {
                                   if (!t.split_edge) return std::nullopt;
                                   return std::make_pair(t.split_edge->u, t.split_edge->v);
                               })
        .def_readonly("stop", &PartitionTree::stop)
        .def_readonly("children", &PartitionTree::children)
        .def("depth", &PartitionTree::depth)
        .def("leaves", [](const PartitionTree& t) {
            std::vector<VertexSet> out;
            for (const auto* leaf : t.leaves()) out.push_back(leaf->vertices);
            return out;
        });
    m.def(
        "recursive_bipartition",
        [](const Graph& g, bool strict_paper, std::size_t budget) {
            return recursive_bipartition(g, make_options(strict_paper, budget));
        },
        py::arg("graph"), py::arg("strict_paper") = false, py::arg("budget") = 24);

    py::class_<oracle::OracleReport>(m, "OracleReport")
        .def_readonly("feasible_separated", &oracle::OracleReport::feasible_separated)
        .def_readonly("feasible_together", &oracle::OracleReport::feasible_together)
        .def_readonly("witnesses", &oracle::OracleReport::witnesses)
        .def_readonly("enumerated_count", &oracle::OracleReport::enumerated_count)
        .def_property_readonly("feasible", &oracle::OracleReport::feasible);
    m.def("oracle_bbg2", &oracle::oracle_bbg2, py::arg("graph"), py::arg("s1"), py::arg("s2"),
          py::arg("n1"), py::arg("n2"), py::arg("witness_cap") = 8);
    m.def("oracle_connected_partition", &oracle::oracle_connected_partition);

    m.def("generate", &gen::generate, py::arg("family"), py::arg("n"), py::arg("seed") = 0);
    m.def("parse_edge_list", &io::parse_edge_list_string);
    m.def("edge_list", &io::edge_list_string);
}
