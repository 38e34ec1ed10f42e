#include "rbbg/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rbbg/bipartition.hpp"
#include "rbbg/connectivity.hpp"
#include "rbbg/generators.hpp"
#include "rbbg/io.hpp"
#include "rbbg/oracle.hpp"

namespace rbbg::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Json optional_index(const std::optional<std::size_t>& v) {
    return v ? Json(*v) : Json(nullptr);
}

Json input_summary(const std::string& path, const Graph& g) {
    return Json{{"path", path}, {"n", g.vertex_count()}, {"m", g.edge_count()}};
}

Json counters_json(const SearchCounters& c) {
    return Json{{"edges_tried", c.edges_tried},
                {"subsets_enumerated", c.subsets_enumerated},
                {"leaf_blocks_seen", c.leaf_blocks_seen}};
}

Json decision_json(const DecisionResult& r) {
    Json doc;
    doc["decision"] = std::string(to_string(r.status));
    if (r.terminals) {
        doc["terminals"] = Json::array({r.terminals->u, r.terminals->v});
    } else {
        doc["terminals"] = nullptr;
    }
    if (r.witness) {
        doc["witness"] = Json{{"v1", r.witness->v1},
                              {"v2", r.witness->v2},
                              {"placement", std::string(to_string(r.witness->placement))}};
    } else {
        doc["witness"] = nullptr;
    }
    doc["trace"] = Json{{"k", r.trace.k},
                        {"branch", std::string(to_string(r.trace.branch))},
                        {"component_index", optional_index(r.trace.component_index)},
                        {"block_index", optional_index(r.trace.block_index)},
                        {"split_part", r.trace.split_part},
                        {"split_complement", r.trace.split_complement}};
    doc["counters"] = counters_json(r.trace.counters);
    doc["reason"] = r.reason.empty() ? Json(nullptr) : Json(r.reason);
    return doc;
}

int exit_code_for(Status s) {
    switch (s) {
        case Status::Feasible: return kFeasible;
        case Status::Infeasible: return kInfeasible;
        case Status::Indeterminate: return kIndeterminate;
    }
    return kInputError;
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << text;
}

std::string block_tree_dot(const BlockDecomposition& bd) {
    std::ostringstream dot;
    dot << "graph block_cut_tree {\n";
    for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
        dot << "  B" << b << " [shape=box, label=\"";
        for (std::size_t i = 0; i < bd.blocks[b].size(); ++i) {
            dot << (i ? "," : "") << bd.blocks[b][i];
        }
        dot << "\"];\n";
    }
    for (Vertex a : bd.articulation_points) dot << "  A" << a << " [shape=circle, label=\"" << a << "\"];\n";
    for (const auto& [b, a] : bd.tree_edges) dot << "  B" << b << " -- A" << a << ";\n";
    dot << "}\n";
    return dot.str();
}

std::string partition_dot(const Graph& g, const Witness& w) {
    std::ostringstream dot;
    dot << "graph bipartition {\n";
    for (Vertex v : w.v1) dot << "  " << v << " [style=filled, fillcolor=lightblue];\n";
    for (Vertex v : w.v2) dot << "  " << v << " [style=filled, fillcolor=salmon];\n";
    for (const auto& e : g.edges()) dot << "  " << e.u << " -- " << e.v << ";\n";
    dot << "}\n";
    return dot.str();
}

Json tree_json(const PartitionTree& t) {
    Json node{{"vertices", t.vertices}, {"stop", std::string(to_string(t.stop))}};
    node["split_edge"] = t.split_edge ? Json::array({t.split_edge->u, t.split_edge->v})
                                      : Json(nullptr);
    Json kids = Json::array();
    for (const auto& c : t.children) kids.push_back(tree_json(c));
    node["children"] = std::move(kids);
    return node;
}

struct Options {
    std::string path;
    std::string dot;
    std::optional<std::uint32_t> s1;
    std::optional<std::uint32_t> s2;
    std::optional<std::size_t> n1;
    std::optional<std::size_t> n2;
    bool any_edge = false;
    bool strict_paper = false;
    std::size_t budget = 24;
    std::uint64_t seed = 0;
    std::size_t witness_cap = 8;
    std::string family;
    std::size_t n = 0;
    std::vector<std::size_t> sizes;
    std::vector<std::string> families;
};

DecisionOptions decision_options(const Options& o) {
    DecisionOptions d;
    d.strict_paper = o.strict_paper;
    d.max_block_size = o.budget;
    return d;
}

int cmd_check(const Options& o, std::ostream& out) {
    const auto start = Clock::now();
    const Graph g = io::read_edge_list_file(o.path);
    Json doc{{"command", "check"}, {"input", input_summary(o.path, g)}};
    const bool connected = g.vertex_count() > 0 && is_connected(g);
    doc["connected"] = connected;
    doc["biconnected"] = is_biconnected(g);
    doc["articulation_points"] = articulation_points(g);
    if (connected) {
        const auto bd = block_decomposition(g);
        doc["blocks"] = bd.blocks;
        Json edges = Json::array();
        for (const auto& [b, a] : bd.tree_edges) edges.push_back(Json::array({b, a}));
        doc["block_cut_tree"] = std::move(edges);
        doc["leaf_blocks"] = bd.leaf_block_indices;
        if (!o.dot.empty()) write_file(o.dot, block_tree_dot(bd));
    } else {
        doc["blocks"] = nullptr;
        doc["block_cut_tree"] = nullptr;
        doc["leaf_blocks"] = nullptr;
    }
    doc["wall_time_ms"] = elapsed_ms(start);
    emit(out, doc);
    return kFeasible;
}

int cmd_bipartition(const Options& o, std::ostream& out) {
    const auto start = Clock::now();
    const Graph g = io::read_edge_list_file(o.path);
    const auto [d1, d2] = default_split(g.vertex_count());
    const std::size_t n1 = o.n1.value_or(d1);
    const std::size_t n2 = o.n2.value_or(o.n1 ? g.vertex_count() - std::min(n1, g.vertex_count()) : d2);
    DecisionResult r;
    if (o.any_edge) {
        r = decide_bbg2_any_edge(g, n1, n2, decision_options(o));
    } else {
        if (!o.s1 || !o.s2) throw InvalidInstance("--s1 and --s2 are required without --any-edge");
        r = decide_bbg2({g, *o.s1, *o.s2, n1, n2}, decision_options(o));
    }
    Json doc{{"command", "bipartition"}, {"input", input_summary(o.path, g)}};
    doc["parameters"] = Json{{"n1", n1},
                             {"n2", n2},
                             {"any_edge", o.any_edge},
                             {"strict_paper", o.strict_paper},
                             {"budget", o.budget},
                             {"seed", o.seed}};
    doc.update(decision_json(r));
    if (!o.dot.empty() && r.witness) write_file(o.dot, partition_dot(g, *r.witness));
    doc["wall_time_ms"] = elapsed_ms(start);
    emit(out, doc);
    return exit_code_for(r.status);
}

int cmd_recurse(const Options& o, std::ostream& out) {
    const auto start = Clock::now();
    const Graph g = io::read_edge_list_file(o.path);
    if (!is_biconnected(g)) throw InvalidInstance("input graph is not biconnected");
    const auto tree = recursive_bipartition(g, decision_options(o));
    Json doc{{"command", "recurse"}, {"input", input_summary(o.path, g)}};
    doc["parameters"] = Json{{"strict_paper", o.strict_paper}, {"budget", o.budget}, {"seed", o.seed}};
    doc["depth"] = tree.depth();
    Json leaves = Json::array();
    for (const auto* leaf : tree.leaves()) leaves.push_back(leaf->vertices);
    doc["leaves"] = std::move(leaves);
    doc["tree"] = tree_json(tree);
    doc["wall_time_ms"] = elapsed_ms(start);
    emit(out, doc);
    return kFeasible;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    const auto start = Clock::now();
    const Graph g = io::read_edge_list_file(o.path);
    if (!o.s1 || !o.s2) throw InvalidInstance("--s1 and --s2 are required");
    const auto [d1, d2] = default_split(g.vertex_count());
    const std::size_t n1 = o.n1.value_or(d1);
    const std::size_t n2 = o.n2.value_or(d2);
    const auto report = oracle::oracle_bbg2(g, *o.s1, *o.s2, n1, n2, o.witness_cap);
    Json doc{{"command", "oracle"}, {"input", input_summary(o.path, g)}};
    doc["parameters"] = Json{{"s1", *o.s1}, {"s2", *o.s2}, {"n1", n1}, {"n2", n2},
                             {"witness_cap", o.witness_cap}, {"seed", o.seed}};
    doc["decision"] = report.feasible() ? "feasible" : "infeasible";
    doc["feasible_separated"] = report.feasible_separated;
    doc["feasible_together"] = report.feasible_together;
    Json ws = Json::array();
    for (const auto& w : report.witnesses) {
        ws.push_back(Json{{"v1", w.v1}, {"v2", w.v2}, {"placement", std::string(to_string(w.placement))}});
    }
    doc["witnesses"] = std::move(ws);
    doc["enumerated_count"] = report.enumerated_count;
    doc["wall_time_ms"] = elapsed_ms(start);
    emit(out, doc);
    return report.feasible() ? kFeasible : kInfeasible;
}

int cmd_gen(const Options& o, std::ostream& out) {
    io::write_edge_list(out, gen::generate(o.family, o.n, o.seed));
    return kFeasible;
}

int cmd_bench(const Options& o, std::ostream& out) {
    const auto start = Clock::now();
    Json cases = Json::array();
    std::size_t indeterminate = 0;
    const auto families = o.families.empty() ? std::vector<std::string>{"cycle-chords"} : o.families;
    for (const auto& family : families) {
        for (std::size_t n : o.sizes) {
            const auto case_start = Clock::now();
            const Graph g = gen::generate(family, n, o.seed);
            const auto [n1, n2] = default_split(n);
            Json entry{{"family", family}, {"n", n}, {"m", g.edge_count()}};
            if (n1 < 3 || n2 < 3) {
                entry["decision"] = "skipped";
                entry["counters"] = counters_json({});
            } else {
                const auto r = decide_bbg2_any_edge(g, n1, n2, decision_options(o));
                entry["decision"] = std::string(to_string(r.status));
                entry["counters"] = counters_json(r.trace.counters);
                if (r.status == Status::Indeterminate) ++indeterminate;
            }
            entry["wall_time_ms"] = elapsed_ms(case_start);
            cases.push_back(std::move(entry));
        }
    }
    Json doc{{"command", "bench"},
             {"parameters", Json{{"sizes", o.sizes}, {"families", families},
                                 {"budget", o.budget}, {"seed", o.seed}}},
             {"cases", std::move(cases)},
             {"indeterminate_cases", indeterminate},
             {"wall_time_ms", elapsed_ms(start)}};
    emit(out, doc);
    return kFeasible;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Recursive biconnected bipartition of biconnected graphs", "rbbg"};
    app.require_subcommand(1);
    Options o;

    auto add_decision_flags = [&](CLI::App* sub) {
        sub->add_option("--budget", o.budget, "Largest block/component the split search enumerates")
            ->check(CLI::Range(std::size_t{3}, std::size_t{64}));
        sub->add_flag("--strict-paper", o.strict_paper,
                      "Trust the case screening alone (no exhaustive fallback)");
        sub->add_option("--seed", o.seed, "Recorded in the output for reproducibility");
    };

    auto* check = app.add_subcommand("check", "Connectivity, articulation points and blocks");
    check->add_option("path", o.path, "Edge-list file")->required();
    check->add_option("--dot", o.dot, "Write the block-cut tree as DOT");

    auto* bip = app.add_subcommand("bipartition", "Decide a biconnected bipartition");
    bip->add_option("path", o.path, "Edge-list file")->required();
    bip->add_option("--s1", o.s1);
    bip->add_option("--s2", o.s2);
    bip->add_option("--n1", o.n1);
    bip->add_option("--n2", o.n2);
    bip->add_flag("--any-edge", o.any_edge, "Search over all terminal edges");
    bip->add_option("--dot", o.dot, "Write the graph colored by part as DOT");
    add_decision_flags(bip);

    auto* rec = app.add_subcommand("recurse", "Recursively bipartition into biconnected parts");
    rec->add_option("path", o.path, "Edge-list file")->required();
    add_decision_flags(rec);

    auto* orc = app.add_subcommand("oracle", "Brute-force ground truth (n <= 16)");
    orc->add_option("path", o.path, "Edge-list file")->required();
    orc->add_option("--s1", o.s1);
    orc->add_option("--s2", o.s2);
    orc->add_option("--n1", o.n1);
    orc->add_option("--n2", o.n2);
    orc->add_option("--witness-cap", o.witness_cap);
    orc->add_option("--seed", o.seed);

    auto* gen_cmd = app.add_subcommand("gen", "Emit a generated biconnected graph");
    gen_cmd->add_option("family", o.family)
        ->required()
        ->check(CLI::IsMember(std::vector<std::string>(std::begin(gen::kFamilies),
                                                       std::end(gen::kFamilies))));
    gen_cmd->add_option("n", o.n)->required();
    gen_cmd->add_option("--seed", o.seed);

    auto* bench = app.add_subcommand("bench", "Time the any-edge decision on generated graphs");
    bench->add_option("--sizes", o.sizes)->delimiter(',');
    bench->add_option("--families", o.families)->delimiter(',');
    add_decision_flags(bench);

    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kInputError;
    }

    try {
        if (*check) return cmd_check(o, out);
        if (*bip) return cmd_bipartition(o, out);
        if (*rec) return cmd_recurse(o, out);
        if (*orc) return cmd_oracle(o, out);
        if (*gen_cmd) return cmd_gen(o, out);
        if (*bench) return cmd_bench(o, out);
    } catch (const io::ParseError& e) {
        err << "rbbg: " << o.path << ": " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "rbbg: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace rbbg::cli
