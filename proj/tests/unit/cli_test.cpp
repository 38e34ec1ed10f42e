#include "rbbg/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "corpus.hpp"
#include "rbbg/io.hpp"

namespace rbbg {
namespace {

using nlohmann::json;

struct Run {
    int code;
    std::string out;
    std::string err;
    json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "rbbg");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_graph(const std::string& name, const Graph& g) {
    const auto path = std::filesystem::path(RBBG_TMP_DIR) / ("cli_test_" + name + ".txt");
    std::ofstream(path) << io::edge_list_string(g);
    return path.string();
}

std::string write_text(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::path(RBBG_TMP_DIR) / ("cli_test_" + name + ".txt");
    std::ofstream(path) << text;
    return path.string();
}

TEST(CliTest, CheckBowtie) {
    const auto r = run({"check", write_graph("bowtie", testing::bowtie())});
    ASSERT_EQ(r.code, cli::kFeasible) << r.err;
    const auto doc = r.doc();
    EXPECT_EQ(doc["command"], "check");
    EXPECT_EQ(doc["biconnected"], false);
    EXPECT_EQ(doc["blocks"], json::parse("[[0,1,2],[2,3,4]]"));
    EXPECT_EQ(doc["articulation_points"], json::parse("[2]"));
    EXPECT_EQ(doc["leaf_blocks"].size(), 2u);
}

TEST(CliTest, CheckCycleWithDot) {
    const auto dot = (std::filesystem::path(RBBG_TMP_DIR) / "cli_test_c6.dot").string();
    const auto r = run({"check", write_graph("c6", make_cycle(6)), "--dot", dot});
    ASSERT_EQ(r.code, cli::kFeasible);
    EXPECT_EQ(r.doc()["biconnected"], true);
    EXPECT_EQ(r.doc()["blocks"].size(), 1u);
    std::ifstream in(dot);
    std::string first;
    std::getline(in, first);
    EXPECT_EQ(first, "graph block_cut_tree {");
}

TEST(CliTest, ParseErrorsExitTwo) {
    const auto r = run({"check", write_text("loop", "3 2\n0 1\n0 0\n")});
    EXPECT_EQ(r.code, cli::kInputError);
    EXPECT_NE(r.err.find("line 3"), std::string::npos);
    EXPECT_EQ(run({"check", "/nonexistent.txt"}).code, cli::kInputError);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kInputError);
    EXPECT_EQ(run({}).code, cli::kInputError);
}

TEST(CliTest, BipartitionOutcomes) {
    const auto prism = write_graph("prism", testing::prism());
    const auto ok = run({"bipartition", prism, "--s1", "0", "--s2", "3", "--n1", "3", "--n2", "3"});
    ASSERT_EQ(ok.code, cli::kFeasible) << ok.err;
    const auto doc = ok.doc();
    EXPECT_EQ(doc["decision"], "feasible");
    EXPECT_EQ(doc["witness"]["v1"], json::parse("[0,1,2]"));
    EXPECT_EQ(doc["witness"]["v2"], json::parse("[3,4,5]"));
    EXPECT_EQ(doc["witness"]["placement"], "SEPARATED");
    EXPECT_EQ(doc["parameters"]["seed"], 0);
    EXPECT_TRUE(doc.contains("wall_time_ms"));
    EXPECT_TRUE(doc["trace"].contains("branch"));

    const auto c6 = write_graph("c6b", make_cycle(6));
    const auto no = run({"bipartition", c6, "--s1", "0", "--s2", "1"});
    EXPECT_EQ(no.code, cli::kInfeasible);
    EXPECT_EQ(no.doc()["decision"], "infeasible");
    EXPECT_TRUE(no.doc()["reason"].is_string());

    EXPECT_EQ(run({"bipartition", c6, "--s1", "0", "--s2", "3"}).code, cli::kInputError);
    EXPECT_EQ(run({"bipartition", c6}).code, cli::kInputError);

    const auto k30 = write_graph("k30", make_complete(30));
    const auto big = run({"bipartition", k30, "--s1", "0", "--s2", "1"});
    EXPECT_EQ(big.code, cli::kIndeterminate);
    EXPECT_EQ(big.doc()["decision"], "indeterminate");
    EXPECT_EQ(run({"bipartition", k30, "--s1", "0", "--s2", "1", "--budget", "65"}).code,
              cli::kInputError);
}

TEST(CliTest, AnyEdgeAndStrict) {
    const auto prism = write_graph("prism2", testing::prism());
    const auto r = run({"bipartition", prism, "--any-edge", "--seed", "9"});
    ASSERT_EQ(r.code, cli::kFeasible);
    EXPECT_EQ(r.doc()["terminals"].size(), 2u);
    EXPECT_EQ(r.doc()["parameters"]["seed"], 9);

    const auto path = write_graph("pathcomp", testing::path_component_split());
    EXPECT_EQ(run({"bipartition", path, "--s1", "0", "--s2", "1"}).code, cli::kFeasible);
    const auto strict = run({"bipartition", path, "--s1", "0", "--s2", "1", "--strict-paper"});
    EXPECT_EQ(strict.doc()["parameters"]["strict_paper"], true);
}

TEST(CliTest, RecurseTrees) {
    const auto k12 = run({"recurse", write_graph("k12", make_complete(12))});
    ASSERT_EQ(k12.code, cli::kFeasible);
    EXPECT_EQ(k12.doc()["depth"], 2);
    EXPECT_EQ(k12.doc()["leaves"].size(), 4u);

    const auto c6 = run({"recurse", write_graph("c6r", make_cycle(6))});
    ASSERT_EQ(c6.code, cli::kFeasible);
    EXPECT_EQ(c6.doc()["tree"]["stop"], "infeasible");
    const auto k3 = run({"recurse", write_graph("k3", make_complete(3))});
    EXPECT_EQ(k3.doc()["tree"]["stop"], "below-minimum-size");

    EXPECT_EQ(run({"recurse", write_graph("bowtie2", testing::bowtie())}).code, cli::kInputError);
}

TEST(CliTest, OracleCommand) {
    const auto c6 = write_graph("c6o", make_cycle(6));
    const auto r = run({"oracle", c6, "--s1", "0", "--s2", "1", "--n1", "3", "--n2", "3"});
    EXPECT_EQ(r.code, cli::kInfeasible);
    EXPECT_EQ(r.doc()["enumerated_count"], 20);
    const auto k6 = write_graph("k6o", make_complete(6));
    const auto k = run({"oracle", k6, "--s1", "0", "--s2", "1", "--witness-cap", "1"});
    EXPECT_EQ(k.code, cli::kFeasible);
    EXPECT_EQ(k.doc()["feasible_separated"], true);
    EXPECT_EQ(k.doc()["feasible_together"], true);
    EXPECT_EQ(k.doc()["witnesses"].size(), 1u);
}

TEST(CliTest, GenEmitsParsableGraphs) {
    const auto r = run({"gen", "complete", "6"});
    ASSERT_EQ(r.code, cli::kFeasible);
    EXPECT_EQ(io::parse_edge_list_string(r.out).edge_count(), 15u);
    const auto a = run({"gen", "random-biconnected", "10", "--seed", "7"});
    EXPECT_EQ(a.out, run({"gen", "random-biconnected", "10", "--seed", "7"}).out);
    EXPECT_EQ(run({"gen", "wheel", "3"}).code, cli::kInputError);
    EXPECT_EQ(run({"gen", "hypercube", "8"}).code, cli::kInputError);
}

TEST(CliTest, Bench) {
    const auto r = run({"bench", "--sizes", "50,100,200", "--families", "cycle-chords"});
    ASSERT_EQ(r.code, cli::kFeasible) << r.err;
    const auto cases = r.doc()["cases"];
    ASSERT_EQ(cases.size(), 3u);
    for (std::size_t i = 1; i < cases.size(); ++i) {
        EXPECT_GE(cases[i]["m"], cases[i - 1]["m"]);
        EXPECT_LE(cases[i]["counters"]["edges_tried"], cases[i]["m"]);
    }
    const auto empty = run({"bench"});
    EXPECT_EQ(empty.code, cli::kFeasible);
    EXPECT_TRUE(empty.doc()["cases"].empty());
}

}  // namespace
}  // namespace rbbg
