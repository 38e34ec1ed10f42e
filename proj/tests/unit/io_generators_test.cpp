#include <sstream>

#include <gtest/gtest.h>

#include "rbbg/connectivity.hpp"
#include "rbbg/generators.hpp"
#include "rbbg/io.hpp"

namespace rbbg {
namespace {

std::size_t error_line(const std::string& text) {
    try {
        io::parse_edge_list_string(text);
    } catch (const io::ParseError& e) {
        EXPECT_EQ(std::string(e.what()).rfind("line " + std::to_string(e.line()) + ": ", 0), 0u);
        return e.line();
    }
    ADD_FAILURE() << "accepted: " << text;
    return 0;
}

TEST(EdgeListTest, ParsesWithCommentsAndBlanks) {
    const auto g = io::parse_edge_list_string("# triangle\n3 3\n\n0 1\n1 2\n# mid\n0 2\n");
    EXPECT_EQ(g.vertex_count(), 3u);
    EXPECT_EQ(g.edge_count(), 3u);
    EXPECT_TRUE(g.has_edge(0, 2));
}

TEST(EdgeListTest, ReportsLineNumbers) {
    EXPECT_EQ(error_line(""), 0u);
    EXPECT_EQ(error_line("3 2\n0 1\n0 0\n"), 3u);       // self-loop
    EXPECT_EQ(error_line("3 2\n0 1\n0 1\n"), 3u);       // duplicate
    EXPECT_EQ(error_line("3 2\n1 0\n1 2\n"), 2u);       // u > v
    EXPECT_EQ(error_line("3 1\n0 3\n"), 2u);            // out of range
    EXPECT_EQ(error_line("3 2\n0 1\n"), 2u);            // too few edges
    EXPECT_EQ(error_line("3 1\n0 1\n1 2\n"), 3u);       // too many edges
    EXPECT_EQ(error_line("3\n"), 1u);                   // header arity
    EXPECT_EQ(error_line("3 1\n0 x\n"), 2u);            // not a number
    EXPECT_EQ(error_line("3 1\n0 -1\n"), 2u);
    EXPECT_EQ(error_line("3 1\n0 1 2\n"), 2u);
}

TEST(EdgeListTest, RoundTrip) {
    for (std::string_view family : gen::kFamilies) {
        const auto g = gen::generate(family, 10, 3);
        const auto text = io::edge_list_string(g);
        EXPECT_EQ(io::parse_edge_list_string(text), g) << family;
        EXPECT_EQ(io::edge_list_string(io::parse_edge_list_string(text)), text);
    }
    EXPECT_EQ(io::edge_list_string(make_cycle(3)), "3 3\n0 1\n0 2\n1 2\n");
}

TEST(EdgeListTest, MissingFile) {
    EXPECT_THROW(io::read_edge_list_file("/nonexistent/graph.txt"), std::runtime_error);
}

TEST(GeneratorTest, FamiliesAreBiconnectedAndDeterministic) {
    for (std::string_view family : gen::kFamilies) {
        for (std::size_t n : {6u, 10u, 24u, 51u}) {
            if ((family == "prism-ladder" || family == "theta-pairs") && n % 2 == 1) continue;
            const auto a = gen::generate(family, n, 11);
            EXPECT_EQ(a.vertex_count(), n);
            EXPECT_TRUE(is_biconnected(a)) << family << " " << n;
            EXPECT_EQ(a, gen::generate(family, n, 11)) << family;
        }
    }
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        EXPECT_TRUE(is_biconnected(gen::random_ears(13, seed)));
        EXPECT_TRUE(is_biconnected(gen::random_biconnected(10, seed)));
    }
    EXPECT_NE(gen::random_biconnected(40, 1), gen::random_biconnected(40, 2));
}

TEST(GeneratorTest, FamilyShapes) {
    EXPECT_EQ(gen::complete(6).edge_count(), 15u);
    const auto w = gen::wheel(6);
    EXPECT_EQ(w.degree(0), 5u);
    EXPECT_EQ(w.edge_count(), 10u);
    for (Vertex v = 1; v < 6; ++v) EXPECT_EQ(w.degree(v), 3u);
    EXPECT_EQ(gen::prism_ladder(6), gen::prism_ladder(6));
    EXPECT_EQ(gen::prism_ladder(10).edge_count(), 15u);
    EXPECT_EQ(components_after_pair_removal(gen::theta_pairs(8), 0, 1).size(), 3u);
    const auto cc = gen::cycle_chords(2000, 1);
    EXPECT_EQ(cc.edge_count(), 3000u);
}

TEST(GeneratorTest, RejectsBadParameters) {
    EXPECT_THROW(gen::generate("wheel", 3, 0), GraphError);
    EXPECT_THROW(gen::generate("prism-ladder", 7, 0), GraphError);
    EXPECT_THROW(gen::generate("theta-pairs", 5, 0), GraphError);
    EXPECT_THROW(gen::generate("no-such-family", 8, 0), GraphError);
    EXPECT_THROW(gen::generate("complete", 2, 0), GraphError);
}

}  // namespace
}  // namespace rbbg
