#include "rbbg/connectivity.hpp"

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "rbbg/generators.hpp"

namespace rbbg {
namespace {

using testing::bowtie;
using testing::prism;
using testing::theta_of_pairs;

Graph two_triangles() {
    Graph g(6);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}) {
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return g;
}

TEST(ConnectedComponentsTest, Examples) {
    EXPECT_EQ(connected_components(two_triangles()),
              (std::vector<VertexSet>{{0, 1, 2}, {3, 4, 5}}));
    EXPECT_EQ(connected_components(make_path(3)), (std::vector<VertexSet>{{0, 1, 2}}));
    Graph single_edge(6);
    single_edge.add_edge(0, 1);
    EXPECT_EQ(connected_components(single_edge),
              (std::vector<VertexSet>{{0, 1}, {2}, {3}, {4}, {5}}));
    EXPECT_TRUE(connected_components(Graph()).empty());
}

TEST(ArticulationPointsTest, Examples) {
    EXPECT_EQ(articulation_points(make_path(3)), (VertexSet{1}));
    EXPECT_TRUE(articulation_points(make_cycle(6)).empty());
    EXPECT_EQ(articulation_points(bowtie()), (VertexSet{2}));
}

TEST(IsBiconnectedTest, Examples) {
    EXPECT_TRUE(is_biconnected(make_complete(3)));
    EXPECT_FALSE(is_biconnected(make_complete(2)));
    EXPECT_FALSE(is_biconnected(bowtie()));
    EXPECT_FALSE(is_biconnected(Graph(1)));
    EXPECT_FALSE(is_biconnected(two_triangles()));
}

TEST(BlockDecompositionTest, Bowtie) {
    const auto bd = block_decomposition(bowtie());
    EXPECT_EQ(bd.blocks, (std::vector<VertexSet>{{0, 1, 2}, {2, 3, 4}}));
    EXPECT_EQ(bd.articulation_points, (VertexSet{2}));
    EXPECT_EQ(bd.leaf_block_indices.size(), 2u);
    EXPECT_EQ(bd.tree_edges.size(), 2u);
}

TEST(BlockDecompositionTest, CycleIsOneBlock) {
    const auto bd = block_decomposition(make_cycle(6));
    ASSERT_EQ(bd.blocks.size(), 1u);
    EXPECT_EQ(bd.blocks[0], (VertexSet{0, 1, 2, 3, 4, 5}));
    EXPECT_TRUE(bd.articulation_points.empty());
    EXPECT_TRUE(bd.tree_edges.empty());
    EXPECT_EQ(bd.leaf_block_indices, (std::vector<std::size_t>{0}));
}

TEST(BlockDecompositionTest, PathBridgesAreBlocks) {
    const auto bd = block_decomposition(make_path(3));
    EXPECT_EQ(bd.blocks, (std::vector<VertexSet>{{0, 1}, {1, 2}}));
    EXPECT_EQ(bd.articulation_points, (VertexSet{1}));
    EXPECT_EQ(bd.block_of_edge(1, 2), std::optional<std::size_t>{1});
    EXPECT_EQ(bd.block_of_edge(0, 2), std::nullopt);
}

TEST(BlockDecompositionTest, SingleVertexAndErrors) {
    const auto bd = block_decomposition(Graph(1));
    EXPECT_EQ(bd.blocks, (std::vector<VertexSet>{{0}}));
    EXPECT_THROW(block_decomposition(Graph()), GraphError);
    EXPECT_THROW(block_decomposition(two_triangles()), GraphError);
}

TEST(PairRemovalTest, Examples) {
    EXPECT_EQ(components_after_pair_removal(prism(), 0, 3), (std::vector<VertexSet>{{1, 2, 4, 5}}));
    EXPECT_EQ(components_after_pair_removal(theta_of_pairs(), 0, 1),
              (std::vector<VertexSet>{{2, 3}, {4, 5}, {6, 7}}));
    EXPECT_EQ(components_after_pair_removal(make_cycle(6), 0, 1),
              (std::vector<VertexSet>{{2, 3, 4, 5}}));
    EXPECT_THROW(components_after_pair_removal(prism(), 2, 2), GraphError);
}

TEST(DisjointPathsTest, Examples) {
    const auto cyc = two_internally_disjoint_paths(make_cycle(6), 0, 3);
    ASSERT_TRUE(cyc.has_value());
    EXPECT_EQ(cyc->first, (Path{0, 1, 2, 3}));
    EXPECT_EQ(cyc->second, (Path{0, 5, 4, 3}));

    EXPECT_FALSE(two_internally_disjoint_paths(make_path(3), 0, 2).has_value());

    const auto k4 = make_complete(4);
    const auto paths = two_internally_disjoint_paths(k4, 0, 1);
    ASSERT_TRUE(paths.has_value());
    EXPECT_TRUE(testing::paths_internally_disjoint(k4, paths->first, paths->second, 0, 1));
    EXPECT_THROW(two_internally_disjoint_paths(k4, 2, 2), GraphError);
}

// Properties over a seeded corpus of graphs, biconnected or not.

std::vector<Graph> mixed_corpus() {
    std::vector<Graph> out;
    for (auto& ng : testing::random_corpus(60, 4, 10, 2024)) {
        out.push_back(ng.graph);
        // Dropping a vertex and a few edges yields graphs with cut vertices.
        VertexSet keep;
        for (Vertex v = 1; v < ng.graph.vertex_count(); ++v) keep.push_back(v);
        out.push_back(induced_subgraph(ng.graph, keep).graph);
    }
    out.push_back(bowtie());
    out.push_back(make_path(7));
    out.push_back(gen::theta_pairs(8));
    return out;
}

TEST(ConnectivityPropertyTest, ArticulationMatchesBruteForce) {
    for (const auto& g : mixed_corpus()) {
        EXPECT_EQ(articulation_points(g), testing::brute_articulation_points(g));
    }
}

TEST(ConnectivityPropertyTest, BiconnectedIffTwoDisjointPathsEverywhere) {
    for (const auto& g : mixed_corpus()) {
        if (g.vertex_count() > 10 || g.vertex_count() < 3) continue;
        bool all_pairs = true;
        for (Vertex u = 0; u < g.vertex_count() && all_pairs; ++u) {
            for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
                const auto p = two_internally_disjoint_paths(g, u, v);
                if (!p) {
                    all_pairs = false;
                    break;
                }
                EXPECT_TRUE(testing::paths_internally_disjoint(g, p->first, p->second, u, v));
            }
        }
        EXPECT_EQ(is_biconnected(g), all_pairs);
    }
}

TEST(ConnectivityPropertyTest, BlocksMatchCommonCycleRelation) {
    for (const auto& g : mixed_corpus()) {
        if (!is_connected(g) || g.vertex_count() > 10) continue;
        const auto bd = block_decomposition(g);
        EXPECT_EQ(testing::decomposition_edge_blocks(g, bd), testing::naive_edge_blocks(g));

        std::size_t covered = 0;
        for (const auto& e : g.edges()) {
            std::size_t holders = 0;
            for (const auto& blk : bd.blocks) {
                holders += std::binary_search(blk.begin(), blk.end(), e.u) &&
                           std::binary_search(blk.begin(), blk.end(), e.v);
            }
            EXPECT_EQ(holders, 1u);
            covered += holders;
        }
        EXPECT_EQ(covered, g.edge_count());
        EXPECT_EQ(bd.tree_edges.size(), bd.blocks.size() + bd.articulation_points.size() - 1);
        for (auto b : bd.leaf_block_indices) EXPECT_LE(bd.articulation_points_of(b).size(), 1u);
        EXPECT_EQ(bd.articulation_points, articulation_points(g));
    }
}

}  // namespace
}  // namespace rbbg
