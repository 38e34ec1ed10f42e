#include "rbbg/subset_enumeration.hpp"

#include <bit>
#include <set>

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "rbbg/connectivity.hpp"

namespace rbbg {
namespace {

std::set<VertexMask> collect(const Graph& g, std::size_t size) {
    std::set<VertexMask> seen;
    for_each_connected_subset(g, size, [&](VertexMask m) {
        EXPECT_TRUE(seen.insert(m).second) << "subset visited twice";
        return false;
    });
    return seen;
}

std::set<VertexMask> brute(const Graph& g, std::size_t size) {
    std::set<VertexMask> out;
    const auto n = g.vertex_count();
    for (VertexMask m = 1; m < (VertexMask{1} << n); ++m) {
        if (static_cast<std::size_t>(std::popcount(m)) != size) continue;
        if (induces_connected(g, mask_to_set(m))) out.insert(m);
    }
    return out;
}

TEST(ConnectedSubsetTest, MatchesBruteForceExactlyOnce) {
    for (const auto& [name, g] : testing::random_corpus(40, 3, 11, 8)) {
        for (std::size_t k = 1; k <= g.vertex_count(); ++k) {
            EXPECT_EQ(collect(g, k), brute(g, k)) << name << " k=" << k;
        }
    }
    const auto path = make_path(6);
    EXPECT_EQ(collect(path, 3).size(), 4u);
}

TEST(ConnectedSubsetTest, FirstSubsetOfK6) {
    VertexSet first;
    for_each_connected_subset(make_complete(6), 3, [&](VertexMask m) {
        first = mask_to_set(m);
        return true;
    });
    EXPECT_EQ(first, (VertexSet{0, 1, 2}));
}

TEST(ConnectedSubsetTest, StopsAndRejectsLargeGraphs) {
    int calls = 0;
    const bool stopped = for_each_connected_subset(make_complete(8), 4, [&](VertexMask) {
        return ++calls == 5;
    });
    EXPECT_TRUE(stopped);
    EXPECT_EQ(calls, 5);
    EXPECT_FALSE(for_each_connected_subset(make_cycle(5), 0, [](VertexMask) { return true; }));
    EXPECT_THROW(for_each_connected_subset(make_cycle(65), 3, [](VertexMask) { return true; }),
                 GraphError);
}

}  // namespace
}  // namespace rbbg
