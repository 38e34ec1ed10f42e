#ifndef RBBG_ORACLE_HPP
#define RBBG_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rbbg/bipartition.hpp"
#include "rbbg/graph.hpp"

namespace rbbg::oracle {

/// Hard cap on graph size for every brute-force routine here.
inline constexpr std::size_t kMaxVertices = 16;

struct OracleReport {
    bool feasible_separated = false;
    /// Terminals together in V1 or together in V2.
    bool feasible_together = false;
    std::vector<Witness> witnesses;  // at most the requested cap
    std::uint64_t enumerated_count = 0;

    bool feasible() const { return feasible_separated || feasible_together; }
};

/// Brute force over every n1-subset V1 in lexicographic order, classified
/// by where the terminals land (s1 in V2 with s2 in V1 is not a queried
/// placement and is skipped); both sides tested for biconnectivity by
/// deleting each vertex in turn. enumerated_count counts all subsets. Throws GraphError above kMaxVertices or on
/// n1 + n2 != n.
OracleReport oracle_bbg2(const Graph& g, Vertex s1, Vertex s2, std::size_t n1, std::size_t n2,
                         std::size_t witness_cap = 8);

/// Whether some split with |V1| = n1 (holding s1), |V2| = n2 (holding s2)
/// has both sides connected.
bool oracle_connected_partition(const Graph& g, Vertex s1, Vertex s2, std::size_t n1,
                                std::size_t n2);

/// Naive biconnectivity: at least 3 vertices, connected, and connected after
/// deleting any single vertex. Independent of the lowpoint routines.
bool naive_biconnected(const Graph& g, std::uint32_t subset_mask);

bool naive_connected(const Graph& g, std::uint32_t subset_mask);

}  // namespace rbbg::oracle

#endif  // RBBG_ORACLE_HPP
