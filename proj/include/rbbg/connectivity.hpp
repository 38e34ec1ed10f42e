#ifndef RBBG_CONNECTIVITY_HPP
#define RBBG_CONNECTIVITY_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rbbg/graph.hpp"

namespace rbbg {

/// Maximal connected vertex sets, ordered by their smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Components of G[members]; ids in the result are parent ids.
std::vector<VertexSet> connected_components_within(const Graph& g,
                                                   std::span<const Vertex> members);

bool is_connected(const Graph& g);

/// Cut vertices of g (per component when g is disconnected). One iterative
/// DFS with discovery/low values.
VertexSet articulation_points(const Graph& g);

/// Connected, at least 3 vertices, and no articulation point.
/// K2 is deliberately not biconnected here.
bool is_biconnected(const Graph& g);

/// is_biconnected(G[members]) without materializing the subgraph.
bool induces_biconnected(const Graph& g, std::span<const Vertex> members);

bool induces_connected(const Graph& g, std::span<const Vertex> members);

/// Blocks and block-cut tree of a connected graph.
///
/// Blocks are identified by their vertex sets; bridges are two-vertex
/// blocks and an isolated vertex is a one-vertex block. Two blocks share
/// at most one vertex, so an edge belongs to the unique block holding both
/// endpoints (see block_of_edge). Blocks are listed in lexicographic order
/// of their sorted vertex sets.
struct BlockDecomposition {
    std::vector<VertexSet> blocks;
    VertexSet articulation_points;
    /// (block index, articulation vertex) pairs; bipartite and a tree.
    std::vector<std::pair<std::size_t, Vertex>> tree_edges;
    /// Blocks of tree degree <= 1; a lone block counts as a leaf.
    std::vector<std::size_t> leaf_block_indices;

    std::optional<std::size_t> block_of_edge(Vertex u, Vertex v) const;
    /// Articulation points lying in block b.
    VertexSet articulation_points_of(std::size_t b) const;
};

/// Throws GraphError when g is empty or disconnected.
BlockDecomposition block_decomposition(const Graph& g);

/// Connected components C_1..C_k of G - {s1, s2}, ordered by smallest member.
/// Throws GraphError on s1 == s2 or out-of-range ids.
std::vector<VertexSet> components_after_pair_removal(const Graph& g, Vertex s1, Vertex s2);

using Path = std::vector<Vertex>;

/// Two u-v paths sharing only u and v, found by two augmenting-path rounds
/// on the vertex-split unit-capacity network. Absent when no such pair
/// exists (in particular whenever g is not biconnected around u, v).
std::optional<std::pair<Path, Path>> two_internally_disjoint_paths(const Graph& g, Vertex u,
                                                                   Vertex v);

}  // namespace rbbg

#endif  // RBBG_CONNECTIVITY_HPP
