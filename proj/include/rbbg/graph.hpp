#ifndef RBBG_GRAPH_HPP
#define RBBG_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rbbg {

using Vertex = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids. Its size is the weight w(V').
using VertexSet = std::vector<Vertex>;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Undirected simple graph on vertices 0..n-1.
///
/// Neighbor lists are kept sorted ascending so every traversal that walks
/// them is deterministic. Construction rejects self-loops, parallel edges
/// and out-of-range endpoints; after construction the graph is treated as
/// immutable by every algorithm in the library.
struct InducedSubgraph;

class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t vertex_count);

    static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

    void add_edge(Vertex u, Vertex v);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    bool has_edge(Vertex u, Vertex v) const;

    /// All edges with u < v, in ascending lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;
    friend InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> members);

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// G[s] relabeled to 0..|s|-1; to_parent maps local ids back.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;

    VertexSet lift(std::span<const Vertex> local) const;
};

/// Throws GraphError if any id is out of range. Members need not be sorted;
/// local ids follow ascending parent id.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> members);

/// Sorts and deduplicates.
VertexSet make_vertex_set(std::vector<Vertex> members);

/// Number of elements of a that also lie in b (both sorted).
std::size_t intersection_size(std::span<const Vertex> a, std::span<const Vertex> b);

/// V minus members, for a graph on n vertices.
VertexSet complement_of(std::size_t n, std::span<const Vertex> members);

// Canonical small graphs used by tests, the CLI and the Python bindings.
Graph make_cycle(std::size_t n);
Graph make_complete(std::size_t n);
Graph make_path(std::size_t n);

}  // namespace rbbg

#endif  // RBBG_GRAPH_HPP
