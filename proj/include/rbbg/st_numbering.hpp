#ifndef RBBG_ST_NUMBERING_HPP
#define RBBG_ST_NUMBERING_HPP

#include <cstddef>
#include <vector>

#include "rbbg/graph.hpp"

namespace rbbg {

/// Vertex ordering with s first, t last, and every other vertex having a
/// lower-ranked and a higher-ranked neighbor.
struct StNumbering {
    std::vector<Vertex> order;      // rank -> vertex
    std::vector<std::size_t> rank;  // vertex -> rank
};

/// Throws GraphError unless g is biconnected and {s, t} is an edge.
StNumbering st_numbering(const Graph& g, Vertex s, Vertex t);

/// True when `numbering` is a valid st-numbering of g for (s, t).
bool is_st_numbering(const Graph& g, const StNumbering& numbering, Vertex s, Vertex t);

struct ConnectedBipartition {
    VertexSet v1;  // holds s1
    VertexSet v2;  // holds s2
};

/// Connected (not necessarily biconnected) split with |V1| = n1 and
/// |V2| = n2: V1 is the n1-prefix of the st-numbering from s1 to s2.
/// Throws GraphError on size mismatch, a non-biconnected graph or
/// non-adjacent terminals.
ConnectedBipartition connected_bipartition(const Graph& g, Vertex s1, Vertex s2, std::size_t n1,
                                           std::size_t n2);

}  // namespace rbbg

#endif  // RBBG_ST_NUMBERING_HPP
