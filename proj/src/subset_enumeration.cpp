#include "rbbg/subset_enumeration.hpp"

#include <bit>
#include <string>
#include <vector>

namespace rbbg {

namespace {

inline VertexMask bit(Vertex v) { return VertexMask{1} << v; }

// Extension-set enumeration: a vertex may join the extension only if it is
// larger than the root and not adjacent to the current subset, so each
// connected subset is reached along exactly one branch.
class ConnectedSubsetWalker {
public:
    ConnectedSubsetWalker(const Graph& g, std::size_t size,
                          const std::function<bool(VertexMask)>& visit)
        : size_(size), visit_(visit), adjacency_(g.vertex_count(), 0) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            for (Vertex w : g.neighbors(v)) adjacency_[v] |= bit(w);
        }
    }

    bool run() {
        for (Vertex root = 0; root < adjacency_.size(); ++root) {
            const VertexMask above = ~((bit(root) << 1) - 1);
            if (extend(bit(root), adjacency_[root] & above, adjacency_[root] | bit(root), above)) {
                return true;
            }
        }
        return false;
    }

private:
    bool extend(VertexMask current, VertexMask extension, VertexMask closed, VertexMask above) {
        if (static_cast<std::size_t>(std::popcount(current)) == size_) return visit_(current);
        while (extension != 0) {
            const Vertex w = static_cast<Vertex>(std::countr_zero(extension));
            extension &= extension - 1;
            const VertexMask fresh = adjacency_[w] & above & ~closed;
            if (extend(current | bit(w), extension | fresh, closed | adjacency_[w], above)) {
                return true;
            }
        }
        return false;
    }

    std::size_t size_;
    const std::function<bool(VertexMask)>& visit_;
    std::vector<VertexMask> adjacency_;
};

}  // namespace

bool for_each_connected_subset(const Graph& g, std::size_t size,
                               const std::function<bool(VertexMask)>& visit) {
    if (g.vertex_count() > kMaxEnumerationVertices) {
        throw GraphError("connected-subset enumeration is limited to " +
                         std::to_string(kMaxEnumerationVertices) + " vertices");
    }
    if (size == 0 || size > g.vertex_count()) return false;
    return ConnectedSubsetWalker(g, size, visit).run();
}

VertexSet mask_to_set(VertexMask mask) {
    VertexSet out;
    while (mask != 0) {
        out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return out;
}

}  // namespace rbbg
