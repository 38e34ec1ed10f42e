#include "rbbg/oracle.hpp"

#include <bit>
#include <string>

namespace rbbg::oracle {

namespace {

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(g.vertex_count(), 0);
    for (const auto& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    return adj;
}

bool connected_mask(const std::vector<std::uint32_t>& adj, std::uint32_t subset) {
    if (subset == 0) return true;
    std::uint32_t reached = subset & (~subset + 1);
    std::uint32_t frontier = reached;
    while (frontier != 0) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
            next |= adj[std::countr_zero(f)];
        }
        next &= subset & ~reached;
        reached |= next;
        frontier = next;
    }
    return reached == subset;
}

bool biconnected_mask(const std::vector<std::uint32_t>& adj, std::uint32_t subset) {
    if (std::popcount(subset) < 3 || !connected_mask(adj, subset)) return false;
    for (std::uint32_t s = subset; s != 0; s &= s - 1) {
        const std::uint32_t drop = s & (~s + 1);
        if (!connected_mask(adj, subset & ~drop)) return false;
    }
    return true;
}

void check_size(const Graph& g, std::size_t n1, std::size_t n2) {
    if (g.vertex_count() > kMaxVertices) {
        throw GraphError("oracle is limited to " + std::to_string(kMaxVertices) + " vertices");
    }
    if (n1 + n2 != g.vertex_count()) throw GraphError("n1 + n2 must equal the vertex count");
}

VertexSet to_set(std::uint32_t mask) {
    VertexSet out;
    for (; mask != 0; mask &= mask - 1) out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    return out;
}

/// Calls visit(mask) for every n-bit mask with `size` bits set, in
/// lexicographic order of the sorted member lists.
template <typename Visit>
void for_each_combination(std::size_t n, std::size_t size, Visit&& visit) {
    if (size > n) return;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
        std::uint32_t mask = 0;
        for (auto i : idx) mask |= 1u << i;
        visit(mask);
        std::size_t i = size;
        while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

bool naive_biconnected(const Graph& g, std::uint32_t subset_mask) {
    return biconnected_mask(adjacency_masks(g), subset_mask);
}

bool naive_connected(const Graph& g, std::uint32_t subset_mask) {
    return connected_mask(adjacency_masks(g), subset_mask);
}

OracleReport oracle_bbg2(const Graph& g, Vertex s1, Vertex s2, std::size_t n1, std::size_t n2,
                         std::size_t witness_cap) {
    check_size(g, n1, n2);
    const auto n = g.vertex_count();
    if (s1 >= n || s2 >= n || s1 == s2) throw GraphError("invalid terminals");
    const auto adj = adjacency_masks(g);
    const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
    const std::uint32_t t1 = 1u << s1;
    const std::uint32_t t2 = 1u << s2;

    OracleReport report;
    for_each_combination(n, n1, [&](std::uint32_t v1) {
        ++report.enumerated_count;
        const std::uint32_t v2 = all & ~v1;
        Placement placement;
        if ((v1 & t1) && (v2 & t2)) {
            placement = Placement::Separated;
        } else if ((v1 & t1) && (v1 & t2)) {
            placement = Placement::TogetherInV1;
        } else if ((v2 & t1) && (v2 & t2)) {
            placement = Placement::TogetherInV2;
        } else {
            return;  // s1 in V2 with s2 in V1 is not a queried placement
        }
        if (!biconnected_mask(adj, v1) || !biconnected_mask(adj, v2)) return;
        (placement == Placement::Separated ? report.feasible_separated
                                           : report.feasible_together) = true;
        if (report.witnesses.size() < witness_cap) {
            report.witnesses.push_back({to_set(v1), to_set(v2), placement});
        }
    });
    return report;
}

bool oracle_connected_partition(const Graph& g, Vertex s1, Vertex s2, std::size_t n1,
                                std::size_t n2) {
    check_size(g, n1, n2);
    const auto n = g.vertex_count();
    if (s1 >= n || s2 >= n || s1 == s2) throw GraphError("invalid terminals");
    const auto adj = adjacency_masks(g);
    const std::uint32_t all = (1u << n) - 1;
    bool found = false;
    for_each_combination(n, n1, [&](std::uint32_t v1) {
        if (found) return;
        const std::uint32_t v2 = all & ~v1;
        if (!(v1 & (1u << s1)) || !(v2 & (1u << s2))) return;
        found = connected_mask(adj, v1) && connected_mask(adj, v2);
    });
    return found;
}

}  // namespace rbbg::oracle
