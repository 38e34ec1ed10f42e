#include "rbbg/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace rbbg {

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

std::vector<char> membership_mask(std::size_t n, std::span<const Vertex> members) {
    std::vector<char> mask(n, 0);
    for (Vertex v : members) {
        if (v >= n) throw GraphError("vertex " + std::to_string(v) + " is out of range");
        mask[v] = 1;
    }
    return mask;
}

struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
};

/// Lowpoint DFS over G[mask]. Reports cut vertices through on_cut and, when
/// track_edges is set, emits each block's vertex set through on_block.
class LowpointScan {
public:
    LowpointScan(const Graph& g, const std::vector<char>& mask)
        : g_(g), mask_(mask), disc_(g.vertex_count(), kUnvisited), low_(g.vertex_count(), 0) {}

    bool visited(Vertex v) const { return disc_[v] != kUnvisited; }

    /// Returns false as soon as on_cut asks to stop.
    template <typename OnCut, typename OnBlock>
    bool run(Vertex root, bool track_edges, OnCut&& on_cut, OnBlock&& on_block) {
        std::vector<Frame> stack;
        std::vector<Edge> edge_stack;
        std::vector<char> reported(g_.vertex_count(), 0);
        std::size_t root_children = 0;

        disc_[root] = low_[root] = clock_++;
        stack.push_back({root, root, 0});
        while (!stack.empty()) {
            const Vertex v = stack.back().v;
            const Vertex parent = stack.back().parent;
            const auto nbrs = g_.neighbors(v);
            if (stack.back().next < nbrs.size()) {
                const Vertex w = nbrs[stack.back().next++];
                if (!mask_[w]) continue;
                if (disc_[w] == kUnvisited) {
                    if (track_edges) edge_stack.push_back({v, w});
                    disc_[w] = low_[w] = clock_++;
                    stack.push_back({w, v, 0});
                } else if (w != parent && disc_[w] < disc_[v]) {
                    if (track_edges) edge_stack.push_back({v, w});
                    low_[v] = std::min(low_[v], disc_[w]);
                }
                continue;
            }
            stack.pop_back();
            if (stack.empty()) break;
            const Vertex p = stack.back().v;
            low_[p] = std::min(low_[p], low_[v]);
            if (low_[v] >= disc_[p]) {
                if (track_edges) {
                    VertexSet block;
                    while (true) {
                        const Edge e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e.u);
                        block.push_back(e.v);
                        if (e.u == p && e.v == v) break;
                    }
                    on_block(make_vertex_set(std::move(block)));
                }
                if (p == root) {
                    ++root_children;
                    if (root_children == 2 && !reported[p]) {
                        reported[p] = 1;
                        if (!on_cut(p)) return false;
                    }
                } else if (!reported[p]) {
                    reported[p] = 1;
                    if (!on_cut(p)) return false;
                }
            }
        }
        return true;
    }

private:
    const Graph& g_;
    const std::vector<char>& mask_;
    std::vector<std::uint32_t> disc_;
    std::vector<std::uint32_t> low_;
    std::uint32_t clock_ = 0;
};

std::vector<VertexSet> components_of_mask(const Graph& g, const std::vector<char>& mask) {
    const auto n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<VertexSet> out;
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        if (!mask[s] || seen[s]) continue;
        queue.assign(1, s);
        seen[s] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (Vertex w : g.neighbors(queue[head])) {
                if (mask[w] && !seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        std::sort(queue.begin(), queue.end());
        out.push_back(queue);
    }
    return out;
}

}  // namespace

std::vector<VertexSet> connected_components(const Graph& g) {
    return components_of_mask(g, std::vector<char>(g.vertex_count(), 1));
}

std::vector<VertexSet> connected_components_within(const Graph& g,
                                                   std::span<const Vertex> members) {
    return components_of_mask(g, membership_mask(g.vertex_count(), members));
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool induces_connected(const Graph& g, std::span<const Vertex> members) {
    if (members.empty()) return true;
    return connected_components_within(g, members).size() == 1;
}

VertexSet articulation_points(const Graph& g) {
    const std::vector<char> mask(g.vertex_count(), 1);
    LowpointScan scan(g, mask);
    VertexSet cuts;
    for (Vertex r = 0; r < g.vertex_count(); ++r) {
        if (scan.visited(r)) continue;
        scan.run(
            r, false,
            [&](Vertex v) {
                cuts.push_back(v);
                return true;
            },
            [](const VertexSet&) {});
    }
    return make_vertex_set(std::move(cuts));
}

bool induces_biconnected(const Graph& g, std::span<const Vertex> members) {
    if (members.size() < 3) return false;
    const auto mask = membership_mask(g.vertex_count(), members);
    LowpointScan scan(g, mask);
    const Vertex root = *std::min_element(members.begin(), members.end());
    const bool no_cut = scan.run(
        root, false, [](Vertex) { return false; }, [](const VertexSet&) {});
    if (!no_cut) return false;
    return std::all_of(members.begin(), members.end(), [&](Vertex v) { return scan.visited(v); });
}

bool is_biconnected(const Graph& g) {
    std::vector<Vertex> all(g.vertex_count());
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
    return induces_biconnected(g, all);
}

std::optional<std::size_t> BlockDecomposition::block_of_edge(Vertex u, Vertex v) const {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto& blk = blocks[b];
        if (std::binary_search(blk.begin(), blk.end(), u) &&
            std::binary_search(blk.begin(), blk.end(), v)) {
            return b;
        }
    }
    return std::nullopt;
}

VertexSet BlockDecomposition::articulation_points_of(std::size_t b) const {
    VertexSet out;
    for (const auto& [block, a] : tree_edges) {
        if (block == b) out.push_back(a);
    }
    return make_vertex_set(std::move(out));
}

BlockDecomposition block_decomposition(const Graph& g) {
    const auto n = g.vertex_count();
    if (n == 0) throw GraphError("block decomposition of an empty graph");
    if (!is_connected(g)) throw GraphError("block decomposition requires a connected graph");

    BlockDecomposition out;
    if (n == 1) {
        out.blocks.push_back({0});
        out.leaf_block_indices.push_back(0);
        return out;
    }

    const std::vector<char> mask(n, 1);
    LowpointScan scan(g, mask);
    scan.run(
        0, true, [](Vertex) { return true; },
        [&](VertexSet block) { out.blocks.push_back(std::move(block)); });
    std::sort(out.blocks.begin(), out.blocks.end());

    std::vector<std::size_t> membership(n, 0);
    for (const auto& blk : out.blocks) {
        for (Vertex v : blk) ++membership[v];
    }
    for (Vertex v = 0; v < n; ++v) {
        if (membership[v] >= 2) out.articulation_points.push_back(v);
    }
    std::vector<std::size_t> tree_degree(out.blocks.size(), 0);
    for (std::size_t b = 0; b < out.blocks.size(); ++b) {
        for (Vertex v : out.blocks[b]) {
            if (membership[v] >= 2) {
                out.tree_edges.emplace_back(b, v);
                ++tree_degree[b];
            }
        }
    }
    for (std::size_t b = 0; b < out.blocks.size(); ++b) {
        if (tree_degree[b] <= 1) out.leaf_block_indices.push_back(b);
    }
    return out;
}

std::vector<VertexSet> components_after_pair_removal(const Graph& g, Vertex s1, Vertex s2) {
    const auto n = g.vertex_count();
    if (s1 >= n || s2 >= n) throw GraphError("terminal out of range");
    if (s1 == s2) throw GraphError("terminals must be distinct");
    std::vector<char> mask(n, 1);
    mask[s1] = 0;
    mask[s2] = 0;
    return components_of_mask(g, mask);
}

namespace {

/// Residual network for the vertex-split unit-capacity flow.
struct FlowNetwork {
    struct Arc {
        std::size_t to;
        int capacity;
        bool original;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<std::size_t>> out;

    explicit FlowNetwork(std::size_t nodes) : out(nodes) {}

    void add(std::size_t from, std::size_t to, int capacity) {
        out[from].push_back(arcs.size());
        arcs.push_back({to, capacity, true});
        out[to].push_back(arcs.size());
        arcs.push_back({from, 0, false});
    }

    bool augment(std::size_t source, std::size_t sink) {
        std::vector<std::size_t> via(out.size(), kNoArc);
        std::deque<std::size_t> queue{source};
        std::vector<char> seen(out.size(), 0);
        seen[source] = 1;
        while (!queue.empty() && !seen[sink]) {
            const auto x = queue.front();
            queue.pop_front();
            for (auto a : out[x]) {
                const auto y = arcs[a].to;
                if (arcs[a].capacity > 0 && !seen[y]) {
                    seen[y] = 1;
                    via[y] = a;
                    queue.push_back(y);
                }
            }
        }
        if (!seen[sink]) return false;
        for (auto y = sink; y != source;) {
            const auto a = via[y];
            arcs[a].capacity -= 1;
            arcs[a ^ 1].capacity += 1;
            y = arcs[a ^ 1].to;
        }
        return true;
    }

    static constexpr std::size_t kNoArc = std::numeric_limits<std::size_t>::max();
};

}  // namespace

std::optional<std::pair<Path, Path>> two_internally_disjoint_paths(const Graph& g, Vertex u,
                                                                   Vertex v) {
    const auto n = g.vertex_count();
    if (u >= n || v >= n) throw GraphError("path endpoint out of range");
    if (u == v) throw GraphError("path endpoints must be distinct");

    // node x: in = 2x, out = 2x + 1
    FlowNetwork net(2 * n);
    for (Vertex x = 0; x < n; ++x) {
        net.add(2 * x, 2 * x + 1, (x == u || x == v) ? 2 : 1);
    }
    for (const auto& e : g.edges()) {
        net.add(2 * e.u + 1, 2 * e.v, 1);
        net.add(2 * e.v + 1, 2 * e.u, 1);
    }
    const std::size_t source = 2 * u + 1;
    const std::size_t sink = 2 * v;
    if (!net.augment(source, sink) || !net.augment(source, sink)) return std::nullopt;

    // Arc flow is 1 exactly when an original arc's capacity dropped to 0.
    std::vector<char> used(net.arcs.size(), 0);
    auto walk = [&]() {
        Path path{u};
        Vertex x = u;
        while (x != v) {
            bool moved = false;
            for (auto a : net.out[2 * x + 1]) {
                const auto& arc = net.arcs[a];
                if (arc.original && arc.capacity == 0 && !used[a] && arc.to % 2 == 0) {
                    used[a] = 1;
                    x = static_cast<Vertex>(arc.to / 2);
                    path.push_back(x);
                    moved = true;
                    break;
                }
            }
            if (!moved) return Path{};
        }
        return path;
    };
    Path first = walk();
    Path second = walk();
    if (first.empty() || second.empty()) return std::nullopt;
    if (second < first) std::swap(first, second);
    return std::make_pair(std::move(first), std::move(second));
}

}  // namespace rbbg
