#include "rbbg/graph.hpp"

#include <algorithm>
#include <string>

namespace rbbg {

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
    Graph g(vertex_count);
    for (const auto& e : edges) {
        g.add_edge(e.u, e.v);
    }
    return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
    const auto n = vertex_count();
    if (u >= n || v >= n) {
        throw GraphError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                         "} has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (u == v) {
        throw GraphError("self-loop at vertex " + std::to_string(u));
    }
    auto& nu = adjacency_[u];
    auto pos = std::lower_bound(nu.begin(), nu.end(), v);
    if (pos != nu.end() && *pos == v) {
        throw GraphError("parallel edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    nu.insert(pos, v);
    auto& nv = adjacency_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u >= vertex_count() || v >= vertex_count()) return false;
    const auto& nu = adjacency_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) out.push_back({u, v});
        }
    }
    return out;
}

VertexSet InducedSubgraph::lift(std::span<const Vertex> local) const {
    VertexSet out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(to_parent.at(v));
    std::sort(out.begin(), out.end());
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> members) {
    const auto n = g.vertex_count();
    VertexSet sorted(members.begin(), members.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (!sorted.empty() && sorted.back() >= n) {
        throw GraphError("vertex " + std::to_string(sorted.back()) + " is out of range for a graph on " +
                         std::to_string(n) + " vertices");
    }

    constexpr Vertex kNone = static_cast<Vertex>(-1);
    std::vector<Vertex> local(n, kNone);
    for (std::size_t i = 0; i < sorted.size(); ++i) local[sorted[i]] = static_cast<Vertex>(i);

    // The relabeling is monotone, so filtered neighbor lists stay sorted.
    InducedSubgraph out{Graph(sorted.size()), sorted};
    std::size_t degree_sum = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        auto& adj = out.graph.adjacency_[i];
        adj.reserve(g.adjacency_[sorted[i]].size());
        for (Vertex w : g.adjacency_[sorted[i]]) {
            if (local[w] != kNone) adj.push_back(local[w]);
        }
        degree_sum += adj.size();
    }
    out.graph.edge_count_ = degree_sum / 2;
    return out;
}

VertexSet make_vertex_set(std::vector<Vertex> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

std::size_t intersection_size(std::span<const Vertex> a, std::span<const Vertex> b) {
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

VertexSet complement_of(std::size_t n, std::span<const Vertex> members) {
    std::vector<char> in(n, 0);
    for (Vertex v : members) in.at(v) = 1;
    VertexSet out;
    out.reserve(n - std::min(n, members.size()));
    for (Vertex v = 0; v < n; ++v) {
        if (!in[v]) out.push_back(v);
    }
    return out;
}

Graph make_cycle(std::size_t n) {
    Graph g(n);
    if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i) {
        const auto j = (i + 1) % n;
        g.add_edge(static_cast<Vertex>(std::min(i, j)), static_cast<Vertex>(std::max(i, j)));
    }
    return g;
}

Graph make_complete(std::size_t n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

Graph make_path(std::size_t n) {
    Graph g(n);
    for (Vertex u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

}  // namespace rbbg
