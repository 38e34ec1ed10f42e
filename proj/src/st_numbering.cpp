#include "rbbg/st_numbering.hpp"

#include <algorithm>
#include <limits>
#include <list>
#include <string>

#include "rbbg/connectivity.hpp"

namespace rbbg {

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

void require_terminal_edge(const Graph& g, Vertex s, Vertex t) {
    if (s >= g.vertex_count() || t >= g.vertex_count()) {
        throw GraphError("terminal out of range");
    }
    if (s == t) throw GraphError("terminals must be distinct");
    if (!g.has_edge(s, t)) {
        throw GraphError("terminals " + std::to_string(s) + " and " + std::to_string(t) +
                         " are not adjacent");
    }
    if (!is_biconnected(g)) throw GraphError("graph is not biconnected");
}

}  // namespace

StNumbering st_numbering(const Graph& g, Vertex s, Vertex t) {
    require_terminal_edge(g, s, t);
    const auto n = g.vertex_count();

    // DFS from s whose first tree edge is s -> t. low[v] holds the vertex of
    // smallest preorder reachable from v's subtree by at most one back edge.
    std::vector<std::uint32_t> pre(n, kUnvisited);
    std::vector<Vertex> parent(n, s);
    std::vector<Vertex> low(n);
    std::vector<Vertex> preorder;
    preorder.reserve(n);

    struct Frame {
        Vertex v;
        std::size_t next;
    };
    std::vector<Frame> stack;
    auto visit = [&](Vertex v, Vertex p) {
        pre[v] = static_cast<std::uint32_t>(preorder.size());
        preorder.push_back(v);
        parent[v] = p;
        low[v] = v;
        stack.push_back({v, 0});
    };
    visit(s, s);
    visit(t, s);
    while (!stack.empty()) {
        auto& top = stack.back();
        const Vertex v = top.v;
        const auto nbrs = g.neighbors(v);
        if (top.next < nbrs.size()) {
            const Vertex w = nbrs[top.next++];
            if (pre[w] == kUnvisited) {
                visit(w, v);
            } else if (pre[w] < pre[low[v]]) {
                low[v] = w;
            }
            continue;
        }
        stack.pop_back();
        if (v != s) {
            const Vertex p = parent[v];
            if (pre[low[v]] < pre[low[p]]) low[p] = low[v];
        }
        // s's own stack frame sits below t's; t is finished last but s still
        // scans its remaining neighbors, all of which are visited by then.
    }

    // Ordering pass: each vertex goes right before or after its parent.
    enum class Sign : char { Minus, Plus };
    std::vector<Sign> sign(n, Sign::Plus);
    std::list<Vertex> order{s, t};
    std::vector<std::list<Vertex>::iterator> where(n);
    where[s] = order.begin();
    where[t] = std::next(order.begin());
    sign[s] = Sign::Minus;
    for (std::size_t i = 2; i < preorder.size(); ++i) {
        const Vertex v = preorder[i];
        const Vertex p = parent[v];
        if (sign[low[v]] == Sign::Minus) {
            where[v] = order.insert(where[p], v);
            sign[p] = Sign::Plus;
        } else {
            where[v] = order.insert(std::next(where[p]), v);
            sign[p] = Sign::Minus;
        }
    }

    StNumbering out;
    out.order.assign(order.begin(), order.end());
    out.rank.assign(n, 0);
    for (std::size_t r = 0; r < n; ++r) out.rank[out.order[r]] = r;
    return out;
}

bool is_st_numbering(const Graph& g, const StNumbering& numbering, Vertex s, Vertex t) {
    const auto n = g.vertex_count();
    if (numbering.order.size() != n || numbering.rank.size() != n) return false;
    std::vector<char> seen(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        const Vertex v = numbering.order[r];
        if (v >= n || seen[v] || numbering.rank[v] != r) return false;
        seen[v] = 1;
    }
    if (n == 0 || numbering.rank[s] != 0 || numbering.rank[t] != n - 1) return false;
    for (Vertex v = 0; v < n; ++v) {
        if (v == s || v == t) continue;
        bool lower = false;
        bool higher = false;
        for (Vertex w : g.neighbors(v)) {
            (numbering.rank[w] < numbering.rank[v] ? lower : higher) = true;
        }
        if (!lower || !higher) return false;
    }
    return true;
}

ConnectedBipartition connected_bipartition(const Graph& g, Vertex s1, Vertex s2, std::size_t n1,
                                           std::size_t n2) {
    if (n1 < 1 || n2 < 1 || n1 + n2 != g.vertex_count()) {
        throw GraphError("part sizes " + std::to_string(n1) + "+" + std::to_string(n2) +
                         " do not split " + std::to_string(g.vertex_count()) +
                         " vertices into two nonempty parts");
    }
    const auto numbering = st_numbering(g, s1, s2);
    ConnectedBipartition out;
    out.v1.assign(numbering.order.begin(), numbering.order.begin() + static_cast<std::ptrdiff_t>(n1));
    out.v2.assign(numbering.order.begin() + static_cast<std::ptrdiff_t>(n1), numbering.order.end());
    std::sort(out.v1.begin(), out.v1.end());
    std::sort(out.v2.begin(), out.v2.end());
    return out;
}

}  // namespace rbbg
