#include "rbbg/generators.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "rbbg/connectivity.hpp"

namespace rbbg::gen {

namespace {

// std::mt19937_64 output is fixed by the standard; the distributions are
// not, so draws are reduced by hand to keep outputs identical everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::size_t below(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw GraphError(what);
}

void add_edge_sorted(Graph& g, std::size_t a, std::size_t b) {
    g.add_edge(static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b)));
}

void add_random_chords(Graph& g, std::size_t count, Rng& rng) {
    const auto n = g.vertex_count();
    const auto max_edges = n * (n - 1) / 2;
    count = std::min(count, max_edges - g.edge_count());
    while (count > 0) {
        const auto u = rng.below(n);
        const auto v = rng.below(n);
        if (u == v || g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) continue;
        add_edge_sorted(g, u, v);
        --count;
    }
}

Graph checked(Graph g) {
    if (!is_biconnected(g)) throw std::logic_error("generator produced a non-biconnected graph");
    return g;
}

}  // namespace

Graph cycle_chords(std::size_t n, std::uint64_t seed) {
    require(n >= 3, "cycle-chords needs n >= 3");
    Graph g = make_cycle(n);
    Rng rng(seed);
    add_random_chords(g, n / 2, rng);
    return checked(std::move(g));
}

Graph wheel(std::size_t n) {
    require(n >= 4, "wheel needs n >= 4");
    Graph g(n);
    const auto rim = n - 1;
    for (std::size_t i = 0; i < rim; ++i) {
        g.add_edge(0, static_cast<Vertex>(i + 1));
        add_edge_sorted(g, i + 1, (i + 1) % rim + 1);
    }
    return checked(std::move(g));
}

Graph complete(std::size_t n) {
    require(n >= 3, "complete needs n >= 3");
    return make_complete(n);
}

Graph prism_ladder(std::size_t n) {
    require(n >= 6 && n % 2 == 0, "prism-ladder needs an even n >= 6");
    const auto h = n / 2;
    Graph g(n);
    for (std::size_t i = 0; i < h; ++i) {
        add_edge_sorted(g, i, (i + 1) % h);
        add_edge_sorted(g, h + i, h + (i + 1) % h);
        add_edge_sorted(g, i, h + i);
    }
    return checked(std::move(g));
}

Graph theta_pairs(std::size_t n) {
    require(n >= 4 && n % 2 == 0, "theta-pairs needs an even n >= 4");
    Graph g(n);
    g.add_edge(0, 1);
    for (Vertex a = 2; a < n; a += 2) {
        g.add_edge(a, a + 1);
        g.add_edge(0, a);
        g.add_edge(1, a + 1);
    }
    return checked(std::move(g));
}

Graph random_biconnected(std::size_t n, std::uint64_t seed) {
    require(n >= 3, "random-biconnected needs n >= 3");
    Rng rng(seed);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    rng.shuffle(perm);
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) add_edge_sorted(g, perm[i], perm[(i + 1) % n]);
    add_random_chords(g, rng.below(n + 1), rng);
    return checked(std::move(g));
}

Graph random_ears(std::size_t n, std::uint64_t seed) {
    require(n >= 3, "random-ears needs n >= 3");
    Rng rng(seed);
    Graph g(n);
    const auto first = std::min<std::size_t>(n, 3 + rng.below(3));
    for (std::size_t i = 0; i < first; ++i) add_edge_sorted(g, i, (i + 1) % first);
    std::size_t used = first;
    std::size_t stalls = 0;
    while (used < n || (rng.below(4) == 0 && stalls < 8)) {
        const auto a = rng.below(used);
        const auto b = rng.below(used);
        if (a == b) continue;
        const auto length = used < n ? 1 + rng.below(std::min<std::size_t>(n - used, 3)) : 0;
        if (length == 0) {
            if (g.has_edge(static_cast<Vertex>(a), static_cast<Vertex>(b))) {
                ++stalls;
                continue;
            }
            add_edge_sorted(g, a, b);
            continue;
        }
        std::size_t prev = a;
        for (std::size_t i = 0; i < length; ++i) {
            add_edge_sorted(g, prev, used);
            prev = used++;
        }
        add_edge_sorted(g, prev, b);
    }
    return checked(std::move(g));
}

Graph generate(std::string_view family, std::size_t n, std::uint64_t seed) {
    if (family == "cycle-chords") return cycle_chords(n, seed);
    if (family == "wheel") return wheel(n);
    if (family == "complete") return complete(n);
    if (family == "prism-ladder") return prism_ladder(n);
    if (family == "theta-pairs") return theta_pairs(n);
    if (family == "random-biconnected") return random_biconnected(n, seed);
    throw GraphError("unknown graph family '" + std::string(family) + "'");
}

}  // namespace rbbg::gen
