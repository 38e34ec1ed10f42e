#include "rbbg/bipartition.hpp"

#include <algorithm>
#include <string>

#include "rbbg/connectivity.hpp"
#include "rbbg/subset_enumeration.hpp"

namespace rbbg {

std::string_view to_string(Status s) {
    switch (s) {
        case Status::Feasible: return "feasible";
        case Status::Infeasible: return "infeasible";
        case Status::Indeterminate: return "indeterminate";
    }
    return "?";
}

std::string_view to_string(Placement p) {
    switch (p) {
        case Placement::Separated: return "SEPARATED";
        case Placement::TogetherInV1: return "TOGETHER_IN_V1";
        case Placement::TogetherInV2: return "TOGETHER_IN_V2";
    }
    return "?";
}

std::string_view to_string(Branch b) {
    switch (b) {
        case Branch::None: return "NONE";
        case Branch::KGt2SeparatedInfeasible: return "K_GT_2_SEPARATED_INFEASIBLE";
        case Branch::KEq2Separated: return "K_EQ_2_SEPARATED";
        case Branch::KEq1SeparatedTwoBlocks: return "K_EQ_1_SEPARATED_TWO_BLOCKS";
        case Branch::KEq1BiconnectedSplit: return "K_EQ_1_BICONNECTED_SPLIT";
        case Branch::KEq1SeparatedGeneral: return "K_EQ_1_SEPARATED_GENERAL";
        case Branch::WholeComponent: return "WHOLE_COMPONENT";
        case Branch::KGt2LeafBlock: return "K_GT_2_LEAF_BLOCK";
        case Branch::KEq1TogetherLeafBlock: return "K_EQ_1_TOGETHER_LEAF_BLOCK";
        case Branch::TogetherInnerBlock: return "TOGETHER_INNER_BLOCK";
    }
    return "?";
}

std::string_view to_string(StopReason r) {
    switch (r) {
        case StopReason::Split: return "split";
        case StopReason::BelowMinimumSize: return "below-minimum-size";
        case StopReason::Infeasible: return "infeasible";
        case StopReason::Indeterminate: return "indeterminate";
    }
    return "?";
}

SearchCounters& SearchCounters::operator+=(const SearchCounters& other) {
    edges_tried += other.edges_tried;
    subsets_enumerated += other.subsets_enumerated;
    leaf_blocks_seen += other.leaf_blocks_seen;
    return *this;
}

std::pair<std::size_t, std::size_t> default_split(std::size_t n) { return {(n + 1) / 2, n / 2}; }

namespace {

constexpr std::size_t kMinPart = 3;

void validate_shape(const Graph& g, Vertex s1, Vertex s2, std::size_t n1, std::size_t n2) {
    const auto n = g.vertex_count();
    if (s1 >= n || s2 >= n) throw InvalidInstance("terminal vertex out of range");
    if (s1 == s2) throw InvalidInstance("terminals s1 and s2 must differ");
    if (!g.has_edge(s1, s2)) {
        throw InvalidInstance("terminals " + std::to_string(s1) + " and " + std::to_string(s2) +
                              " are not adjacent");
    }
    if (n1 + n2 != n) {
        throw InvalidInstance("n1 + n2 = " + std::to_string(n1 + n2) + " but the graph has " +
                              std::to_string(n) + " vertices");
    }
    if (n1 < kMinPart || n2 < kMinPart) {
        throw InvalidInstance("both part sizes must be at least 3");
    }
}

VertexSet with_vertex(VertexSet set, Vertex v) {
    set.insert(std::lower_bound(set.begin(), set.end(), v), v);
    return set;
}

VertexSet without_vertex(VertexSet set, Vertex v) {
    set.erase(std::remove(set.begin(), set.end(), v), set.end());
    return set;
}

VertexSet neighborhood(const Graph& g, Vertex v) {
    const auto nbrs = g.neighbors(v);
    return VertexSet(nbrs.begin(), nbrs.end());
}

/// Local ids (in `sub`) of the parent vertices listed in `parent_set`.
VertexSet to_local(const InducedSubgraph& sub, const VertexSet& parent_set) {
    VertexSet out;
    for (Vertex i = 0; i < sub.to_parent.size(); ++i) {
        if (std::binary_search(parent_set.begin(), parent_set.end(), sub.to_parent[i])) {
            out.push_back(i);
        }
    }
    return out;
}

DecisionResult start_result(const BipartitionInstance& inst, std::size_t k) {
    DecisionResult r;
    r.terminals = Edge{inst.s1, inst.s2};
    r.trace.k = k;
    return r;
}

/// Everything about G - {s1, s2} that the case analysis reads. Computed
/// once per terminal pair and shared by the separated and together searches.
struct PairAnalysis {
    std::vector<VertexSet> comps;
    std::vector<InducedSubgraph> subs;
    std::vector<BlockDecomposition> decomps;
    VertexSet n_s1;
    VertexSet n_s2;
};

PairAnalysis analyze(const BipartitionInstance& inst) {
    PairAnalysis a;
    a.comps = components_after_pair_removal(inst.graph, inst.s1, inst.s2);
    a.subs.reserve(a.comps.size());
    a.decomps.reserve(a.comps.size());
    for (const auto& c : a.comps) {
        a.subs.push_back(induced_subgraph(inst.graph, c));
        a.decomps.push_back(block_decomposition(a.subs.back().graph));
    }
    a.n_s1 = neighborhood(inst.graph, inst.s1);
    a.n_s2 = neighborhood(inst.graph, inst.s2);
    return a;
}

void accept_witness(DecisionResult& r, const BipartitionInstance& inst, Witness w) {
    if (!verify_witness(inst.graph, inst.s1, inst.s2, inst.n1, inst.n2, w)) {
        throw std::logic_error("internal error: candidate witness failed verification");
    }
    r.status = Status::Feasible;
    r.witness = std::move(w);
    r.reason.clear();
}

// ---------------------------------------------------------------- separated

/// Splits component C (given as an induced subgraph) into A joining s1 and
/// C \ A joining s2. With parts_biconnected, A and C \ A must each be
/// biconnected on their own as well.
std::optional<Witness> search_separated_split(const BipartitionInstance& inst,
                                              const InducedSubgraph& comp,
                                              const VertexSet& n_s1, const VertexSet& n_s2,
                                              bool parts_biconnected, std::size_t cap,
                                              SearchCounters& counters) {
    if (comp.graph.vertex_count() > cap) {
        throw SearchBudgetExceeded("component of " + std::to_string(comp.graph.vertex_count()) +
                                   " vertices exceeds the search budget of " +
                                   std::to_string(cap));
    }
    const auto& g = inst.graph;
    std::optional<Witness> found;
    const std::size_t side = inst.n1 - 1;
    const VertexMask all = comp.graph.vertex_count() == 64
                               ? ~VertexMask{0}
                               : (VertexMask{1} << comp.graph.vertex_count()) - 1;
    for_each_connected_subset(comp.graph, side, [&](VertexMask mask) {
        ++counters.subsets_enumerated;
        const VertexSet a_local = mask_to_set(mask);
        const VertexSet b_local = mask_to_set(all & ~mask);
        const VertexSet a = comp.lift(a_local);
        const VertexSet b = comp.lift(b_local);
        if (intersection_size(a, n_s1) < 2 || intersection_size(b, n_s2) < 2) return false;
        if (parts_biconnected && (!induces_biconnected(comp.graph, a_local) ||
                                  !induces_biconnected(comp.graph, b_local))) {
            return false;
        }
        Witness w{with_vertex(a, inst.s1), with_vertex(b, inst.s2), Placement::Separated};
        if (!verify_witness(g, inst.s1, inst.s2, inst.n1, inst.n2, w)) return false;
        found = std::move(w);
        return true;
    });
    return found;
}

DecisionResult separated_impl(const BipartitionInstance& inst, const DecisionOptions& options,
                              const PairAnalysis& pa) {
    const auto& g = inst.graph;
    const auto& comps = pa.comps;
    DecisionResult r = start_result(inst, comps.size());
    const auto k = comps.size();

    if (k > 2) {
        // V1 - s1 and V2 - s2 are connected, so each fits inside one component.
        r.trace.branch = Branch::KGt2SeparatedInfeasible;
        r.reason = std::to_string(k) +
                   " components remain after removing s1 and s2; separating the terminals "
                   "would leave a terminal as a cut vertex of its part";
        return r;
    }

    const VertexSet& n_s1 = pa.n_s1;
    const VertexSet& n_s2 = pa.n_s2;

    if (k == 2) {
        r.trace.branch = Branch::KEq2Separated;
        if (n_s1.size() < 3 || n_s2.size() < 3) {
            r.reason = "a separated split needs deg(s1) >= 3 and deg(s2) >= 3";
            return r;
        }
        for (std::size_t a : {0u, 1u}) {
            const auto& c1 = comps[a];
            const auto& c2 = comps[1 - a];
            if (c1.size() + 1 != inst.n1 || c2.size() + 1 != inst.n2) continue;
            if (intersection_size(c1, n_s1) < 2 || intersection_size(c2, n_s2) < 2) continue;
            Witness w{with_vertex(c1, inst.s1), with_vertex(c2, inst.s2), Placement::Separated};
            if (verify_witness(g, inst.s1, inst.s2, inst.n1, inst.n2, w)) {
                r.trace.component_index = a;
                accept_witness(r, inst, std::move(w));
                return r;
            }
        }
        r.reason =
            "with two components each part must be one component plus its terminal, and no "
            "assignment yields biconnected parts of the requested sizes";
        return r;
    }

    // k == 1
    const auto& comp = pa.subs.front();
    const auto& blocks = pa.decomps.front();
    const auto h = blocks.blocks.size();
    r.trace.component_index = 0;

    if (h == 2) {
        r.trace.branch = Branch::KEq1SeparatedTwoBlocks;
        const VertexSet b0 = comp.lift(blocks.blocks[0]);
        const VertexSet b1 = comp.lift(blocks.blocks[1]);
        const Vertex cut = comp.to_parent[blocks.articulation_points.front()];
        // Each block goes to one terminal; the shared cut vertex to either side.
        for (std::size_t first : {1u, 0u}) {
            const auto& x = first == 1 ? b1 : b0;
            const auto& y = first == 1 ? b0 : b1;
            for (bool cut_with_s1 : {true, false}) {
                const VertexSet a = cut_with_s1 ? x : without_vertex(x, cut);
                const VertexSet b = cut_with_s1 ? without_vertex(y, cut) : y;
                if (a.size() + 1 != inst.n1 || b.size() + 1 != inst.n2) continue;
                if (intersection_size(a, n_s1) < 2 || intersection_size(b, n_s2) < 2) continue;
                Witness w{with_vertex(a, inst.s1), with_vertex(b, inst.s2), Placement::Separated};
                if (verify_witness(g, inst.s1, inst.s2, inst.n1, inst.n2, w)) {
                    r.trace.block_index = first;
                    accept_witness(r, inst, std::move(w));
                    return r;
                }
            }
        }
        if (options.strict_paper) {
            r.reason = "the two blocks of the remaining component do not form the parts";
            return r;
        }
    } else if (h == 1) {
        r.trace.branch = Branch::KEq1BiconnectedSplit;
        try {
            if (auto w = search_separated_split(inst, comp, n_s1, n_s2, options.strict_paper,
                                                options.max_block_size, r.trace.counters)) {
                r.trace.split_part = without_vertex(w->v2, inst.s2);
                r.trace.split_complement = without_vertex(w->v1, inst.s1);
                accept_witness(r, inst, std::move(*w));
                return r;
            }
        } catch (const SearchBudgetExceeded& e) {
            r.status = Status::Indeterminate;
            r.reason = e.what();
            return r;
        }
        r.reason = "no split of the biconnected remaining component gives biconnected parts";
        return r;
    } else if (options.strict_paper) {
        r.trace.branch = Branch::KEq1SeparatedTwoBlocks;
        r.reason = "the remaining component has " + std::to_string(h) +
                   " blocks; the screening only admits two";
        return r;
    }

    r.trace.branch = Branch::KEq1SeparatedGeneral;
    try {
        if (auto w = search_separated_split(inst, comp, n_s1, n_s2, false, options.max_block_size,
                                            r.trace.counters)) {
            r.trace.split_part = without_vertex(w->v2, inst.s2);
            r.trace.split_complement = without_vertex(w->v1, inst.s1);
            accept_witness(r, inst, std::move(*w));
            return r;
        }
    } catch (const SearchBudgetExceeded& e) {
        r.status = Status::Indeterminate;
        r.reason = e.what();
        return r;
    }
    r.reason = "no connected split of the remaining component gives biconnected parts";
    return r;
}

// ----------------------------------------------------------------- together

struct BlockSearch {
    const BipartitionInstance& inst;
    const DecisionOptions& options;
    DecisionResult& result;
    bool budget_hit = false;
    std::string budget_reason;

    /// Looks for V2 inside one block. `anchor` restricts the block complement
    /// to meet it (empty optional: no restriction).
    bool try_block(const InducedSubgraph& comp, const VertexSet& block_local,
                   std::size_t comp_index, std::size_t block_index, Branch branch,
                   const std::optional<VertexSet>& anchor) {
        const auto& g = inst.graph;
        const VertexSet block = comp.lift(block_local);
        if (block.size() < inst.n2) return false;

        const auto rest_is_biconnected = [&](const VertexSet& part) {
            return induces_biconnected(g, complement_of(g.vertex_count(), part));
        };

        if (block.size() == inst.n2) {
            if (!induces_biconnected(g, block) || !rest_is_biconnected(block)) return false;
            finish(block, {}, comp_index, block_index, branch);
            return true;
        }
        if (block.size() > options.max_block_size) {
            budget_hit = true;
            budget_reason = "block of " + std::to_string(block.size()) +
                            " vertices exceeds the search budget of " +
                            std::to_string(options.max_block_size);
            return false;
        }

        const auto sub = induced_subgraph(g, block);
        VertexSet anchor_local;
        if (anchor) {
            anchor_local = to_local(sub, *anchor);
        } else {
            for (Vertex v = 0; v < sub.graph.vertex_count(); ++v) anchor_local.push_back(v);
        }
        SplitSearchOptions split;
        split.max_block_size = options.max_block_size;
        split.counters = &result.trace.counters;
        split.accept = [&](const VertexSet& part, const VertexSet& rest) {
            if (options.strict_paper && !rest.empty() && !induces_biconnected(sub.graph, rest)) {
                return false;
            }
            return rest_is_biconnected(sub.lift(part));
        };
        const auto hit = biconnected_split_search(sub.graph, inst.n2, anchor_local, split);
        if (!hit) return false;
        finish(sub.lift(hit->first), sub.lift(hit->second), comp_index, block_index, branch);
        return true;
    }

    void finish(const VertexSet& v2, VertexSet block_rest, std::size_t comp_index,
                std::size_t block_index, Branch branch) {
        result.trace.branch = branch;
        result.trace.component_index = comp_index;
        result.trace.block_index = block_index;
        result.trace.split_part = v2;
        result.trace.split_complement = std::move(block_rest);
        Witness w{complement_of(inst.graph.vertex_count(), v2), v2, Placement::TogetherInV1};
        accept_witness(result, inst, std::move(w));
    }
};

DecisionResult together_impl(const BipartitionInstance& inst, const DecisionOptions& options,
                             const PairAnalysis& pa) {
    const auto& g = inst.graph;
    const auto& comps = pa.comps;
    DecisionResult r = start_result(inst, comps.size());
    const auto k = comps.size();

    // V2 is a whole component.
    for (std::size_t i = 0; i < k; ++i) {
        const auto& c = comps[i];
        if (c.size() != inst.n2 || !induces_biconnected(g, c)) continue;
        if (!induces_biconnected(g, complement_of(g.vertex_count(), c))) continue;
        r.trace.branch = Branch::WholeComponent;
        r.trace.component_index = i;
        r.trace.split_part = c;
        accept_witness(r, inst, Witness{complement_of(g.vertex_count(), c), c,
                                        Placement::TogetherInV1});
        return r;
    }

    // V2 is biconnected and avoids s1, s2, so it sits inside one block of one
    // component. Leaf blocks first, with the rest of the block touching s1.
    const VertexSet& n_s1 = pa.n_s1;
    const Branch leaf_branch = k == 1 ? Branch::KEq1TogetherLeafBlock : Branch::KGt2LeafBlock;
    BlockSearch search{inst, options, r, false, {}};
    const auto& subs = pa.subs;
    const auto& decomps = pa.decomps;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t b : decomps[i].leaf_block_indices) {
            ++r.trace.counters.leaf_blocks_seen;
            if (search.try_block(subs[i], decomps[i].blocks[b], i, b, leaf_branch, n_s1)) {
                return r;
            }
        }
    }

    if (!options.strict_paper) {
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t b = 0; b < decomps[i].blocks.size(); ++b) {
                if (search.try_block(subs[i], decomps[i].blocks[b], i, b,
                                     Branch::TogetherInnerBlock, std::nullopt)) {
                    return r;
                }
            }
        }
    }

    r.trace.branch = Branch::None;
    if (search.budget_hit) {
        r.status = Status::Indeterminate;
        r.reason = search.budget_reason;
    } else {
        r.reason = "no block of any component holds a biconnected part of size " +
                   std::to_string(inst.n2) + " whose removal leaves a biconnected rest";
    }
    return r;
}

DecisionResult swap_sides(DecisionResult r) {
    if (r.witness) {
        std::swap(r.witness->v1, r.witness->v2);
        r.witness->placement = Placement::TogetherInV2;
    }
    return r;
}

DecisionResult bbg2_impl(const BipartitionInstance& inst, const DecisionOptions& options) {
    SearchCounters total;
    const auto pa = analyze(inst);
    auto sep = separated_impl(inst, options, pa);
    total += sep.trace.counters;
    if (sep.feasible()) return sep;

    auto tog = together_impl(inst, options, pa);
    total += tog.trace.counters;
    bool indeterminate = sep.status == Status::Indeterminate || tog.status == Status::Indeterminate;
    std::string reasons = "separated: " + sep.reason + "; together in V1: " + tog.reason;
    if (tog.feasible()) {
        tog.trace.counters = total;
        return tog;
    }

    if (inst.n1 != inst.n2) {
        const BipartitionInstance swapped{inst.graph, inst.s1, inst.s2, inst.n2, inst.n1};
        auto tog2 = swap_sides(together_impl(swapped, options, pa));
        total += tog2.trace.counters;
        if (tog2.feasible()) {
            if (!verify_witness(inst.graph, inst.s1, inst.s2, inst.n1, inst.n2, *tog2.witness)) {
                throw std::logic_error("internal error: swapped witness failed verification");
            }
            tog2.trace.counters = total;
            return tog2;
        }
        indeterminate = indeterminate || tog2.status == Status::Indeterminate;
        reasons += "; together in V2: " + tog2.reason;
    }

    DecisionResult out = start_result(inst, sep.trace.k);
    out.trace.branch = sep.trace.branch == Branch::KGt2SeparatedInfeasible ? sep.trace.branch
                                                                           : Branch::None;
    out.trace.counters = total;
    out.status = indeterminate ? Status::Indeterminate : Status::Infeasible;
    out.reason = std::move(reasons);
    return out;
}

void validate_graph_and_sizes(const Graph& g, std::size_t n1, std::size_t n2) {
    if (n1 + n2 != g.vertex_count()) {
        throw InvalidInstance("n1 + n2 = " + std::to_string(n1 + n2) + " but the graph has " +
                              std::to_string(g.vertex_count()) + " vertices");
    }
    if (n1 < kMinPart || n2 < kMinPart) {
        throw InvalidInstance("both part sizes must be at least 3");
    }
    if (!is_biconnected(g)) throw InvalidInstance("graph is not biconnected");
}

}  // namespace

void validate_instance(const BipartitionInstance& inst) {
    validate_shape(inst.graph, inst.s1, inst.s2, inst.n1, inst.n2);
    if (!is_biconnected(inst.graph)) throw InvalidInstance("graph is not biconnected");
}

bool verify_witness(const Graph& g, Vertex s1, Vertex s2, std::size_t n1, std::size_t n2,
                    const Witness& w) {
    const auto n = g.vertex_count();
    if (w.v1.size() != n1 || w.v2.size() != n2 || n1 + n2 != n) return false;
    if (!std::is_sorted(w.v1.begin(), w.v1.end()) || !std::is_sorted(w.v2.begin(), w.v2.end())) {
        return false;
    }
    std::vector<char> side(n, 0);
    for (Vertex v : w.v1) {
        if (v >= n || side[v]) return false;
        side[v] = 1;
    }
    for (Vertex v : w.v2) {
        if (v >= n || side[v]) return false;
        side[v] = 2;
    }
    if (s1 >= n || s2 >= n) return false;
    switch (w.placement) {
        case Placement::Separated:
            if (side[s1] != 1 || side[s2] != 2) return false;
            break;
        case Placement::TogetherInV1:
            if (side[s1] != 1 || side[s2] != 1) return false;
            break;
        case Placement::TogetherInV2:
            if (side[s1] != 2 || side[s2] != 2) return false;
            break;
    }
    return induces_biconnected(g, w.v1) && induces_biconnected(g, w.v2);
}

std::optional<std::pair<VertexSet, VertexSet>> biconnected_split_search(
    const Graph& g, std::size_t size2, std::span<const Vertex> anchor,
    const SplitSearchOptions& options) {
    const auto n = g.vertex_count();
    if (size2 < kMinPart || size2 > n) {
        throw GraphError("split size " + std::to_string(size2) + " is outside 3.." +
                         std::to_string(n));
    }
    if (size2 == n) {
        VertexSet all(n);
        for (Vertex v = 0; v < n; ++v) all[v] = v;
        if (!induces_biconnected(g, all)) return std::nullopt;
        if (options.accept && !options.accept(all, {})) return std::nullopt;
        return std::make_pair(std::move(all), VertexSet{});
    }
    if (n > options.max_block_size || n > kMaxEnumerationVertices) {
        throw SearchBudgetExceeded("graph of " + std::to_string(n) +
                                   " vertices exceeds the search budget of " +
                                   std::to_string(options.max_block_size));
    }

    VertexMask anchor_mask = 0;
    for (Vertex v : anchor) {
        if (v < n) anchor_mask |= VertexMask{1} << v;
    }
    const VertexMask all = n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;

    std::optional<std::pair<VertexSet, VertexSet>> found;
    for_each_connected_subset(g, size2, [&](VertexMask mask) {
        if (options.counters) ++options.counters->subsets_enumerated;
        const VertexMask rest = all & ~mask;
        if ((rest & anchor_mask) == 0) return false;
        VertexSet part = mask_to_set(mask);
        if (!induces_biconnected(g, part)) return false;
        VertexSet rest_set = mask_to_set(rest);
        if (options.accept && !options.accept(part, rest_set)) return false;
        found.emplace(std::move(part), std::move(rest_set));
        return true;
    });
    return found;
}

DecisionResult decide_separated(const BipartitionInstance& inst, const DecisionOptions& options) {
    validate_instance(inst);
    return separated_impl(inst, options, analyze(inst));
}

DecisionResult decide_together(const BipartitionInstance& inst, const DecisionOptions& options) {
    validate_instance(inst);
    return together_impl(inst, options, analyze(inst));
}

DecisionResult decide_bbg2(const BipartitionInstance& inst, const DecisionOptions& options) {
    validate_instance(inst);
    return bbg2_impl(inst, options);
}

DecisionResult decide_bbg2_any_edge(const Graph& g, std::size_t n1, std::size_t n2,
                                    const DecisionOptions& options) {
    validate_graph_and_sizes(g, n1, n2);
    SearchCounters total;
    bool indeterminate = false;
    std::string last_reason;
    for (const auto& e : g.edges()) {
        ++total.edges_tried;
        for (bool flip : {false, true}) {
            if (flip && n1 == n2) break;
            const BipartitionInstance inst{g, flip ? e.v : e.u, flip ? e.u : e.v, n1, n2};
            auto r = bbg2_impl(inst, options);
            total += r.trace.counters;
            if (r.feasible()) {
                r.trace.counters = total;
                return r;
            }
            if (r.status == Status::Indeterminate) {
                indeterminate = true;
                last_reason = r.reason;
            }
        }
    }
    DecisionResult out;
    out.trace.counters = total;
    if (indeterminate) {
        out.status = Status::Indeterminate;
        out.reason = "no edge gave a feasible split and the search budget was hit (" +
                     last_reason + ")";
    } else {
        out.status = Status::Infeasible;
        out.reason = "no terminal edge admits a biconnected bipartition of sizes " +
                     std::to_string(n1) + "/" + std::to_string(n2);
    }
    return out;
}

std::size_t PartitionTree::depth() const {
    std::size_t d = 0;
    for (const auto& c : children) d = std::max(d, c.depth() + 1);
    return d;
}

std::vector<const PartitionTree*> PartitionTree::leaves() const {
    if (children.empty()) return {this};
    std::vector<const PartitionTree*> out;
    for (const auto& c : children) {
        auto sub = c.leaves();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

namespace {

PartitionTree build_tree(const Graph& g, VertexSet vertices, const DecisionOptions& options) {
    PartitionTree node;
    node.vertices = std::move(vertices);
    if (node.vertices.size() < 2 * kMinPart) {
        node.stop = StopReason::BelowMinimumSize;
        return node;
    }
    const auto sub = induced_subgraph(g, node.vertices);
    const auto [n1, n2] = default_split(node.vertices.size());
    const auto r = decide_bbg2_any_edge(sub.graph, n1, n2, options);
    if (!r.feasible()) {
        node.stop = r.status == Status::Indeterminate ? StopReason::Indeterminate
                                                      : StopReason::Infeasible;
        return node;
    }
    node.stop = StopReason::Split;
    node.split_edge = Edge{sub.to_parent[r.terminals->u], sub.to_parent[r.terminals->v]};
    node.children.push_back(build_tree(g, sub.lift(r.witness->v1), options));
    node.children.push_back(build_tree(g, sub.lift(r.witness->v2), options));
    return node;
}

}  // namespace

PartitionTree recursive_bipartition(const Graph& g, const DecisionOptions& options) {
    if (!is_biconnected(g)) throw GraphError("recursive bipartition requires a biconnected graph");
    VertexSet all(g.vertex_count());
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
    return build_tree(g, std::move(all), options);
}

}  // namespace rbbg
