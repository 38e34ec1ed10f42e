#ifndef RBBG_BIPARTITION_HPP
#define RBBG_BIPARTITION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rbbg/graph.hpp"

namespace rbbg {

/// One decision query: split `graph` into biconnected parts of sizes n1 and
/// n2 around the terminal edge {s1, s2}.
struct BipartitionInstance {
    const Graph& graph;
    Vertex s1;
    Vertex s2;
    std::size_t n1;
    std::size_t n2;
};

class InvalidInstance : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by the split search when the graph it would enumerate exceeds the
/// configured block-size cap. Means "unknown", never "infeasible".
class SearchBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws InvalidInstance naming the first violated condition.
void validate_instance(const BipartitionInstance& inst);

enum class Status { Feasible, Infeasible, Indeterminate };

enum class Placement { Separated, TogetherInV1, TogetherInV2 };

/// Which case of the decision procedure produced the result.
enum class Branch {
    None,
    // s1 in V1, s2 in V2
    KGt2SeparatedInfeasible,
    KEq2Separated,
    KEq1SeparatedTwoBlocks,
    KEq1BiconnectedSplit,
    KEq1SeparatedGeneral,
    // s1, s2 on the same side
    WholeComponent,
    KGt2LeafBlock,
    KEq1TogetherLeafBlock,
    TogetherInnerBlock,
};

std::string_view to_string(Status s);
std::string_view to_string(Placement p);
std::string_view to_string(Branch b);

struct SearchCounters {
    std::uint64_t edges_tried = 0;
    std::uint64_t subsets_enumerated = 0;
    std::uint64_t leaf_blocks_seen = 0;

    SearchCounters& operator+=(const SearchCounters& other);
};

struct CaseTrace {
    std::size_t k = 0;  // components after removing s1, s2
    Branch branch = Branch::None;
    std::optional<std::size_t> component_index;
    std::optional<std::size_t> block_index;  // within the blocks of that component
    /// For block-split branches: the carved-out part and the rest of the block.
    VertexSet split_part;
    VertexSet split_complement;
    SearchCounters counters;
};

struct Witness {
    VertexSet v1;
    VertexSet v2;
    Placement placement = Placement::Separated;
};

struct DecisionResult {
    Status status = Status::Infeasible;
    std::optional<Witness> witness;
    CaseTrace trace;
    std::string reason;
    /// Terminal edge the result refers to (set by the any-edge driver too).
    std::optional<Edge> terminals;

    bool feasible() const { return status == Status::Feasible; }
};

struct DecisionOptions {
    /// Trust the case screening alone: no exhaustive fallback
    /// beyond it. Witnesses are still verified.
    bool strict_paper = false;
    /// Largest graph the split searches will enumerate.
    std::size_t max_block_size = 24;
};

/// Independent check of a candidate: sizes, terminal placement and
/// biconnectivity of both induced parts.
bool verify_witness(const Graph& g, Vertex s1, Vertex s2, std::size_t n1, std::size_t n2,
                    const Witness& w);

struct SplitSearchOptions {
    std::size_t max_block_size = 24;
    /// Extra acceptance test on (part, complement) in the searched graph's ids.
    std::function<bool(const VertexSet&, const VertexSet&)> accept;
    SearchCounters* counters = nullptr;
};

/// Finds part2 with |part2| = size2, G[part2] biconnected, and complement
/// empty or meeting `anchor`, plus whatever options.accept demands.
/// Connected candidates are enumerated in canonical order; the first hit
/// wins. Throws SearchBudgetExceeded when g is larger than the cap.
std::optional<std::pair<VertexSet, VertexSet>> biconnected_split_search(
    const Graph& g, std::size_t size2, std::span<const Vertex> anchor,
    const SplitSearchOptions& options = {});

/// s1 in V1, s2 in V2.
DecisionResult decide_separated(const BipartitionInstance& inst,
                                const DecisionOptions& options = {});

/// s1, s2 both in V1 (|V1| = n1).
DecisionResult decide_together(const BipartitionInstance& inst,
                               const DecisionOptions& options = {});

/// Separated, then together in V1, then together in V2. Every returned
/// witness has passed verify_witness.
DecisionResult decide_bbg2(const BipartitionInstance& inst, const DecisionOptions& options = {});

/// Tries every edge (both orientations when n1 != n2) in ascending order and
/// returns the first feasible result.
DecisionResult decide_bbg2_any_edge(const Graph& g, std::size_t n1, std::size_t n2,
                                    const DecisionOptions& options = {});

/// Default near-balanced sizes: (ceil(n/2), floor(n/2)).
std::pair<std::size_t, std::size_t> default_split(std::size_t n);

enum class StopReason { Split, BelowMinimumSize, Infeasible, Indeterminate };

std::string_view to_string(StopReason r);

struct PartitionTree {
    VertexSet vertices;  // original ids
    std::optional<Edge> split_edge;
    StopReason stop = StopReason::BelowMinimumSize;
    std::vector<PartitionTree> children;  // empty or exactly two

    std::size_t depth() const;
    std::vector<const PartitionTree*> leaves() const;
};

/// Recursive halving. Throws GraphError if g is not biconnected.
PartitionTree recursive_bipartition(const Graph& g, const DecisionOptions& options = {});

}  // namespace rbbg

#endif  // RBBG_BIPARTITION_HPP
