#ifndef RBBG_SUBSET_ENUMERATION_HPP
#define RBBG_SUBSET_ENUMERATION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>

#include "rbbg/graph.hpp"

namespace rbbg {

/// Largest graph the connected-subset enumerator accepts (one 64-bit mask).
inline constexpr std::size_t kMaxEnumerationVertices = 64;

using VertexMask = std::uint64_t;

/// Visits every connected vertex subset of g with exactly `size` vertices,
/// each exactly once. Subsets are grown from their smallest vertex, taking
/// extension candidates smallest-first, so the visiting order is fixed for a
/// given graph. The visitor returns true to stop. Returns true if stopped.
///
/// Throws GraphError when g has more than kMaxEnumerationVertices vertices.
bool for_each_connected_subset(const Graph& g, std::size_t size,
                               const std::function<bool(VertexMask)>& visit);

VertexSet mask_to_set(VertexMask mask);

}  // namespace rbbg

#endif  // RBBG_SUBSET_ENUMERATION_HPP
