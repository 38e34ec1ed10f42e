#ifndef RBBG_GENERATORS_HPP
#define RBBG_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rbbg/graph.hpp"

namespace rbbg::gen {

/// Every generator returns a biconnected graph or throws GraphError on
/// parameters outside the family's range. Output depends only on
/// (family, n, seed).

/// n-cycle plus n/2 seeded chords.
Graph cycle_chords(std::size_t n, std::uint64_t seed);
/// Hub 0 joined to the rim cycle 1..n-1; n >= 4.
Graph wheel(std::size_t n);
Graph complete(std::size_t n);
/// Two (n/2)-cycles joined by rungs i -- i + n/2; n even, n >= 6.
Graph prism_ladder(std::size_t n);
/// Edge 0-1 plus pairs (2i, 2i+1) with 2i -- 0 and 2i+1 -- 1; n even, n >= 4.
Graph theta_pairs(std::size_t n);
/// Random Hamiltonian cycle plus a seeded number (0..n) of random chords.
Graph random_biconnected(std::size_t n, std::uint64_t seed);
/// Random open ear decomposition; reaches non-Hamiltonian graphs too.
Graph random_ears(std::size_t n, std::uint64_t seed);

inline constexpr std::string_view kFamilies[] = {"cycle-chords", "wheel",      "complete",
                                                 "prism-ladder", "theta-pairs", "random-biconnected"};

/// Dispatch by family name; throws GraphError on an unknown family.
Graph generate(std::string_view family, std::size_t n, std::uint64_t seed);

}  // namespace rbbg::gen

#endif  // RBBG_GENERATORS_HPP
