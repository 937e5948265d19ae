#pragma once

#include <cstddef>
#include <map>

#include "cliquearch/graph.hpp"

namespace cliquearch {

using MotifCounts = std::map<std::size_t, std::size_t>;

inline constexpr std::size_t kMotifMaxLength = 8;

/// Cycles, chains and induced stars. Only non-zero counts are stored.
struct MotifCensus {
  MotifCounts cycles;  // length -> simple cycles, each counted once
  MotifCounts chains;  // edges -> simple paths, each counted once
  MotifCounts stars;   // k -> induced K_{1,k} vertex sets

  friend bool operator==(const MotifCensus&, const MotifCensus&) = default;
};

/// Simple cycles of length 3..max_length, up to rotation and reflection.
/// Throws GuardError unless 3 <= max_length <= 8.
MotifCounts cycle_census(const Graph& g, std::size_t max_length);

/// Simple paths (not necessarily induced) with 1..max_length edges, one
/// count per path regardless of direction. Throws GuardError unless
/// 1 <= max_length <= 8.
MotifCounts chain_census(const Graph& g, std::size_t max_length);

/// Induced stars K_{1,k}, 2 <= k <= kmax: a center plus k pairwise
/// non-adjacent neighbours. Empty when kmax < 2.
MotifCounts star_census(const Graph& g, std::size_t kmax);

/// All three censuses; cycles only when max_length >= 3, stars use
/// kmax = max(max_length, 2).
MotifCensus motif_census(const Graph& g, std::size_t max_length);

}  // namespace cliquearch
