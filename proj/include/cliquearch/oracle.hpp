#pragma once

#include <cstddef>
#include <vector>

#include "cliquearch/graph.hpp"

namespace cliquearch {

/// Largest graph order the subset-scan oracle accepts.
inline constexpr std::size_t kOracleMaxOrder = 25;

/// Ground truth by scanning all 2^n vertex subsets. Throws GuardError when
/// g.order() > kOracleMaxOrder.
std::vector<Clique> oracle_maximal_cliques(const Graph& g, std::size_t min_size = 1);

/// Maximum-cardinality clique by subset scan; ties go to the lexicographically
/// smallest member list. Same guard.
Clique oracle_maximum_clique(const Graph& g);

}  // namespace cliquearch
