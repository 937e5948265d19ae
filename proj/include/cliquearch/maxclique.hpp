#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cliquearch/graph.hpp"

namespace cliquearch {

struct MaxCliqueOptions {
  /// Debug switch: disables the bound-table prune, the size prune and the
  /// early stop, turning the search exhaustive. The answer is unchanged.
  bool pruning = true;
};

struct MaxCliqueStats {
  std::uint64_t expansions = 0;  // search nodes entered
  std::uint64_t prunes = 0;      // branches cut by a bound
  /// bound[i] = maximum clique size within order[i..n-1] of the search order.
  std::vector<std::size_t> bound;
  std::vector<VertexId> order;
};

struct MaxCliqueResult {
  Clique clique;
  MaxCliqueStats stats;
};

/// Vertex-ordered branch and bound for a maximum clique. Vertices are taken
/// in degeneracy order v_0..v_{n-1}; for i from n-1 down to 0 the search
/// extends {v_i} inside its later-ordered neighbors, cutting a branch when
/// |current| + bound[j] <= |best| for the earliest candidate v_j. The
/// returned clique is the lexicographically smallest maximum clique.
MaxCliqueResult max_clique_bb(const Graph& g, MaxCliqueOptions options = {});

/// Every maximal clique of size >= min_size, found by the same later-neighbor
/// search with the bound table used to skip roots that cannot reach
/// min_size. Used as the "ostergard2001" participant in comparisons.
std::vector<Clique> ordered_maximal_cliques(const Graph& g, std::size_t min_size);

}  // namespace cliquearch
