#pragma once

#include <cstddef>
#include <vector>

#include "cliquearch/graph.hpp"
#include "cliquearch/report.hpp"

namespace cliquearch {

/// Bron–Kerbosch without pivoting: every maximal clique of size >= min_size.
CliqueReport bk_basic(const Graph& g, std::size_t min_size = 1);

/// Bron–Kerbosch with pivoting. The pivot u in P ∪ X maximizes |P ∩ N(u)|,
/// ties to the smallest id.
CliqueReport bk_pivot(const Graph& g, std::size_t min_size = 1);

/// Bron–Kerbosch with a degeneracy-ordered outer loop and pivoting inside.
CliqueReport bk_degeneracy(const Graph& g, std::size_t min_size = 1);

struct DegeneracyOrder {
  std::vector<VertexId> order;     // peel order
  std::vector<std::size_t> position;  // position[v] = index of v in order
  std::size_t degeneracy = 0;
};

/// Repeatedly removes a minimum-degree vertex, smallest id first.
DegeneracyOrder degeneracy_ordering(const Graph& g);

struct ReductionResult {
  /// Closed neighborhood of each peeled vertex at its peel time, in peel order.
  std::vector<Clique> recorded;
  /// Peeled vertices in peel order.
  std::vector<VertexId> peel_order;
  VertexSet removed;
  /// Induced subgraph on the unpeeled vertices.
  InducedSubgraph residual;
};

/// Unicliqual reduction: repeatedly peels the smallest-id vertex whose
/// remaining neighborhood is a clique, recording {v} ∪ N(v).
ReductionResult simplicial_reduction(const Graph& g);

/// Maximal cliques of g reassembled from a reduction: recorded sets plus the
/// residual's cliques (enumerated on g minus removed, kept when maximal in g).
std::vector<Clique> cliques_from_reduction(const Graph& g, const ReductionResult& r);

Census clique_census(const CliqueReport& report);

}  // namespace cliquearch
