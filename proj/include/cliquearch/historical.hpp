#pragma once

// Reconstruction of the 1957 Harary–Ross matrix procedure for clique
// detection. The method is known to report non-clique subgraphs on some
// inputs; this module reproduces that behaviour and classifies every emitted
// set so the flaw is visible rather than silent.

#include <cstddef>
#include <string>
#include <vector>

#include "cliquearch/graph.hpp"
#include "cliquearch/report.hpp"

namespace cliquearch {

/// t[i][j] = number of triangles through edge (i, j), 0 off the edge set.
/// Computed as the elementwise product A ∘ A².
class TriangleSupport {
 public:
  explicit TriangleSupport(const Graph& g);

  std::size_t order() const noexcept { return n_; }
  std::size_t at(VertexId i, VertexId j) const { return t_.at(i * n_ + j); }

  /// Vertices j with t[v][j] > 0.
  VertexSet triangle_partners(VertexId v) const;

 private:
  std::size_t n_;
  std::vector<std::size_t> t_;
};

TriangleSupport triangle_support(const Graph& g);

/// Vertices lying in at least one triangle.
VertexSet cliqual_vertices(const Graph& g);

enum class Provenance { peeled, residual_fallback };

std::string to_string(Provenance p);

struct HistoricalSet {
  Clique members;
  Provenance provenance = Provenance::peeled;
  bool is_clique = false;
  bool is_maximal = false;

  /// "" when the set is a true maximal clique, otherwise "not_clique" or
  /// "not_maximal".
  std::string failure() const;
};

struct HistoricalReport {
  /// Every emitted set (canonical order), true or not.
  std::vector<Clique> cliques;
  std::vector<HistoricalSet> sets;
  /// Emitted sets failing is_clique or is_maximal_clique on the input graph.
  std::vector<Clique> spurious;
  std::vector<std::string> flags;

  /// Emitted sets that are true maximal cliques.
  std::vector<Clique> true_cliques() const;
};

/// (1) restrict to cliqual vertices; (2) while some cliqual vertex v has
/// pairwise-adjacent triangle partners, record {v} ∪ partners(v), delete v,
/// recompute the support and restrict again; (3) emit each connected
/// component of an irreducible non-empty residual as a RESIDUAL_FALLBACK
/// candidate; (4) classify every set against the input graph. Recorded sets
/// contained in an earlier recorded set are not emitted.
HistoricalReport harary_ross_reconstruction(const Graph& g);

/// Wraps the reconstruction as a CliqueReport for comparisons. Sets smaller
/// than min_size are dropped.
CliqueReport harary_report(const Graph& g, std::size_t min_size);

}  // namespace cliquearch
