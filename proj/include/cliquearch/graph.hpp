#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cliquearch/vertex_set.hpp"

namespace cliquearch {

using Edge = std::pair<VertexId, VertexId>;

/// Bijection between vertex labels and ids. Ids follow ascending
/// lexicographic label order.
class LabelMap {
 public:
  LabelMap() = default;

  /// Throws GraphError if `sorted_labels` is not strictly increasing.
  explicit LabelMap(std::vector<std::string> sorted_labels);

  /// Sorts and deduplicates `labels` before building the map.
  static LabelMap from_unordered(std::vector<std::string> labels);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& label(VertexId v) const { return names_.at(v); }
  std::optional<VertexId> find(const std::string& label) const;
  const std::vector<std::string>& labels() const noexcept { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> ids_;
};

/// Simple undirected graph with one adjacency bit row per vertex.
/// Immutable once built; construct through from_edges or from_labeled_edges.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  const VertexSet& neighbors(VertexId v) const { return rows_.at(v); }
  bool adjacent(VertexId u, VertexId v) const { return rows_.at(u).test(v); }
  std::size_t degree(VertexId v) const { return rows_.at(v).count(); }

  const std::optional<LabelMap>& labels() const noexcept { return labels_; }

  /// Vertex name: the label when present, the decimal id otherwise.
  std::string name(VertexId v) const;

  /// All edges as (u, v) with u < v, in ascending order.
  std::vector<Edge> edges() const;

  VertexSet all_vertices() const { return VertexSet::full(order()); }

  friend Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::optional<std::vector<std::string>> labels);

 private:
  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
  std::optional<LabelMap> labels_;
};

/// Builds a graph on n vertices. Duplicate and reversed edges collapse.
/// Labels, when given, must be total and strictly increasing.
/// Throws GraphError naming the offending edge for out-of-range endpoints and self-loops.
Graph from_edges(std::size_t n, std::span<const Edge> edges,
                 std::optional<std::vector<std::string>> labels = std::nullopt);

/// Builds a labeled graph; ids are assigned by ascending label order so the
/// result does not depend on edge order. `isolated` adds labels with no edges.
Graph from_labeled_edges(std::span<const std::pair<std::string, std::string>> edges,
                         std::span<const std::string> isolated = {});

/// Vertex set in canonical (strictly increasing) member order.
struct Clique {
  std::vector<VertexId> vertices;

  Clique() = default;
  explicit Clique(std::vector<VertexId> v);
  Clique(std::initializer_list<VertexId> v) : Clique(std::vector<VertexId>(v)) {}

  std::size_t size() const noexcept { return vertices.size(); }
  bool contains(VertexId v) const;
  bool is_subset_of(const Clique& other) const;

  friend auto operator<=>(const Clique&, const Clique&) = default;
};

/// Size descending, then lexicographic ascending.
struct CanonicalOrder {
  bool operator()(const Clique& a, const Clique& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.vertices < b.vertices;
  }
};

bool is_clique(const Graph& g, std::span<const VertexId> s);
bool is_clique(const Graph& g, const VertexSet& s);
bool is_maximal_clique(const Graph& g, std::span<const VertexId> s);
bool is_maximal_clique(const Graph& g, const VertexSet& s);

/// Vertices adjacent to every member of `s` (and not in `s`).
VertexSet common_neighbors(const Graph& g, const VertexSet& s);

struct InducedSubgraph {
  Graph graph;
  /// mapping[new] = old; ascending, so the map is order-preserving.
  std::vector<VertexId> mapping;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> s);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Deduplicates and sorts into CanonicalOrder.
std::vector<Clique> canonicalize(std::vector<Clique> cliques);

/// Drops every set that is a proper subset of another, then canonicalizes.
std::vector<Clique> filter_subsets(std::vector<Clique> sets);

/// Keeps cliques with at least `min_size` members.
std::vector<Clique> filter_min_size(std::vector<Clique> cliques, std::size_t min_size);

/// Throws GraphError unless every vertex in `s` is < g.order().
void check_vertices(const Graph& g, std::span<const VertexId> s);

}  // namespace cliquearch
