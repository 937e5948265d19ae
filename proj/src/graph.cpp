#include "cliquearch/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cliquearch/errors.hpp"

namespace cliquearch {

LabelMap::LabelMap(std::vector<std::string> sorted_labels) : names_(std::move(sorted_labels)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i > 0 && !(names_[i - 1] < names_[i]))
      throw GraphError("labels must be unique and in ascending order: '" + names_[i - 1] +
                       "' before '" + names_[i] + "'");
    ids_.emplace(names_[i], static_cast<VertexId>(i));
  }
}

LabelMap LabelMap::from_unordered(std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return LabelMap(std::move(labels));
}

std::optional<VertexId> LabelMap::find(const std::string& label) const {
  auto it = ids_.find(label);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::string Graph::name(VertexId v) const {
  if (labels_) return labels_->label(v);
  return std::to_string(v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < order(); ++u) {
    const VertexSet& row = rows_[u];
    for (VertexId v = row.next(u); v != VertexSet::npos; v = row.next(v)) out.emplace_back(u, v);
  }
  return out;
}

Graph from_edges(std::size_t n, std::span<const Edge> edges,
                 std::optional<std::vector<std::string>> labels) {
  Graph g;
  g.rows_.assign(n, VertexSet(n));
  for (const auto& [u, v] : edges) {
    const std::string name = "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
    if (u >= n || v >= n)
      throw GraphError("edge " + name + " has an endpoint outside [0, " + std::to_string(n) + ")");
    if (u == v) throw GraphError("edge " + name + " is a self-loop");
    g.rows_[u].set(v);
    g.rows_[v].set(u);
  }
  std::size_t degree_sum = 0;
  for (const auto& row : g.rows_) degree_sum += row.count();
  g.edge_count_ = degree_sum / 2;
  if (labels) {
    if (labels->size() != n)
      throw GraphError("expected " + std::to_string(n) + " labels, got " +
                       std::to_string(labels->size()));
    g.labels_.emplace(std::move(*labels));
  }
  return g;
}

Graph from_labeled_edges(std::span<const std::pair<std::string, std::string>> edges,
                         std::span<const std::string> isolated) {
  std::vector<std::string> names(isolated.begin(), isolated.end());
  for (const auto& [a, b] : edges) {
    names.push_back(a);
    names.push_back(b);
  }
  LabelMap map = LabelMap::from_unordered(std::move(names));
  std::vector<Edge> ids;
  ids.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a == b) throw GraphError("edge (" + a + ", " + b + ") is a self-loop");
    ids.emplace_back(*map.find(a), *map.find(b));
  }
  return from_edges(map.size(), ids, map.labels());
}

Clique::Clique(std::vector<VertexId> v) : vertices(std::move(v)) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
}

bool Clique::contains(VertexId v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool Clique::is_subset_of(const Clique& other) const {
  return std::includes(other.vertices.begin(), other.vertices.end(), vertices.begin(),
                       vertices.end());
}

void check_vertices(const Graph& g, std::span<const VertexId> s) {
  for (VertexId v : s)
    if (v >= g.order())
      throw GraphError("vertex " + std::to_string(v) + " is outside [0, " +
                       std::to_string(g.order()) + ")");
}

bool is_clique(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](VertexId v) {
    if (ok) {
      VertexSet others = s;
      others.reset(v);
      ok = others.is_subset_of(g.neighbors(v));
    }
  });
  return ok;
}

bool is_clique(const Graph& g, std::span<const VertexId> s) {
  check_vertices(g, s);
  return is_clique(g, VertexSet::of(g.order(), s));
}

VertexSet common_neighbors(const Graph& g, const VertexSet& s) {
  VertexSet common = g.all_vertices();
  s.for_each([&](VertexId v) { common &= g.neighbors(v); });
  return common - s;
}

bool is_maximal_clique(const Graph& g, const VertexSet& s) {
  return is_clique(g, s) && common_neighbors(g, s).empty();
}

bool is_maximal_clique(const Graph& g, std::span<const VertexId> s) {
  check_vertices(g, s);
  return is_maximal_clique(g, VertexSet::of(g.order(), s));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.mapping = s.to_vector();
  std::vector<VertexId> new_id(g.order(), VertexSet::npos);
  for (std::size_t i = 0; i < out.mapping.size(); ++i)
    new_id[out.mapping[i]] = static_cast<VertexId>(i);

  std::vector<Edge> edges;
  for (VertexId old_u : out.mapping) {
    const VertexSet inside = g.neighbors(old_u) & s;
    inside.for_each([&](VertexId old_v) {
      if (old_u < old_v) edges.emplace_back(new_id[old_u], new_id[old_v]);
    });
  }
  std::optional<std::vector<std::string>> labels;
  if (g.labels()) {
    labels.emplace();
    for (VertexId old : out.mapping) labels->push_back(g.labels()->label(old));
  }
  out.graph = from_edges(out.mapping.size(), edges, std::move(labels));
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> s) {
  check_vertices(g, s);
  return induced_subgraph(g, VertexSet::of(g.order(), s));
}

std::vector<Clique> canonicalize(std::vector<Clique> cliques) {
  std::sort(cliques.begin(), cliques.end(), CanonicalOrder{});
  cliques.erase(std::unique(cliques.begin(), cliques.end()), cliques.end());
  return cliques;
}

std::vector<Clique> filter_subsets(std::vector<Clique> sets) {
  sets = canonicalize(std::move(sets));
  // Canonical order puts larger sets first, so a set can only be contained in
  // one already kept.
  std::vector<Clique> kept;
  for (auto& s : sets) {
    const bool nested = std::any_of(kept.begin(), kept.end(),
                                    [&](const Clique& k) { return s.is_subset_of(k); });
    if (!nested) kept.push_back(std::move(s));
  }
  return kept;
}

std::vector<Clique> filter_min_size(std::vector<Clique> cliques, std::size_t min_size) {
  std::erase_if(cliques, [&](const Clique& c) { return c.size() < min_size; });
  return cliques;
}

}  // namespace cliquearch
