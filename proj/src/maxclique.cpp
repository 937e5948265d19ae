#include "cliquearch/maxclique.hpp"

#include <cassert>

#include "cliquearch/detail/bron_kerbosch.hpp"
#include "cliquearch/enumeration.hpp"

namespace cliquearch {

namespace {

// Graph relabeled so that vertex i is the i-th vertex of the search order;
// "earliest candidate" is then simply the lowest set bit.
Graph relabel(const Graph& g, const std::vector<VertexId>& order,
              const std::vector<std::size_t>& position) {
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const auto& [u, v] : g.edges())
    edges.emplace_back(static_cast<VertexId>(position[u]), static_cast<VertexId>(position[v]));
  return from_edges(order.size(), edges);
}

class OrderedSearch {
 public:
  OrderedSearch(const Graph& h, MaxCliqueStats& stats, bool pruning)
      : h_(h), stats_(stats), pruning_(pruning) {}

  std::size_t run() {
    const std::size_t n = h_.order();
    stats_.bound.assign(n, 0);
    VertexSet later(n);
    std::vector<VertexId> current;
    for (std::size_t i = n; i-- > 0;) {
      const auto v = static_cast<VertexId>(i);
      found_ = false;
      current.assign(1, v);
      expand(current, h_.neighbors(v) & later);
      stats_.bound[i] = best_;
      later.set(v);
    }
    return best_;
  }

 private:
  void expand(std::vector<VertexId>& current, VertexSet p) {
    ++stats_.expansions;
    if (p.empty()) {
      if (current.size() > best_) {
        best_ = current.size();
        found_ = true;
      }
      return;
    }
    while (!p.empty()) {
      if (pruning_ && current.size() + p.count() <= best_) {
        ++stats_.prunes;
        return;
      }
      const VertexId j = p.first();
      if (pruning_ && current.size() + stats_.bound[j] <= best_) {
        ++stats_.prunes;
        return;
      }
      p.reset(j);
      current.push_back(j);
      expand(current, p & h_.neighbors(j));
      current.pop_back();
      // bound[i] <= bound[i+1] + 1, so one improvement at this root is final.
      if (pruning_ && found_) return;
    }
  }

  const Graph& h_;
  MaxCliqueStats& stats_;
  bool pruning_;
  std::size_t best_ = 0;
  bool found_ = false;
};

// Lexicographically smallest clique of exactly `target` vertices: depth-first
// in ascending id order, so the first hit is the smallest.
bool smallest_clique_of_size(const Graph& g, std::size_t target, std::vector<VertexId>& current,
                             const VertexSet& candidates) {
  if (current.size() == target) return true;
  VertexSet p = candidates;
  for (VertexId v = p.first(); v != VertexSet::npos; v = p.next(v)) {
    if (current.size() + p.count() < target) return false;
    p.reset(v);
    current.push_back(v);
    if (smallest_clique_of_size(g, target, current, p & g.neighbors(v))) return true;
    current.pop_back();
  }
  return false;
}

}  // namespace

MaxCliqueResult max_clique_bb(const Graph& g, MaxCliqueOptions options) {
  MaxCliqueResult result;
  if (g.order() == 0) return result;

  const DegeneracyOrder d = degeneracy_ordering(g);
  const Graph h = relabel(g, d.order, d.position);
  result.stats.order = d.order;
  const std::size_t omega = OrderedSearch(h, result.stats, options.pruning).run();

#ifndef NDEBUG
  const auto& c = result.stats.bound;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) assert(c[i] >= c[i + 1] && c[i] <= c[i + 1] + 1);
#endif

  std::vector<VertexId> current;
  [[maybe_unused]] const bool ok = smallest_clique_of_size(g, omega, current, g.all_vertices());
  assert(ok);
  result.clique = Clique(std::move(current));
  return result;
}

std::vector<Clique> ordered_maximal_cliques(const Graph& g, std::size_t min_size) {
  min_size = std::max<std::size_t>(min_size, 1);
  const MaxCliqueResult bb = max_clique_bb(g);
  const auto& order = bb.stats.order;
  const auto& bound = bb.stats.bound;

  detail::BronKerbosch bk(g, min_size, true);
  VertexSet later = g.all_vertices();
  VertexSet earlier(g.order());
  std::vector<VertexId> r;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const VertexId v = order[i];
    later.reset(v);
    if (bound[i] >= min_size) {
      const VertexSet& nv = g.neighbors(v);
      r.assign(1, v);
      bk.expand(r, later & nv, earlier & nv);
    }
    earlier.set(v);
  }
  return canonicalize(std::move(bk.out));
}

}  // namespace cliquearch
