#pragma once

#include <cstddef>
#include <vector>

#include "cliquearch/graph.hpp"

namespace cliquearch::detail {

// Recursion depth is bounded by the clique number plus one, since every level
// adds one vertex to R.
class BronKerbosch {
 public:
  BronKerbosch(const Graph& g, std::size_t min_size, bool pivot)
      : g_(g), min_size_(min_size), pivot_(pivot) {}

  void expand(std::vector<VertexId>& r, VertexSet p, VertexSet x) {
    const std::size_t p_count = p.count();
    if (r.size() + p_count < min_size_) return;
    if (p_count == 0) {
      if (x.empty()) out.emplace_back(r);
      return;
    }
    VertexSet branch = p;
    if (pivot_) branch -= g_.neighbors(choose_pivot(p, x));

    for (VertexId v = branch.first(); v != VertexSet::npos; v = branch.next(v)) {
      const VertexSet& nv = g_.neighbors(v);
      r.push_back(v);
      expand(r, p & nv, x & nv);
      r.pop_back();
      p.reset(v);
      x.set(v);
      if (r.size() + p.count() < min_size_) return;
    }
  }

  std::vector<Clique> out;

 private:
  VertexId choose_pivot(const VertexSet& p, const VertexSet& x) const {
    VertexId best = VertexSet::npos;
    std::size_t best_score = 0;
    const VertexSet candidates = p | x;
    candidates.for_each([&](VertexId u) {
      const std::size_t score = p.count_and(g_.neighbors(u));
      if (best == VertexSet::npos || score > best_score) {
        best = u;
        best_score = score;
      }
    });
    return best;
  }

  const Graph& g_;
  std::size_t min_size_;
  bool pivot_;
};

}  // namespace cliquearch::detail
