#include "cliquearch/enumeration.hpp"

#include <algorithm>
#include <chrono>

#include "cliquearch/detail/bron_kerbosch.hpp"
#include "cliquearch/report.hpp"

namespace cliquearch {

Census census_of(const std::vector<Clique>& cliques) {
  Census census;
  for (const auto& c : cliques) ++census[c.size()];
  return census;
}

CliqueReport make_report(std::string algorithm, const Graph& g, std::vector<Clique> cliques) {
  CliqueReport r;
  r.algorithm = std::move(algorithm);
  r.n = g.order();
  r.m = g.size();
  r.cliques = canonicalize(std::move(cliques));
  r.census = census_of(r.cliques);
  return r;
}

Census clique_census(const CliqueReport& report) { return census_of(report.cliques); }

namespace {

template <typename Fn>
CliqueReport timed(const char* name, const Graph& g, Fn&& run) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Clique> cliques = run();
  const auto stop = std::chrono::steady_clock::now();
  CliqueReport report = make_report(name, g, std::move(cliques));
  report.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
  return report;
}

std::vector<Clique> run_bk(const Graph& g, std::size_t min_size, bool pivot) {
  detail::BronKerbosch bk(g, std::max<std::size_t>(min_size, 1), pivot);
  std::vector<VertexId> r;
  bk.expand(r, g.all_vertices(), VertexSet(g.order()));
  return std::move(bk.out);
}

}  // namespace

CliqueReport bk_basic(const Graph& g, std::size_t min_size) {
  return timed("bk_basic", g, [&] { return run_bk(g, min_size, false); });
}

CliqueReport bk_pivot(const Graph& g, std::size_t min_size) {
  return timed("bk_pivot", g, [&] { return run_bk(g, min_size, true); });
}

DegeneracyOrder degeneracy_ordering(const Graph& g) {
  const std::size_t n = g.order();
  DegeneracyOrder d;
  d.order.reserve(n);
  d.position.assign(n, 0);

  // Bucket queue keyed by current degree; buckets hold ordered sets so the
  // smallest id is taken first.
  std::vector<std::size_t> degree(n);
  std::vector<VertexSet> bucket(n == 0 ? 1 : n, VertexSet(n));
  for (VertexId v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    bucket[degree[v]].set(v);
  }
  VertexSet alive = g.all_vertices();
  std::size_t lowest = 0;
  for (std::size_t step = 0; step < n; ++step) {
    while (bucket[lowest].empty()) ++lowest;
    const VertexId v = bucket[lowest].first();
    bucket[lowest].reset(v);
    alive.reset(v);
    d.degeneracy = std::max(d.degeneracy, degree[v]);
    d.position[v] = d.order.size();
    d.order.push_back(v);
    const VertexSet touched = g.neighbors(v) & alive;
    touched.for_each([&](VertexId u) {
      bucket[degree[u]].reset(u);
      --degree[u];
      bucket[degree[u]].set(u);
    });
    if (lowest > 0) --lowest;
  }
  return d;
}

CliqueReport bk_degeneracy(const Graph& g, std::size_t min_size) {
  return timed("bk_degeneracy", g, [&] {
    const DegeneracyOrder d = degeneracy_ordering(g);
    detail::BronKerbosch bk(g, std::max<std::size_t>(min_size, 1), true);
    VertexSet later = g.all_vertices();
    VertexSet earlier(g.order());
    std::vector<VertexId> r;
    for (VertexId v : d.order) {
      later.reset(v);
      const VertexSet& nv = g.neighbors(v);
      r.assign(1, v);
      bk.expand(r, later & nv, earlier & nv);
      earlier.set(v);
    }
    return std::move(bk.out);
  });
}

ReductionResult simplicial_reduction(const Graph& g) {
  ReductionResult result;
  VertexSet alive = g.all_vertices();
  bool peeled = true;
  while (peeled) {
    peeled = false;
    for (VertexId v = alive.first(); v != VertexSet::npos; v = alive.next(v)) {
      const VertexSet nbhd = g.neighbors(v) & alive;
      if (!is_clique(g, nbhd)) continue;
      std::vector<VertexId> closed = nbhd.to_vector();
      closed.push_back(v);
      result.recorded.emplace_back(std::move(closed));
      result.peel_order.push_back(v);
      alive.reset(v);
      peeled = true;
      break;
    }
  }
  result.removed = g.all_vertices() - alive;
  result.residual = induced_subgraph(g, alive);
  return result;
}

std::vector<Clique> cliques_from_reduction(const Graph& g, const ReductionResult& r) {
  std::vector<Clique> all = r.recorded;
  const CliqueReport residual = bk_pivot(r.residual.graph, 1);
  for (const auto& c : residual.cliques) {
    std::vector<VertexId> original;
    original.reserve(c.size());
    for (VertexId v : c.vertices) original.push_back(r.residual.mapping[v]);
    if (is_maximal_clique(g, original)) all.emplace_back(std::move(original));
  }
  return filter_subsets(std::move(all));
}

}  // namespace cliquearch
