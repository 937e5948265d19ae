#include "cliquearch/motifs.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "cliquearch/errors.hpp"

namespace cliquearch {

namespace {

void guard_length(const char* what, std::size_t value, std::size_t lo) {
  if (value < lo || value > kMotifMaxLength)
    throw GuardError(std::string(what) + ": length must be in [" + std::to_string(lo) + ", " +
                     std::to_string(kMotifMaxLength) + "], got " + std::to_string(value));
}

// Cycles are rooted at their smallest vertex; of the two traversal
// directions only the one whose second vertex is smaller than its last is
// kept.
void extend_cycle(const Graph& g, VertexId root, std::vector<VertexId>& path, VertexSet& on_path,
                  std::size_t max_length, MotifCounts& out) {
  const VertexId tail = path.back();
  const VertexSet& nt = g.neighbors(tail);
  if (path.size() >= 3 && nt.test(root) && path[1] < tail) ++out[path.size()];
  if (path.size() == max_length) return;
  for (VertexId v = nt.next(root); v != VertexSet::npos; v = nt.next(v)) {
    if (on_path.test(v)) continue;
    path.push_back(v);
    on_path.set(v);
    extend_cycle(g, root, path, on_path, max_length, out);
    on_path.reset(v);
    path.pop_back();
  }
}

// Each path is found from both ends; only the walk that starts at the smaller
// endpoint counts.
void extend_chain(const Graph& g, std::vector<VertexId>& path, VertexSet& on_path,
                  std::size_t max_edges, MotifCounts& out) {
  const VertexId tail = path.back();
  if (path.size() >= 2 && path.front() < tail) ++out[path.size() - 1];
  if (path.size() - 1 == max_edges) return;
  g.neighbors(tail).for_each([&](VertexId v) {
    if (on_path.test(v)) return;
    path.push_back(v);
    on_path.set(v);
    extend_chain(g, path, on_path, max_edges, out);
    on_path.reset(v);
    path.pop_back();
  });
}

// Counts independent sets of size 1..kmax inside `pool`, ascending ids.
void grow_independent(const Graph& g, const VertexSet& pool, std::size_t size, std::size_t kmax,
                      MotifCounts& out) {
  for (VertexId v = pool.first(); v != VertexSet::npos; v = pool.next(v)) {
    const std::size_t k = size + 1;
    if (k >= 2) ++out[k];
    if (k == kmax) continue;
    VertexSet rest = pool - g.neighbors(v);
    for (VertexId u = rest.first(); u != VertexSet::npos && u <= v; u = rest.next(u)) rest.reset(u);
    grow_independent(g, rest, k, kmax, out);
  }
}

}  // namespace

MotifCounts cycle_census(const Graph& g, std::size_t max_length) {
  guard_length("cycle_census", max_length, 3);
  MotifCounts out;
  VertexSet on_path(g.order());
  std::vector<VertexId> path;
  for (VertexId root = 0; root < g.order(); ++root) {
    path.assign(1, root);
    on_path.set(root);
    extend_cycle(g, root, path, on_path, max_length, out);
    on_path.reset(root);
  }
  return out;
}

MotifCounts chain_census(const Graph& g, std::size_t max_length) {
  guard_length("chain_census", max_length, 1);
  MotifCounts out;
  VertexSet on_path(g.order());
  std::vector<VertexId> path;
  for (VertexId start = 0; start < g.order(); ++start) {
    path.assign(1, start);
    on_path.set(start);
    extend_chain(g, path, on_path, max_length, out);
    on_path.reset(start);
  }
  return out;
}

MotifCounts star_census(const Graph& g, std::size_t kmax) {
  MotifCounts out;
  if (kmax < 2) return out;
  for (VertexId center = 0; center < g.order(); ++center)
    grow_independent(g, g.neighbors(center), 0, kmax, out);
  return out;
}

MotifCensus motif_census(const Graph& g, std::size_t max_length) {
  MotifCensus m;
  if (max_length >= 3) m.cycles = cycle_census(g, max_length);
  m.chains = chain_census(g, max_length);
  m.stars = star_census(g, std::max<std::size_t>(max_length, 2));
  return m;
}

}  // namespace cliquearch
