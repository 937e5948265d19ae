#pragma once

// Test-only helpers. Nothing here calls the algorithms under test; the
// brute-force recounters work on plain adjacency matrices.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cliquearch/generators.hpp"
#include "cliquearch/graph.hpp"

namespace testing {

using cliquearch::Clique;
using cliquearch::Edge;
using cliquearch::Graph;
using cliquearch::VertexId;

using Matrix = std::vector<std::vector<int>>;

inline Matrix matrix_of(const Graph& g) {
  Matrix a(g.order(), std::vector<int>(g.order(), 0));
  for (const auto& [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

inline Graph graph_of(std::size_t n, std::initializer_list<Edge> edges) {
  std::vector<Edge> e(edges);
  return cliquearch::from_edges(n, e);
}

struct CorpusGraph {
  std::string name;
  Graph graph;
};

/// Seeded G(n, p) corpus: `count` graphs cycling through p in {0.2, 0.5, 0.8}
/// with n in [min_n, max_n].
inline std::vector<CorpusGraph> random_corpus(std::size_t count, std::size_t min_n,
                                              std::size_t max_n, std::uint64_t base_seed) {
  static constexpr double kDensities[] = {0.2, 0.5, 0.8};
  std::vector<CorpusGraph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = min_n + i % (max_n - min_n + 1);
    const double p = kDensities[i % 3];
    const std::uint64_t seed = base_seed + i;
    out.push_back({"gnp(" + std::to_string(n) + "," + std::to_string(p) + "," +
                       std::to_string(seed) + ")",
                   cliquearch::gnp(n, p, seed)});
  }
  return out;
}

/// Simple cycles by length: ordered vertex sequences closing a cycle,
/// divided by the 2l rotations and reflections of each cycle.
inline std::map<std::size_t, std::size_t> naive_cycles(const Graph& g, std::size_t max_len) {
  const Matrix a = matrix_of(g);
  const std::size_t n = g.order();
  std::map<std::size_t, std::size_t> out;
  for (std::size_t len = 3; len <= max_len && len <= n; ++len) {
    std::size_t sequences = 0;
    std::vector<int> pick(n, 0);
    std::fill(pick.end() - static_cast<long>(len), pick.end(), 1);
    do {
      std::vector<int> members;
      for (std::size_t v = 0; v < n; ++v)
        if (pick[v]) members.push_back(static_cast<int>(v));
      do {
        bool ok = true;
        for (std::size_t i = 0; i < len && ok; ++i) ok = a[members[i]][members[(i + 1) % len]];
        sequences += ok;
      } while (std::next_permutation(members.begin(), members.end()));
    } while (std::next_permutation(pick.begin(), pick.end()));
    if (sequences) out[len] = sequences / (2 * len);
  }
  return out;
}

/// Simple paths by edge count: ordered sequences / 2.
inline std::map<std::size_t, std::size_t> naive_chains(const Graph& g, std::size_t max_len) {
  const Matrix a = matrix_of(g);
  const std::size_t n = g.order();
  std::map<std::size_t, std::size_t> out;
  for (std::size_t len = 1; len <= max_len && len + 1 <= n; ++len) {
    std::size_t sequences = 0;
    std::vector<int> pick(n, 0);
    std::fill(pick.end() - static_cast<long>(len + 1), pick.end(), 1);
    do {
      std::vector<int> members;
      for (std::size_t v = 0; v < n; ++v)
        if (pick[v]) members.push_back(static_cast<int>(v));
      do {
        bool ok = true;
        for (std::size_t i = 0; i + 1 <= len && ok; ++i) ok = a[members[i]][members[i + 1]];
        sequences += ok;
      } while (std::next_permutation(members.begin(), members.end()));
    } while (std::next_permutation(pick.begin(), pick.end()));
    if (sequences) out[len] = sequences / 2;
  }
  return out;
}

/// Induced stars by vertex subset: a subset of size k+1 is an induced K_{1,k}
/// when exactly one member is adjacent to all others and the rest are
/// pairwise non-adjacent.
inline std::map<std::size_t, std::size_t> naive_stars(const Graph& g, std::size_t kmax) {
  const Matrix a = matrix_of(g);
  const std::size_t n = g.order();
  std::map<std::size_t, std::size_t> out;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    std::vector<int> s;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1U) s.push_back(static_cast<int>(v));
    if (s.size() < 3 || s.size() > kmax + 1) continue;
    for (int c : s) {
      bool star = true;
      for (int x : s)
        for (int y : s) {
          if (x == y) continue;
          const bool touches_center = x == c || y == c;
          if (touches_center != static_cast<bool>(a[x][y])) star = false;
        }
      if (star) {
        ++out[s.size() - 1];
        break;
      }
    }
  }
  return out;
}

/// Degeneracy by definition: max over non-empty vertex subsets of the
/// minimum degree in the induced subgraph. n <= 16.
inline std::size_t naive_degeneracy(const Graph& g) {
  const Matrix a = matrix_of(g);
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    std::size_t min_deg = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!(mask >> v & 1U)) continue;
      std::size_t d = 0;
      for (std::size_t u = 0; u < n; ++u) d += (mask >> u & 1U) && a[v][u];
      min_deg = std::min(min_deg, d);
    }
    best = std::max(best, min_deg);
  }
  return best;
}

inline bool pairwise_non_nested(const std::vector<Clique>& cliques) {
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (std::size_t j = 0; j < cliques.size(); ++j)
      if (i != j && cliques[i].is_subset_of(cliques[j])) return false;
  return true;
}

inline std::vector<Clique> shuffled(std::vector<Clique> v, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

}  // namespace testing
