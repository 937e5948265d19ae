#include "cliquearch/oracle.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "cliquearch/errors.hpp"

namespace cliquearch {

namespace {

void guard(const Graph& g) {
  if (g.order() > kOracleMaxOrder)
    throw GuardError("oracle refuses graphs with more than " + std::to_string(kOracleMaxOrder) +
                     " vertices (got " + std::to_string(g.order()) + "); the subset scan is 2^n");
}

std::vector<VertexId> members(std::uint32_t mask) {
  std::vector<VertexId> out;
  while (mask) {
    out.push_back(static_cast<VertexId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

// Visits every vertex subset that is a clique. clique[mask] is derived from
// clique[mask minus its lowest member], so each subset costs O(1).
template <typename Fn>
void scan_cliques(const Graph& g, Fn&& visit) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::uint8_t> is_clique(total, 0);
  is_clique[0] = 1;
  visit(std::uint32_t{0}, adj);
  for (std::uint64_t m = 1; m < total; ++m) {
    const auto mask = static_cast<std::uint32_t>(m);
    const int low = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    if (is_clique[rest] && (adj[low] & rest) == rest) {
      is_clique[m] = 1;
      visit(mask, adj);
    }
  }
}

}  // namespace

std::vector<Clique> oracle_maximal_cliques(const Graph& g, std::size_t min_size) {
  guard(g);
  const std::size_t n = g.order();
  const std::uint32_t everyone = n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  std::vector<Clique> out;
  scan_cliques(g, [&](std::uint32_t mask, const std::vector<std::uint32_t>& adj) {
    if (mask == 0 || static_cast<std::size_t>(std::popcount(mask)) < min_size) return;
    std::uint32_t extenders = everyone & ~mask;
    for (std::uint32_t m = mask; m; m &= m - 1) extenders &= adj[std::countr_zero(m)];
    if (extenders == 0) out.emplace_back(members(mask));
  });
  return canonicalize(std::move(out));
}

Clique oracle_maximum_clique(const Graph& g) {
  guard(g);
  Clique best;
  scan_cliques(g, [&](std::uint32_t mask, const std::vector<std::uint32_t>&) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size < best.size()) return;
    Clique c(members(mask));
    if (size > best.size() || c.vertices < best.vertices) best = std::move(c);
  });
  return best;
}

}  // namespace cliquearch
