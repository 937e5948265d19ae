#include "cliquearch/historical.hpp"

#include <algorithm>
#include <chrono>

namespace cliquearch {

namespace {

// A ∘ A² over the subgraph induced by `alive`, as a dense matrix.
std::vector<std::size_t> support_matrix(const Graph& g, const VertexSet& alive) {
  const std::size_t n = g.order();
  std::vector<std::size_t> a(n * n, 0);
  alive.for_each([&](VertexId i) {
    (g.neighbors(i) & alive).for_each([&](VertexId j) { a[i * n + j] = 1; });
  });
  std::vector<std::size_t> t(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!a[i * n + j]) continue;
      std::size_t square = 0;
      for (std::size_t k = 0; k < n; ++k) square += a[i * n + k] * a[k * n + j];
      t[i * n + j] = square;
    }
  return t;
}

VertexSet partners(const std::vector<std::size_t>& t, std::size_t n, VertexId v) {
  VertexSet out(n);
  for (VertexId j = 0; j < n; ++j)
    if (t[v * n + j] > 0) out.set(j);
  return out;
}

VertexSet supported(const std::vector<std::size_t>& t, std::size_t n, const VertexSet& within) {
  VertexSet out(n);
  within.for_each([&](VertexId v) {
    if (!partners(t, n, v).empty()) out.set(v);
  });
  return out;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet unseen = within;
  while (!unseen.empty()) {
    VertexSet comp(g.order());
    VertexSet frontier(g.order());
    frontier.set(unseen.first());
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next(g.order());
      frontier.for_each([&](VertexId v) { next |= g.neighbors(v); });
      next &= within;
      next -= comp;
      frontier = next;
    }
    unseen -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

TriangleSupport::TriangleSupport(const Graph& g)
    : n_(g.order()), t_(support_matrix(g, g.all_vertices())) {}

VertexSet TriangleSupport::triangle_partners(VertexId v) const { return partners(t_, n_, v); }

TriangleSupport triangle_support(const Graph& g) { return TriangleSupport(g); }

VertexSet cliqual_vertices(const Graph& g) {
  const VertexSet all = g.all_vertices();
  return supported(support_matrix(g, all), g.order(), all);
}

std::string to_string(Provenance p) {
  return p == Provenance::peeled ? "PEELED" : "RESIDUAL_FALLBACK";
}

std::string HistoricalSet::failure() const {
  if (!is_clique) return "not_clique";
  if (!is_maximal) return "not_maximal";
  return "";
}

std::vector<Clique> HistoricalReport::true_cliques() const {
  std::vector<Clique> out;
  for (const auto& s : sets)
    if (s.failure().empty()) out.push_back(s.members);
  return canonicalize(std::move(out));
}

HistoricalReport harary_ross_reconstruction(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::pair<Clique, Provenance>> emitted;
  std::vector<Clique> recorded;

  VertexSet alive = g.all_vertices();
  while (true) {
    // Restriction never removes a triangle among the survivors, so one pass
    // after each recomputation is enough.
    std::vector<std::size_t> t = support_matrix(g, alive);
    alive = supported(t, n, alive);
    t = support_matrix(g, alive);

    VertexId chosen = VertexSet::npos;
    VertexSet chosen_partners;
    for (VertexId v = alive.first(); v != VertexSet::npos; v = alive.next(v)) {
      VertexSet p = partners(t, n, v);
      if (is_clique(g, p)) {
        chosen = v;
        chosen_partners = std::move(p);
        break;
      }
    }
    if (chosen == VertexSet::npos) break;

    chosen_partners.set(chosen);
    Clique set(chosen_partners.to_vector());
    const bool nested = std::any_of(recorded.begin(), recorded.end(),
                                    [&](const Clique& r) { return set.is_subset_of(r); });
    if (!nested) emitted.emplace_back(set, Provenance::peeled);
    recorded.push_back(std::move(set));
    alive.reset(chosen);
  }

  HistoricalReport report;
  if (!alive.empty()) {
    report.flags.push_back(kFlagResidualFallback);
    for (const auto& comp : components(g, alive))
      emitted.emplace_back(Clique(comp.to_vector()), Provenance::residual_fallback);
  }

  for (auto& [members, provenance] : emitted) {
    HistoricalSet s;
    s.is_clique = is_clique(g, members.vertices);
    s.is_maximal = s.is_clique && is_maximal_clique(g, members.vertices);
    s.members = std::move(members);
    s.provenance = provenance;
    if (!s.failure().empty()) report.spurious.push_back(s.members);
    report.cliques.push_back(s.members);
    report.sets.push_back(std::move(s));
  }
  std::sort(report.sets.begin(), report.sets.end(), [](const auto& a, const auto& b) {
    return CanonicalOrder{}(a.members, b.members);
  });
  report.cliques = canonicalize(std::move(report.cliques));
  report.spurious = canonicalize(std::move(report.spurious));
  if (!report.spurious.empty()) report.flags.push_back(kFlagSpuriousPresent);
  return report;
}

CliqueReport harary_report(const Graph& g, std::size_t min_size) {
  const auto start = std::chrono::steady_clock::now();
  const HistoricalReport h = harary_ross_reconstruction(g);
  const auto stop = std::chrono::steady_clock::now();
  CliqueReport r = make_report("harary1957", g, filter_min_size(h.cliques, min_size));
  r.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
  r.flags = h.flags;
  return r;
}

}  // namespace cliquearch
