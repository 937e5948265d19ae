#include "cliquearch/generators.hpp"

#include <charconv>
#include <map>
#include <vector>

#include "cliquearch/errors.hpp"

namespace cliquearch {

Graph moon_moser(std::size_t k) {
  if (k < 1 || k > kMoonMoserMaxK)
    throw GuardError("moon_moser: k must be in [1, " + std::to_string(kMoonMoserMaxK) +
                     "], got " + std::to_string(k));
  const std::size_t n = 3 * k;
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (u / 3 != v / 3) edges.emplace_back(u, v);
  return from_edges(n, edges);
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw GraphError("gnp: p must be in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (rng.next_unit() < p) edges.emplace_back(u, v);
  return from_edges(n, edges);
}

Graph random_ktree(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k < 1 || n <= k)
    throw GraphError("random_ktree: need n > k >= 1, got n=" + std::to_string(n) +
                     ", k=" + std::to_string(k));
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  std::vector<std::vector<VertexId>> kcliques;

  for (VertexId u = 0; u <= k; ++u)
    for (VertexId v = u + 1; v <= k; ++v) edges.emplace_back(u, v);
  for (VertexId skip = 0; skip <= k; ++skip) {
    std::vector<VertexId> c;
    for (VertexId v = 0; v <= k; ++v)
      if (v != skip) c.push_back(v);
    kcliques.push_back(std::move(c));
  }

  for (auto v = static_cast<VertexId>(k + 1); v < n; ++v) {
    const std::vector<VertexId> base = kcliques[rng.below(kcliques.size())];
    for (VertexId u : base) edges.emplace_back(u, v);
    for (std::size_t drop = 0; drop < base.size(); ++drop) {
      std::vector<VertexId> c;
      for (std::size_t i = 0; i < base.size(); ++i)
        if (i != drop) c.push_back(base[i]);
      c.push_back(v);
      kcliques.push_back(std::move(c));
    }
  }
  return from_edges(n, edges);
}

Graph named(NamedKind kind, std::size_t n) {
  std::vector<Edge> edges;
  switch (kind) {
    case NamedKind::path:
      if (n < 1) throw GraphError("path needs n >= 1");
      for (VertexId v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      return from_edges(n, edges);
    case NamedKind::cycle:
      if (n < 3) throw GraphError("cycle needs n >= 3");
      for (VertexId v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      edges.emplace_back(static_cast<VertexId>(n - 1), 0);
      return from_edges(n, edges);
    case NamedKind::star:
      if (n < 1) throw GraphError("star needs n >= 1");
      for (VertexId v = 1; v <= n; ++v) edges.emplace_back(0, v);
      return from_edges(n + 1, edges);
    case NamedKind::complete:
      if (n < 1) throw GraphError("complete needs n >= 1");
      for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      return from_edges(n, edges);
    case NamedKind::empty:
      if (n < 1) throw GraphError("empty needs n >= 1");
      return from_edges(n, edges);
  }
  throw GraphError("unknown graph kind");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

class SpecArgs {
 public:
  SpecArgs(std::string_view spec, std::string_view params) : spec_(spec) {
    while (!params.empty()) {
      const auto comma = params.find(',');
      std::string_view item = trim(params.substr(0, comma));
      params = comma == std::string_view::npos ? std::string_view{} : params.substr(comma + 1);
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) fail("expected key=value, got '" + std::string(item) + "'");
      values_[std::string(trim(item.substr(0, eq)))] = std::string(trim(item.substr(eq + 1)));
    }
  }

  std::uint64_t integer(const std::string& key) {
    const std::string& text = take(key);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
      fail("'" + key + "' must be a non-negative integer, got '" + text + "'");
    return value;
  }

  double real(const std::string& key) {
    const std::string& text = take(key);
    try {
      std::size_t used = 0;
      const double value = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return value;
    } catch (const std::exception&) {
      fail("'" + key + "' must be a number, got '" + text + "'");
    }
  }

  void finish() const {
    for (const auto& [key, value] : values_)
      if (!used_.contains(key)) fail("unknown parameter '" + key + "'");
  }

 private:
  const std::string& take(const std::string& key) {
    auto it = values_.find(key);
    if (it == values_.end()) fail("missing parameter '" + key + "'");
    used_[key] = true;
    return it->second;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("generator spec '" + std::string(spec_) + "': " + why);
  }

  std::string_view spec_;
  std::map<std::string, std::string> values_;
  std::map<std::string, bool> used_;
};

}  // namespace

Graph from_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string kind(trim(spec.substr(0, colon)));
  SpecArgs args(spec, colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1));

  auto build = [&]() -> Graph {
    if (kind == "moonmoser") return moon_moser(args.integer("k"));
    if (kind == "gnp") {
      const auto n = args.integer("n");
      const double p = args.real("p");
      return gnp(n, p, args.integer("seed"));
    }
    if (kind == "ktree") {
      const auto n = args.integer("n");
      const auto k = args.integer("k");
      return random_ktree(n, k, args.integer("seed"));
    }
    static const std::map<std::string, NamedKind> kinds = {{"path", NamedKind::path},
                                                           {"cycle", NamedKind::cycle},
                                                           {"star", NamedKind::star},
                                                           {"complete", NamedKind::complete},
                                                           {"empty", NamedKind::empty}};
    auto it = kinds.find(kind);
    if (it == kinds.end())
      throw ParseError("generator spec '" + std::string(spec) + "': unknown generator '" + kind +
                       "' (moonmoser, gnp, ktree, path, cycle, star, complete, empty)");
    return named(it->second, args.integer("n"));
  };
  Graph g = build();
  args.finish();
  return g;
}

}  // namespace cliquearch
