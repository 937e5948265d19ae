#include "cliquearch/harness.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "cliquearch/enumeration.hpp"
#include "cliquearch/errors.hpp"
#include "cliquearch/generators.hpp"
#include "cliquearch/historical.hpp"
#include "cliquearch/io.hpp"
#include "cliquearch/maxclique.hpp"
#include "cliquearch/oracle.hpp"

namespace cliquearch {

std::vector<const DiffRow*> DiffReport::witnesses() const {
  std::vector<const DiffRow*> out;
  for (const auto& row : rows)
    if (row.witness) out.push_back(&row);
  return out;
}

const std::vector<std::string>& algorithm_ids() {
  static const std::vector<std::string> ids = {"bk_basic",      "bk_pivot",      "makino2004",
                                               "ostergard2001", "bk_degeneracy", "harary1957",
                                               "oracle"};
  return ids;
}

std::string resolve_algorithm(std::string_view name) {
  static const std::map<std::string, std::string, std::less<>> aliases = {
      {"bron1973", "bk_pivot"},         {"eppstein2010", "bk_degeneracy"},
      {"census", "makino2004"},         {"osertgard2001", "ostergard2001"},
      {"harary_ross", "harary1957"},    {"harary", "harary1957"}};
  const auto& ids = algorithm_ids();
  if (std::find(ids.begin(), ids.end(), name) != ids.end()) return std::string(name);
  if (auto it = aliases.find(name); it != aliases.end()) return it->second;
  std::string valid;
  for (const auto& id : ids) valid += (valid.empty() ? "" : ", ") + id;
  throw UsageError("unknown algorithm '" + std::string(name) + "'; valid ids: " + valid);
}

CliqueReport run_algorithm(std::string_view name, const Graph& g, std::size_t min_size) {
  const std::string id = resolve_algorithm(name);
  if (id == "bk_basic") return bk_basic(g, min_size);
  if (id == "bk_pivot") return bk_pivot(g, min_size);
  if (id == "bk_degeneracy") return bk_degeneracy(g, min_size);
  if (id == "harary1957") return harary_report(g, min_size);

  const auto start = std::chrono::steady_clock::now();
  CliqueReport r;
  if (id == "makino2004") {
    r = bk_pivot(g, min_size);
    r.census = clique_census(r);
  } else if (id == "ostergard2001") {
    r = make_report(id, g, ordered_maximal_cliques(g, min_size));
  } else {
    r = make_report(id, g, oracle_maximal_cliques(g, std::max<std::size_t>(min_size, 1)));
  }
  r.algorithm = id;
  r.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

DiffReport run_comparison(const Graph& g, const std::vector<std::string>& algorithms,
                          std::size_t min_size, ComparisonOptions options) {
  if (algorithms.size() < 2) throw UsageError("a comparison needs at least two algorithms");
  DiffReport d;
  for (const auto& a : algorithms) d.algorithms.push_back(resolve_algorithm(a));
  d.n = g.order();
  d.m = g.size();
  d.min_size = min_size;

  for (const auto& a : d.algorithms) {
    CliqueReport r = run_algorithm(a, g, min_size);
    if (!options.record_timing) r.elapsed_us = 0;
    d.reports.push_back(std::move(r));
  }

  std::map<Clique, std::vector<bool>, CanonicalOrder> presence;
  for (std::size_t i = 0; i < d.reports.size(); ++i)
    for (const auto& c : d.reports[i].cliques) {
      auto& marks = presence[c];
      marks.resize(d.reports.size(), false);
      marks[i] = true;
    }

  std::optional<std::set<Clique>> oracle;
  if (g.order() <= kOracleMaxOrder) {
    const auto truth = oracle_maximal_cliques(g, std::max<std::size_t>(min_size, 1));
    oracle.emplace(truth.begin(), truth.end());
  }
  d.classifier = oracle ? "oracle" : "predicates";

  std::size_t next_id = 1;
  for (auto& [clique, marks] : presence) {
    DiffRow row;
    row.clique = clique;
    row.present = marks;
    const auto hits = static_cast<std::size_t>(std::count(marks.begin(), marks.end(), true));
    row.witness = hits > 0 && hits < marks.size();
    if (!is_clique(g, clique.vertices))
      row.failure = "not_clique";
    else if (!is_maximal_clique(g, clique.vertices))
      row.failure = "not_maximal";
    else if (oracle && !oracle->contains(clique))
      row.failure = "not_in_oracle";
    row.classification = row.failure.empty() ? "true_clique" : "spurious";
    if (row.failure.empty()) row.id = next_id++;
    d.rows.push_back(std::move(row));
  }
  return d;
}

namespace {

std::string members_text(const Clique& c, const Graph& g) {
  std::string out;
  for (VertexId v : c.vertices) out += (out.empty() ? "" : " ") + g.name(v);
  return out;
}

}  // namespace

std::string render_diff_table(const DiffReport& report, const Graph& g) {
  std::ostringstream os;
  os << "graph: n=" << report.n << " m=" << report.m << " min_size=" << report.min_size
     << " classifier=" << report.classifier << "\n\n";

  std::vector<std::size_t> width;
  for (const auto& a : report.algorithms) width.push_back(std::max<std::size_t>(a.size(), 3));

  os << std::left << std::setw(4) << "Id" << std::setw(6) << "Size";
  for (std::size_t i = 0; i < report.algorithms.size(); ++i)
    os << std::setw(static_cast<int>(width[i] + 2)) << report.algorithms[i];
  os << "Members\n";

  std::size_t spurious = 0;
  for (const auto& row : report.rows) {
    os << std::setw(4) << (row.id ? std::to_string(row.id) : "-") << std::setw(6)
       << row.clique.size();
    for (std::size_t i = 0; i < report.algorithms.size(); ++i)
      os << std::setw(static_cast<int>(width[i] + 2)) << (row.present[i] ? "x" : "-");
    os << members_text(row.clique, g);
    if (!row.failure.empty()) {
      os << "  [spurious: " << row.failure << "]";
      ++spurious;
    }
    os << "\n";
  }

  os << "\nrows: " << report.rows.size() << "  true cliques: " << report.rows.size() - spurious
     << "  spurious: " << spurious << "  witnesses: " << report.witnesses().size() << "\n";
  for (const auto& r : report.reports)
    if (!r.flags.empty()) {
      os << "flags " << r.algorithm << ":";
      for (const auto& f : r.flags) os << " " << f;
      os << "\n";
    }
  return os.str();
}

std::vector<std::string> table1_algorithms(bool with_historical) {
  std::vector<std::string> algos = {"bk_basic", "bk_pivot", "makino2004", "ostergard2001",
                                    "bk_degeneracy"};
  if (with_historical) algos.insert(algos.begin(), "harary1957");
  return algos;
}

DiffReport table1(bool with_historical, std::size_t min_size) {
  return run_comparison(load_assyrian(), table1_algorithms(with_historical), min_size);
}

BenchResult bench(std::string_view generator_spec, const std::vector<std::string>& algorithms,
                  std::size_t repetitions) {
  if (repetitions < 1) throw UsageError("bench needs at least one repetition");
  if (algorithms.empty()) throw UsageError("bench needs at least one algorithm");
  const Graph g = from_spec(generator_spec);

  BenchResult result;
  result.spec = std::string(generator_spec);
  result.n = g.order();
  result.m = g.size();
  result.repetitions = repetitions;

  std::vector<CliqueReport> first;
  for (const auto& name : algorithms) {
    const std::string id = resolve_algorithm(name);
    std::vector<std::int64_t> times;
    BenchRow row;
    row.algorithm = id;
    for (std::size_t rep = 0; rep < repetitions; ++rep) {
      CliqueReport r = run_algorithm(id, g, 1);
      times.push_back(r.elapsed_us);
      if (rep == 0) {
        row.cliques = r.cliques.size();
        row.census = r.census;
        first.push_back(std::move(r));
      } else if (r.cliques.size() != row.cliques) {
        throw DisagreementError(id + " returned " + std::to_string(r.cliques.size()) +
                                " cliques on repetition " + std::to_string(rep + 1) +
                                " but " + std::to_string(row.cliques) + " on the first");
      }
    }
    std::sort(times.begin(), times.end());
    row.median_us = times[times.size() / 2];
    result.rows.push_back(std::move(row));
  }

  const bool agree = std::all_of(result.rows.begin(), result.rows.end(), [&](const BenchRow& r) {
    return r.cliques == result.rows.front().cliques;
  });
  if (!agree) {
    std::ostringstream os;
    os << "clique counts disagree on " << generator_spec << ":";
    for (const auto& r : result.rows) os << " " << r.algorithm << "=" << r.cliques;
    // Witnesses: cliques not emitted by every algorithm, at most ten.
    std::map<Clique, std::size_t, CanonicalOrder> seen;
    for (const auto& r : first)
      for (const auto& c : r.cliques) ++seen[c];
    std::size_t shown = 0;
    for (const auto& [c, hits] : seen) {
      if (hits == first.size()) continue;
      if (shown++ == 10) break;
      os << "\n  witness {";
      for (std::size_t i = 0; i < c.vertices.size(); ++i) os << (i ? "," : "") << c.vertices[i];
      os << "} in";
      for (const auto& r : first)
        if (std::binary_search(r.cliques.begin(), r.cliques.end(), c, CanonicalOrder{}))
          os << " " << r.algorithm;
    }
    throw DisagreementError(os.str());
  }
  return result;
}

std::string render_bench_counts(const BenchResult& result) {
  std::ostringstream os;
  os << "bench " << result.spec << ": n=" << result.n << " m=" << result.m
     << " repetitions=" << result.repetitions << "\n";
  os << std::left << std::setw(16) << "algorithm" << std::setw(10) << "cliques" << "census\n";
  for (const auto& r : result.rows) {
    os << std::setw(16) << r.algorithm << std::setw(10) << r.cliques;
    bool first = true;
    for (const auto& [size, count] : r.census) {
      os << (first ? "" : " ") << size << ":" << count;
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

std::string render_bench_timings(const BenchResult& result) {
  std::ostringstream os;
  os << std::left << std::setw(16) << "algorithm" << "median_us\n";
  for (const auto& r : result.rows) os << std::setw(16) << r.algorithm << r.median_us << "\n";
  return os.str();
}

}  // namespace cliquearch
