#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cliquearch/graph.hpp"
#include "cliquearch/report.hpp"

namespace cliquearch {

/// Canonical algorithm ids, in the order used for table columns.
const std::vector<std::string>& algorithm_ids();

/// Maps an id or alias ("eppstein2010", "census", "osertgard2001",
/// "harary_ross", ...) to its canonical id. Throws UsageError listing valid
/// ids for unknown names.
std::string resolve_algorithm(std::string_view name);

/// Runs one algorithm and returns its report (canonical cliques, census,
/// elapsed time, flags). The "oracle" id throws GuardError above its guard.
CliqueReport run_algorithm(std::string_view id, const Graph& g, std::size_t min_size);

struct ComparisonOptions {
  /// Keep per-algorithm elapsed times; off by default so reports are byte-stable.
  bool record_timing = false;
};

/// Runs every algorithm, builds the presence matrix keyed by canonical
/// clique, and classifies every row: with the subset-scan oracle when
/// g.order() <= 25, otherwise with the clique and maximality predicates.
/// Needs at least two algorithms.
DiffReport run_comparison(const Graph& g, const std::vector<std::string>& algorithms,
                          std::size_t min_size, ComparisonOptions options = {});

/// Fixed-width text rendering of a comparison. Deterministic for fixed input.
std::string render_diff_table(const DiffReport& report, const Graph& g);

/// Columns of the Assyrian comparison: the modern enumerators, plus the
/// historical reconstruction when requested.
std::vector<std::string> table1_algorithms(bool with_historical);

/// Comparison on the bundled Assyrian network.
DiffReport table1(bool with_historical = false, std::size_t min_size = 3);

struct BenchRow {
  std::string algorithm;
  std::size_t cliques = 0;
  Census census;
  std::int64_t median_us = 0;
};

struct BenchResult {
  std::string spec;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t repetitions = 0;
  std::vector<BenchRow> rows;
};

/// Times each algorithm `repetitions` times on the generated graph. Throws
/// DisagreementError (with a dump of the differing outputs) when clique
/// counts differ between algorithms or between repetitions.
BenchResult bench(std::string_view generator_spec, const std::vector<std::string>& algorithms,
                  std::size_t repetitions);

/// Counts and census only; byte-stable across runs.
std::string render_bench_counts(const BenchResult& result);

/// Median wall times.
std::string render_bench_timings(const BenchResult& result);

}  // namespace cliquearch
