#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cliquearch/graph.hpp"

namespace cliquearch {

/// Histogram: clique size -> number of cliques of that size.
using Census = std::map<std::size_t, std::size_t>;

/// Report flags.
inline constexpr const char* kFlagResidualFallback = "RESIDUAL_FALLBACK";
inline constexpr const char* kFlagSpuriousPresent = "SPURIOUS_PRESENT";
inline constexpr const char* kFlagMaximumOnly = "MAXIMUM_ONLY";

/// One algorithm run on one graph.
struct CliqueReport {
  std::string algorithm;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Clique> cliques;  // canonical order
  Census census;
  std::int64_t elapsed_us = 0;
  std::vector<std::string> flags;

  friend bool operator==(const CliqueReport&, const CliqueReport&) = default;
};

/// One row of a comparison: a canonical clique and which algorithms emitted it.
struct DiffRow {
  Clique clique;
  std::vector<bool> present;  // parallel to DiffReport::algorithms
  /// "true_clique" or "spurious".
  std::string classification;
  /// Failing check for spurious rows: "not_clique", "not_maximal" or
  /// "not_in_oracle"; empty otherwise.
  std::string failure;
  /// Present in at least one but not all outputs.
  bool witness = false;
  /// 1-based identifier for true-clique rows, 0 for spurious rows.
  std::size_t id = 0;

  friend bool operator==(const DiffRow&, const DiffRow&) = default;
};

/// Cross-algorithm agreement matrix with disagreement witnesses.
struct DiffReport {
  std::vector<std::string> algorithms;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t min_size = 1;
  /// "oracle" when the subset-scan oracle classified rows, else "predicates".
  std::string classifier;
  std::vector<CliqueReport> reports;  // parallel to algorithms
  std::vector<DiffRow> rows;          // canonical clique order

  std::vector<const DiffRow*> witnesses() const;

  friend bool operator==(const DiffReport&, const DiffReport&) = default;
};

Census census_of(const std::vector<Clique>& cliques);

/// Canonicalizes `cliques` and fills the census.
CliqueReport make_report(std::string algorithm, const Graph& g, std::vector<Clique> cliques);

}  // namespace cliquearch
