#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "cliquearch/graph.hpp"
#include "cliquearch/motifs.hpp"
#include "cliquearch/report.hpp"

namespace cliquearch {

enum class GraphFormat { edgelist, dimacs, csv };

/// "edgelist", "dimacs" or "csv"; throws ParseError otherwise.
GraphFormat parse_format(std::string_view name);

/// Guesses from the extension: .dimacs/.col/.clq -> dimacs, .csv -> csv,
/// anything else -> edgelist.
GraphFormat format_for_path(const std::filesystem::path& path);

/// One relation per line, "labelA labelB" separated by tabs or spaces; lines
/// starting with '#' and blank lines are ignored. Vertex ids follow label order.
Graph parse_edge_list(std::string_view text);

/// "p edge n m" followed by m lines "e u v" (1-based); 'c' lines are comments.
Graph parse_dimacs(std::string_view text);

struct CsvGraph {
  Graph graph;
  /// Set when some a[i][j] != a[j][i]; the graph uses a[i][j] OR a[j][i].
  bool asymmetric = false;
};

/// Square 0/1 matrix with a header row and a label column:
///   ,a,b,c
///   a,0,1,1
///   ...
/// Errors report 1-based (row, column) of the offending cell.
CsvGraph parse_adjacency_csv(std::string_view text);

Graph parse_graph(std::string_view text, GraphFormat format);

/// Reads a file and parses it; ParseError on I/O failure.
Graph read_graph(const std::filesystem::path& path, GraphFormat format);

/// Unlabeled vertices are written as zero-padded "v" names so that label
/// order equals id order on re-read. Isolated vertices are not representable.
std::string write_edge_list(const Graph& g);
std::string write_dimacs(const Graph& g);
std::string write_adjacency_csv(const Graph& g);
std::string write_graph(const Graph& g, GraphFormat format);

/// FNV-1a 64 over the canonical edge-list text of g.
std::uint64_t graph_digest(const Graph& g);

/// Pinned digest of the bundled Assyrian trade network.
extern const std::uint64_t kAssyrianDigest;

/// Bundled Assyrian merchant network. Throws DatasetError when the bundled
/// text fails to parse or its digest differs from kAssyrianDigest.
Graph load_assyrian();

/// Same checks against an external copy of the dataset file.
Graph load_assyrian(const std::filesystem::path& path);

/// The bundled dataset text as compiled in.
std::string_view assyrian_text();

/// Deterministic JSON: sorted keys, canonical clique order, two-space indent,
/// trailing newline.
std::string write_report_json(const CliqueReport& report);
std::string write_report_json(const DiffReport& report);
std::string write_report_json(const MotifCensus& census);

CliqueReport read_clique_report_json(std::string_view text);
DiffReport read_diff_report_json(std::string_view text);
MotifCensus read_motif_census_json(std::string_view text);

}  // namespace cliquearch
