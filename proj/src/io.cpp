#include "cliquearch/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "cliquearch/errors.hpp"

namespace cliquearch {

using nlohmann::json;

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t to_count(std::string_view s, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(std::string(what) + " must be a non-negative integer, got '" +
                         std::string(s) + "'",
                     line);
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> cells;
  while (true) {
    const auto comma = line.find(',');
    cells.push_back(trim(line.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return cells;
}

std::string vertex_name(const Graph& g, VertexId v) {
  if (g.labels()) return g.labels()->label(v);
  const std::size_t width = std::to_string(g.order() == 0 ? 0 : g.order() - 1).size();
  std::ostringstream os;
  os << 'v' << std::setw(static_cast<int>(width)) << std::setfill('0') << v;
  return os.str();
}

}  // namespace

GraphFormat parse_format(std::string_view name) {
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "dimacs") return GraphFormat::dimacs;
  if (name == "csv") return GraphFormat::csv;
  throw ParseError("unknown graph format '" + std::string(name) + "' (edgelist, dimacs, csv)");
}

GraphFormat format_for_path(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".dimacs" || ext == ".col" || ext == ".clq") return GraphFormat::dimacs;
  if (ext == ".csv") return GraphFormat::csv;
  return GraphFormat::edgelist;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> edges;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto tok = tokens(lines[i]);
    if (tok.empty() || tok.front().front() == '#') continue;
    if (tok.size() != 2)
      throw ParseError("expected two labels, found " + std::to_string(tok.size()), i + 1);
    if (tok[0] == tok[1])
      throw ParseError("self-loop on '" + std::string(tok[0]) + "'", i + 1);
    edges.emplace_back(std::string(tok[0]), std::string(tok[1]));
  }
  return from_labeled_edges(edges);
}

Graph parse_dimacs(std::string_view text) {
  std::optional<std::size_t> n;
  std::size_t declared = 0;
  std::size_t seen = 0;
  std::vector<Edge> edges;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line = i + 1;
    const auto tok = tokens(lines[i]);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (n) throw ParseError("duplicate header", line);
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
        throw ParseError("header must read 'p edge <n> <m>'", line);
      n = to_count(tok[2], line, "vertex count");
      declared = to_count(tok[3], line, "edge count");
      edges.reserve(declared);
    } else if (tok[0] == "e") {
      if (!n) throw ParseError("edge line before the 'p edge' header", line);
      if (tok.size() != 3) throw ParseError("edge line must read 'e <u> <v>'", line);
      const std::size_t u = to_count(tok[1], line, "endpoint");
      const std::size_t v = to_count(tok[2], line, "endpoint");
      if (u < 1 || u > *n || v < 1 || v > *n)
        throw ParseError("endpoint outside [1, " + std::to_string(*n) + "]", line);
      if (u == v) throw ParseError("self-loop on vertex " + std::to_string(u), line);
      edges.emplace_back(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
      ++seen;
    } else {
      throw ParseError("unrecognized line type '" + std::string(tok[0]) + "'", line);
    }
  }
  if (!n) throw ParseError("missing 'p edge' header");
  if (seen != declared)
    throw ParseError("header declares " + std::to_string(declared) + " edges but " +
                     std::to_string(seen) + " edge lines follow");
  return from_edges(*n, edges);
}

CsvGraph parse_adjacency_csv(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> rows;  // (line, text)
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (!trim(lines[i]).empty()) rows.emplace_back(i + 1, lines[i]);
  if (rows.empty()) throw ParseError("empty adjacency matrix");

  const auto header = split_csv(rows[0].second);
  const std::size_t k = header.size() - 1;
  if (rows.size() - 1 != k)
    throw ParseError("matrix is not square: " + std::to_string(rows.size() - 1) + " rows, " +
                     std::to_string(k) + " columns");
  std::vector<std::string> labels;
  for (std::size_t c = 1; c <= k; ++c) {
    if (header[c].empty()) throw ParseError("empty column label at (1, " + std::to_string(c + 1) + ")", rows[0].first);
    labels.emplace_back(header[c]);
  }

  std::vector<std::vector<int>> a(k, std::vector<int>(k, 0));
  for (std::size_t r = 0; r < k; ++r) {
    const auto [line, row_text] = rows[r + 1];
    const auto cells = split_csv(row_text);
    if (cells.size() != k + 1)
      throw ParseError("matrix is not square: row " + std::to_string(r + 2) + " has " +
                           std::to_string(cells.size() - 1) + " cells, expected " +
                           std::to_string(k),
                       line);
    if (cells[0] != labels[r])
      throw ParseError("row label '" + std::string(cells[0]) + "' does not match column label '" +
                           labels[r] + "'",
                       line);
    for (std::size_t c = 0; c < k; ++c) {
      const std::string where = "(" + std::to_string(r + 2) + ", " + std::to_string(c + 2) + ")";
      if (cells[c + 1] == "1") {
        a[r][c] = 1;
      } else if (cells[c + 1] != "0") {
        throw ParseError("non-binary cell '" + std::string(cells[c + 1]) + "' at " + where, line);
      }
      if (r == c && a[r][c]) throw ParseError("self-loop on diagonal at " + where, line);
    }
  }

  CsvGraph out;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = r + 1; c < k; ++c) {
      if (a[r][c] != a[c][r]) out.asymmetric = true;
      if (a[r][c] || a[c][r]) edges.emplace_back(labels[r], labels[c]);
    }
  out.graph = from_labeled_edges(edges, labels);
  return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::edgelist:
      return parse_edge_list(text);
    case GraphFormat::dimacs:
      return parse_dimacs(text);
    case GraphFormat::csv:
      return parse_adjacency_csv(text).graph;
  }
  throw ParseError("unknown graph format");
}

Graph read_graph(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), format);
}

std::string write_edge_list(const Graph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) {
    out += vertex_name(g, u);
    out += '\t';
    out += vertex_name(g, v);
    out += '\n';
  }
  return out;
}

std::string write_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const auto& [u, v] : g.edges())
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

std::string write_adjacency_csv(const Graph& g) {
  std::string out;
  for (VertexId v = 0; v < g.order(); ++v) out += "," + vertex_name(g, v);
  out += '\n';
  for (VertexId u = 0; u < g.order(); ++u) {
    out += vertex_name(g, u);
    for (VertexId v = 0; v < g.order(); ++v) out += g.adjacent(u, v) ? ",1" : ",0";
    out += '\n';
  }
  return out;
}

std::string write_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::edgelist:
      return write_edge_list(g);
    case GraphFormat::dimacs:
      return write_dimacs(g);
    case GraphFormat::csv:
      return write_adjacency_csv(g);
  }
  return {};
}

std::uint64_t graph_digest(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : write_edge_list(g)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

const std::uint64_t kAssyrianDigest = 0x6ab67b85114ef03cULL;

namespace {

Graph checked_assyrian(std::string_view text, const std::string& source) {
  Graph g;
  try {
    g = parse_edge_list(text);
  } catch (const std::exception& e) {
    throw DatasetError("Assyrian dataset (" + source + ") is corrupted: " + e.what());
  }
  if (graph_digest(g) != kAssyrianDigest) {
    std::ostringstream os;
    os << "Assyrian dataset (" << source << ") failed its integrity check: digest 0x" << std::hex
       << graph_digest(g) << ", expected 0x" << kAssyrianDigest;
    throw DatasetError(os.str());
  }
  return g;
}

}  // namespace

Graph load_assyrian() { return checked_assyrian(assyrian_text(), "bundled"); }

Graph load_assyrian(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DatasetError("Assyrian dataset file '" + path.string() + "' is missing");
  std::ostringstream buf;
  buf << in.rdbuf();
  return checked_assyrian(buf.str(), path.string());
}

// ---------------------------------------------------------------- JSON

namespace {

json cliques_json(const std::vector<Clique>& cliques) {
  json arr = json::array();
  for (const auto& c : cliques) arr.push_back(c.vertices);
  return arr;
}

std::vector<Clique> cliques_from(const json& arr) {
  std::vector<Clique> out;
  for (const auto& c : arr) out.emplace_back(c.get<std::vector<VertexId>>());
  return out;
}

json counts_json(const std::map<std::size_t, std::size_t>& counts) {
  json obj = json::object();
  for (const auto& [k, v] : counts) obj[std::to_string(k)] = v;
  return obj;
}

std::map<std::size_t, std::size_t> counts_from(const json& obj) {
  std::map<std::size_t, std::size_t> out;
  for (const auto& [k, v] : obj.items()) out[std::stoul(k)] = v.get<std::size_t>();
  return out;
}

json report_json(const CliqueReport& r) {
  return json{{"algorithm", r.algorithm},
              {"graph", {{"n", r.n}, {"m", r.m}}},
              {"cliques", cliques_json(r.cliques)},
              {"census", counts_json(r.census)},
              {"elapsed_us", r.elapsed_us},
              {"flags", r.flags}};
}

CliqueReport report_from(const json& j) {
  CliqueReport r;
  r.algorithm = j.at("algorithm").get<std::string>();
  r.n = j.at("graph").at("n").get<std::size_t>();
  r.m = j.at("graph").at("m").get<std::size_t>();
  r.cliques = cliques_from(j.at("cliques"));
  r.census = counts_from(j.at("census"));
  r.elapsed_us = j.at("elapsed_us").get<std::int64_t>();
  r.flags = j.at("flags").get<std::vector<std::string>>();
  return r;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

template <typename Fn>
auto parse_json(std::string_view text, Fn&& build) {
  try {
    return build(json::parse(text));
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid report JSON: ") + e.what());
  }
}

}  // namespace

std::string write_report_json(const CliqueReport& report) { return dump(report_json(report)); }

std::string write_report_json(const DiffReport& report) {
  json rows = json::array();
  json witnesses = json::array();
  for (const auto& row : report.rows) {
    json present = json::array();
    for (std::size_t i = 0; i < report.algorithms.size(); ++i)
      if (row.present[i]) present.push_back(report.algorithms[i]);
    rows.push_back({{"id", row.id},
                    {"clique", row.clique.vertices},
                    {"size", row.clique.size()},
                    {"present", present},
                    {"classification", row.classification},
                    {"failure", row.failure},
                    {"witness", row.witness}});
    if (row.witness) witnesses.push_back(row.clique.vertices);
  }
  json reports = json::array();
  for (const auto& r : report.reports) reports.push_back(report_json(r));
  return dump(json{{"algorithms", report.algorithms},
                   {"graph", {{"n", report.n}, {"m", report.m}}},
                   {"min_size", report.min_size},
                   {"classifier", report.classifier},
                   {"reports", reports},
                   {"rows", rows},
                   {"witnesses", witnesses}});
}

std::string write_report_json(const MotifCensus& census) {
  return dump(json{{"cycles", counts_json(census.cycles)},
                   {"chains", counts_json(census.chains)},
                   {"stars", counts_json(census.stars)}});
}

CliqueReport read_clique_report_json(std::string_view text) {
  return parse_json(text, [](const json& j) { return report_from(j); });
}

DiffReport read_diff_report_json(std::string_view text) {
  return parse_json(text, [](const json& j) {
    DiffReport d;
    d.algorithms = j.at("algorithms").get<std::vector<std::string>>();
    d.n = j.at("graph").at("n").get<std::size_t>();
    d.m = j.at("graph").at("m").get<std::size_t>();
    d.min_size = j.at("min_size").get<std::size_t>();
    d.classifier = j.at("classifier").get<std::string>();
    for (const auto& r : j.at("reports")) d.reports.push_back(report_from(r));
    for (const auto& r : j.at("rows")) {
      DiffRow row;
      row.id = r.at("id").get<std::size_t>();
      row.clique = Clique(r.at("clique").get<std::vector<VertexId>>());
      const auto present = r.at("present").get<std::vector<std::string>>();
      for (const auto& a : d.algorithms)
        row.present.push_back(std::find(present.begin(), present.end(), a) != present.end());
      row.classification = r.at("classification").get<std::string>();
      row.failure = r.at("failure").get<std::string>();
      row.witness = r.at("witness").get<bool>();
      d.rows.push_back(std::move(row));
    }
    return d;
  });
}

MotifCensus read_motif_census_json(std::string_view text) {
  return parse_json(text, [](const json& j) {
    MotifCensus m;
    m.cycles = counts_from(j.at("cycles"));
    m.chains = counts_from(j.at("chains"));
    m.stars = counts_from(j.at("stars"));
    return m;
  });
}

}  // namespace cliquearch
