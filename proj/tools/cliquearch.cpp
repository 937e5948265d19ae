// cliquearch: maximal-clique detection, cross-algorithm comparison and
// motif census from the command line.
//
// Exit codes: 0 success, 1 usage or parse error, 2 algorithm disagreement
// in bench, 3 dataset or size-guard error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cliquearch/enumeration.hpp"
#include "cliquearch/errors.hpp"
#include "cliquearch/generators.hpp"
#include "cliquearch/harness.hpp"
#include "cliquearch/io.hpp"
#include "cliquearch/motifs.hpp"

namespace ca = cliquearch;

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kDisagreement = 2, kGuard = 3 };

struct InputOptions {
  std::string path;
  std::string format;

  ca::Graph load() const {
    const auto fmt = format.empty() ? ca::format_for_path(path) : ca::parse_format(format);
    if (fmt == ca::GraphFormat::csv) {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw ca::ParseError("cannot open '" + path + "'");
      std::ostringstream buf;
      buf << in.rdbuf();
      auto parsed = ca::parse_adjacency_csv(buf.str());
      if (parsed.asymmetric)
        std::cerr << "warning: adjacency matrix is asymmetric; symmetrized by logical OR\n";
      return std::move(parsed.graph);
    }
    return ca::read_graph(path, fmt);
  }
};

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--input,-i", in.path, "Graph file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--format,-f", in.format, "edgelist, dimacs or csv (default: from extension)")
      ->check(CLI::IsMember({"edgelist", "dimacs", "csv"}));
}

std::vector<std::string> split_ids(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void print_cliques(const ca::CliqueReport& r, const ca::Graph& g) {
  std::cout << r.algorithm << ": n=" << r.n << " m=" << r.m << " cliques=" << r.cliques.size()
            << "\n";
  for (const auto& c : r.cliques) {
    std::cout << c.size() << ":";
    for (auto v : c.vertices) std::cout << " " << g.name(v);
    std::cout << "\n";
  }
}

void print_census(const ca::Census& census) {
  std::cout << "size\tcount\n";
  for (const auto& [size, count] : census) std::cout << size << "\t" << count << "\n";
}

void print_counts(const char* title, const ca::MotifCounts& counts) {
  std::cout << title << ":";
  if (counts.empty()) std::cout << " none";
  for (const auto& [k, v] : counts) std::cout << " " << k << ":" << v;
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal-clique detection and algorithm comparison"};
  app.require_subcommand(1);

  InputOptions detect_in;
  std::string detect_algo = "bk_pivot";
  std::size_t detect_min = 1;
  bool detect_json = false;
  auto* detect = app.add_subcommand("detect", "List maximal cliques");
  add_input(detect, detect_in);
  detect->add_option("--algo,-a", detect_algo, "Algorithm id");
  detect->add_option("--min-size,-k", detect_min, "Smallest clique reported");
  detect->add_flag("--json", detect_json, "Emit the JSON report");

  InputOptions census_in;
  std::string census_algo = "bk_pivot";
  std::size_t census_min = 1;
  bool census_json = false;
  auto* census = app.add_subcommand("census", "Histogram of maximal clique sizes");
  add_input(census, census_in);
  census->add_option("--algo,-a", census_algo, "Algorithm id");
  census->add_option("--min-size,-k", census_min, "Smallest clique counted");
  census->add_flag("--json", census_json, "Emit the JSON report");

  InputOptions diff_in;
  std::string diff_algos = "bk_basic,bk_pivot,bk_degeneracy";
  std::size_t diff_min = 1;
  bool diff_oracle = false;
  bool diff_json = false;
  auto* diff = app.add_subcommand("diff", "Compare algorithms on one graph");
  add_input(diff, diff_in);
  diff->add_option("--algos", diff_algos, "Comma-separated algorithm ids");
  diff->add_option("--min-size,-k", diff_min, "Smallest clique compared");
  diff->add_flag("--with-oracle", diff_oracle, "Add the subset-scan oracle as a participant");
  diff->add_flag("--json", diff_json, "Emit the JSON report");

  bool t1_historical = false;
  bool t1_json = false;
  std::size_t t1_min = 3;
  auto* t1 = app.add_subcommand("table1", "Method comparison on the Assyrian trade network");
  t1->add_flag("--with-historical", t1_historical, "Include the Harary-Ross reconstruction");
  t1->add_flag("--json", t1_json, "Emit the JSON report");
  t1->add_option("--min-size,-k", t1_min, "Smallest clique compared");

  std::string bench_gen;
  std::string bench_algos = "bk_pivot,bk_degeneracy";
  std::size_t bench_reps = 3;
  auto* bench = app.add_subcommand("bench", "Time algorithms on a generated graph");
  bench->add_option("--gen,-g", bench_gen, "Generator spec, e.g. moonmoser:k=5")->required();
  bench->add_option("--algos", bench_algos, "Comma-separated algorithm ids");
  bench->add_option("--reps,-r", bench_reps, "Repetitions per algorithm")
      ->check(CLI::PositiveNumber);

  InputOptions motifs_in;
  std::size_t motifs_len = 4;
  bool motifs_json = false;
  auto* motifs = app.add_subcommand("motifs", "Cycle, chain and star census");
  add_input(motifs, motifs_in);
  motifs->add_option("--max-len,-L", motifs_len, "Longest cycle/chain counted (1..8)");
  motifs->add_flag("--json", motifs_json, "Emit the JSON census");

  std::string gen_spec;
  std::string gen_out;
  std::string gen_format;
  auto* gen = app.add_subcommand("gen", "Write a generated graph to a file");
  gen->add_option("--gen,-g", gen_spec, "Generator spec")->required();
  gen->add_option("--out,-o", gen_out, "Output file")->required();
  gen->add_option("--format,-f", gen_format, "edgelist, dimacs or csv (default: from extension)")
      ->check(CLI::IsMember({"edgelist", "dimacs", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*detect) {
      const auto g = detect_in.load();
      const auto r = ca::run_algorithm(detect_algo, g, detect_min);
      if (detect_json)
        std::cout << ca::write_report_json(r);
      else
        print_cliques(r, g);
    } else if (*census) {
      const auto g = census_in.load();
      const auto r = ca::run_algorithm(census_algo, g, census_min);
      if (census_json)
        std::cout << ca::write_report_json(r);
      else
        print_census(ca::clique_census(r));
    } else if (*diff) {
      const auto g = diff_in.load();
      auto algos = split_ids(diff_algos);
      if (diff_oracle) algos.push_back("oracle");
      const auto d = ca::run_comparison(g, algos, diff_min);
      std::cout << (diff_json ? ca::write_report_json(d) : ca::render_diff_table(d, g));
    } else if (*t1) {
      const auto g = ca::load_assyrian();
      const auto d =
          ca::run_comparison(g, ca::table1_algorithms(t1_historical), t1_min);
      std::cout << (t1_json ? ca::write_report_json(d) : ca::render_diff_table(d, g));
    } else if (*bench) {
      const auto result = ca::bench(bench_gen, split_ids(bench_algos), bench_reps);
      std::cout << ca::render_bench_counts(result);
      std::cerr << ca::render_bench_timings(result);
    } else if (*motifs) {
      const auto g = motifs_in.load();
      const auto m = ca::motif_census(g, motifs_len);
      if (motifs_json) {
        std::cout << ca::write_report_json(m);
      } else {
        print_counts("cycles", m.cycles);
        print_counts("chains", m.chains);
        print_counts("stars", m.stars);
      }
    } else if (*gen) {
      const auto g = ca::from_spec(gen_spec);
      const auto fmt = gen_format.empty() ? ca::format_for_path(gen_out) : ca::parse_format(gen_format);
      std::ofstream out(gen_out, std::ios::binary);
      if (!out) throw ca::ParseError("cannot write '" + gen_out + "'");
      out << ca::write_graph(g, fmt);
      std::cout << "wrote " << gen_out << ": n=" << g.order() << " m=" << g.size() << "\n";
    }
  } catch (const ca::DisagreementError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDisagreement;
  } catch (const ca::GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGuard;
  } catch (const ca::DatasetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
