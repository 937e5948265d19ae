#include <doctest.h>

#include "cliquearch/enumeration.hpp"
#include "cliquearch/errors.hpp"
#include "cliquearch/generators.hpp"
#include "cliquearch/harness.hpp"
#include "cliquearch/io.hpp"
#include "support.hpp"

using namespace cliquearch;

namespace {

const std::vector<std::string> kModern = {"bk_basic", "bk_pivot", "makino2004", "ostergard2001",
                                          "bk_degeneracy"};

}  // namespace

TEST_CASE("algorithm ids and aliases") {
  CHECK(resolve_algorithm("bk_pivot") == "bk_pivot");
  CHECK(resolve_algorithm("eppstein2010") == "bk_degeneracy");
  CHECK(resolve_algorithm("census") == "makino2004");
  CHECK(resolve_algorithm("osertgard2001") == "ostergard2001");
  CHECK(resolve_algorithm("harary_ross") == "harary1957");
  try {
    resolve_algorithm("quantum");
    FAIL("expected UsageError");
  } catch (const UsageError& e) {
    const std::string what = e.what();
    CHECK(what.find("quantum") != std::string::npos);
    for (const auto& id : algorithm_ids()) CHECK(what.find(id) != std::string::npos);
  }
}

TEST_CASE("every algorithm runs on a small graph") {
  const Graph g = named(NamedKind::complete, 4);
  for (const auto& id : algorithm_ids()) {
    CAPTURE(id);
    const auto r = run_algorithm(id, g, 1);
    CHECK(r.algorithm == id);
    CHECK(r.cliques == std::vector<Clique>{{0, 1, 2, 3}});
  }
  CHECK_THROWS_AS(run_algorithm("oracle", named(NamedKind::empty, 30), 1), GuardError);
}

TEST_CASE("comparison on a path") {
  const auto d = run_comparison(named(NamedKind::path, 4), {"bk_pivot", "bk_degeneracy"}, 1);
  CHECK(d.classifier == "oracle");
  REQUIRE(d.rows.size() == 3);
  for (std::size_t i = 0; i < d.rows.size(); ++i) {
    CHECK(d.rows[i].id == i + 1);
    CHECK(d.rows[i].classification == "true_clique");
    CHECK(d.rows[i].present == std::vector<bool>{true, true});
  }
  CHECK(d.witnesses().empty());
  for (const auto& r : d.reports) CHECK(r.elapsed_us == 0);
  CHECK_THROWS_AS(run_comparison(named(NamedKind::path, 4), {"bk_pivot"}, 1), UsageError);
}

TEST_CASE("modern algorithms never produce witnesses") {
  for (const auto& [name, g] : testing::random_corpus(30, 4, 40, 123)) {
    CAPTURE(name);
    const auto d = run_comparison(g, kModern, 2);
    CHECK(d.witnesses().empty());
    for (const auto& row : d.rows) CHECK(row.classification == "true_clique");
    CHECK(d.classifier == (g.order() <= 25 ? "oracle" : "predicates"));
  }
}

TEST_CASE("adding the oracle keeps the true rows") {
  for (const auto& [name, g] : testing::random_corpus(20, 4, 14, 9)) {
    const auto a = run_comparison(g, {"bk_pivot", "bk_degeneracy"}, 1);
    const auto b = run_comparison(g, {"bk_pivot", "bk_degeneracy", "oracle"}, 1);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      CHECK(a.rows[i].clique == b.rows[i].clique);
      CHECK(a.rows[i].id == b.rows[i].id);
    }
  }
}

TEST_CASE("historical spurious sets become witnesses") {
  // Octahedron: the reconstruction emits the whole vertex set.
  std::vector<Edge> edges;
  for (VertexId u = 0; u < 6; ++u)
    for (VertexId v = u + 1; v < 6; ++v)
      if (u / 2 != v / 2) edges.emplace_back(u, v);
  const Graph g = from_edges(6, edges);
  const auto d = run_comparison(g, {"bk_pivot", "harary1957"}, 3);
  const auto w = d.witnesses();
  REQUIRE_FALSE(w.empty());
  bool saw_spurious = false;
  for (const auto* row : w)
    if (row->classification == "spurious") {
      saw_spurious = true;
      CHECK(row->id == 0);
      CHECK(row->failure == "not_clique");
      CHECK(row->present == std::vector<bool>{false, true});
    }
  CHECK(saw_spurious);
  CHECK(std::count_if(d.rows.begin(), d.rows.end(),
                      [](const DiffRow& r) { return r.classification == "true_clique"; }) == 8);
}

TEST_CASE("table1 on the bundled network") {
  const auto d = table1(true);
  CHECK(d.algorithms == table1_algorithms(true));
  CHECK(d.algorithms.front() == "harary1957");
  REQUIRE(d.rows.size() == 6);
  std::vector<std::size_t> sizes;
  for (const auto& row : d.rows) {
    sizes.push_back(row.clique.size());
    CHECK(row.classification == "true_clique");
    for (bool p : row.present) CHECK(p);
  }
  CHECK(sizes == std::vector<std::size_t>{5, 4, 3, 3, 3, 3});
  CHECK(table1_algorithms(false).size() == 5);
}

TEST_CASE("rendering is byte-stable") {
  const Graph g = load_assyrian();
  const auto a = render_diff_table(table1(true), g);
  const auto b = render_diff_table(table1(true), g);
  CHECK(a == b);
  CHECK(a.find("classifier=oracle") != std::string::npos);
  CHECK(write_report_json(table1(true)) == write_report_json(table1(true)));
}

TEST_CASE("diff report JSON round-trip") {
  const auto d = run_comparison(gnp(14, 0.5, 3), {"bk_pivot", "harary1957", "oracle"}, 2);
  CHECK(read_diff_report_json(write_report_json(d)) == d);
}

TEST_CASE("bench") {
  const auto r = bench("moonmoser:k=5", {"bk_pivot", "bk_degeneracy", "makino2004"}, 2);
  CHECK(r.n == 15);
  CHECK(r.repetitions == 2);
  REQUIRE(r.rows.size() == 3);
  for (const auto& row : r.rows) {
    CHECK(row.cliques == 243);
    CHECK(row.census == Census{{5, 243}});
  }
  const auto again = bench("moonmoser:k=5", {"bk_pivot", "bk_degeneracy", "makino2004"}, 2);
  CHECK(render_bench_counts(r) == render_bench_counts(again));
  CHECK_FALSE(render_bench_timings(r).empty());
}

TEST_CASE("bench reports disagreement") {
  // The octahedron core makes the reconstruction diverge.
  CHECK_THROWS_AS(bench("gnp:n=12,p=0.5,seed=4", {"bk_pivot", "harary1957"}, 1),
                  DisagreementError);
}
