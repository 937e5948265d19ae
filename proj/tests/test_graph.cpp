#include <doctest.h>

#include "cliquearch/errors.hpp"
#include "cliquearch/generators.hpp"
#include "cliquearch/graph.hpp"
#include "support.hpp"

using namespace cliquearch;
using testing::graph_of;

namespace {

std::vector<VertexId> ids(std::initializer_list<VertexId> v) { return v; }

}  // namespace

TEST_CASE("from_edges builds symmetric adjacency") {
  const Graph tri = graph_of(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(tri.order() == 3);
  CHECK(tri.size() == 3);
  for (VertexId u = 0; u < 3; ++u)
    for (VertexId v = 0; v < 3; ++v) CHECK(tri.adjacent(u, v) == (u != v));

  const Graph empty = graph_of(2, {});
  CHECK(empty.size() == 0);
  CHECK_FALSE(empty.adjacent(0, 1));
}

TEST_CASE("from_edges collapses duplicate and reversed edges") {
  const Graph g = graph_of(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(g.size() == 1);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK(g.degree(2) == 0);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("from_edges rejects out-of-range endpoints and self-loops") {
  std::vector<Edge> bad = {{0, 3}};
  CHECK_THROWS_WITH_AS(from_edges(3, bad), doctest::Contains("(0, 3)"), GraphError);
  std::vector<Edge> loop = {{1, 1}};
  CHECK_THROWS_WITH_AS(from_edges(3, loop), doctest::Contains("self-loop"), GraphError);
}

TEST_CASE("labels must be total and ordered") {
  std::vector<Edge> e = {{0, 1}};
  CHECK_NOTHROW(from_edges(2, e, std::vector<std::string>{"a", "b"}));
  CHECK_THROWS_AS(from_edges(2, e, std::vector<std::string>{"b", "a"}), GraphError);
  CHECK_THROWS_AS(from_edges(2, e, std::vector<std::string>{"a"}), GraphError);
}

TEST_CASE("labeled construction assigns ids by label order") {
  std::vector<std::pair<std::string, std::string>> edges = {{"zed", "amy"}, {"bob", "zed"}};
  const Graph g = from_labeled_edges(edges);
  REQUIRE(g.labels());
  CHECK(g.labels()->labels() == std::vector<std::string>{"amy", "bob", "zed"});
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 1));
  CHECK(*g.labels()->find("bob") == 1);
  CHECK_FALSE(g.labels()->find("nobody"));
}

TEST_CASE("is_clique") {
  const Graph tri = named(NamedKind::complete, 3);
  const Graph path = named(NamedKind::path, 3);
  CHECK(is_clique(tri, ids({0, 1, 2})));
  CHECK_FALSE(is_clique(path, ids({0, 2})));
  CHECK(is_clique(path, ids({})));
  CHECK(is_clique(path, ids({1})));
  CHECK_THROWS_AS(is_clique(path, ids({0, 7})), GraphError);
}

TEST_CASE("is_maximal_clique") {
  const Graph tri = named(NamedKind::complete, 3);
  CHECK_FALSE(is_maximal_clique(tri, ids({0, 1})));
  CHECK(is_maximal_clique(tri, ids({0, 1, 2})));
  CHECK(is_maximal_clique(named(NamedKind::empty, 4), ids({3})));
  CHECK_FALSE(is_maximal_clique(named(NamedKind::path, 3), ids({0, 2})));
  CHECK_THROWS_AS(is_maximal_clique(tri, ids({3})), GraphError);
}

TEST_CASE("maximal implies clique on random subsets") {
  for (const auto& [name, g] : testing::random_corpus(30, 4, 10, 900)) {
    for (std::uint32_t mask = 0; mask < (1U << g.order()); mask += 7) {
      std::vector<VertexId> s;
      for (VertexId v = 0; v < g.order(); ++v)
        if (mask >> v & 1U) s.push_back(v);
      if (is_maximal_clique(g, s)) CHECK(is_clique(g, s));
    }
  }
}

TEST_CASE("induced_subgraph") {
  const Graph tri = named(NamedKind::complete, 3);
  auto sub = induced_subgraph(tri, ids({0, 1}));
  CHECK(sub.graph.order() == 2);
  CHECK(sub.graph.size() == 1);

  const Graph c5 = named(NamedKind::cycle, 5);
  sub = induced_subgraph(c5, ids({0, 1, 2}));
  CHECK(sub.graph.size() == 2);
  CHECK(sub.mapping == std::vector<VertexId>{0, 1, 2});

  const Graph g = gnp(9, 0.5, 3);
  sub = induced_subgraph(g, ids({0, 1, 2, 3, 4, 5, 6, 7, 8}));
  CHECK(sub.graph.edges() == g.edges());

  CHECK_THROWS_AS(induced_subgraph(tri, ids({5})), GraphError);
}

TEST_CASE("induced_subgraph edge count matches edges inside the set") {
  for (const auto& [name, g] : testing::random_corpus(20, 6, 12, 70)) {
    std::vector<VertexId> s;
    for (VertexId v = 0; v < g.order(); v += 2) s.push_back(v);
    std::size_t inside = 0;
    for (const auto& [u, v] : g.edges()) inside += (u % 2 == 0 && v % 2 == 0);
    CHECK(induced_subgraph(g, s).graph.size() == inside);
  }
}

TEST_CASE("induced_subgraph carries labels") {
  std::vector<std::pair<std::string, std::string>> edges = {{"a", "b"}, {"b", "c"}};
  const Graph g = from_labeled_edges(edges);
  const auto sub = induced_subgraph(g, ids({1, 2}));
  REQUIRE(sub.graph.labels());
  CHECK(sub.graph.labels()->labels() == std::vector<std::string>{"b", "c"});
}

TEST_CASE("canonicalize") {
  CHECK(canonicalize({Clique{2, 5}, Clique{0, 1, 3}, Clique{2, 5}}) ==
        std::vector<Clique>{Clique{0, 1, 3}, Clique{2, 5}});
  CHECK(canonicalize({}).empty());
  CHECK(canonicalize({Clique{0, 2}, Clique{0, 1}}) ==
        std::vector<Clique>{Clique{0, 1}, Clique{0, 2}});
}

TEST_CASE("canonicalize is idempotent and permutation-invariant") {
  std::vector<Clique> sets = {Clique{4},       Clique{0, 1, 2}, Clique{3, 5},    Clique{1, 2},
                              Clique{0, 1, 2}, Clique{2, 6, 7}, Clique{0, 9},    Clique{5}};
  const auto once = canonicalize(sets);
  CHECK(canonicalize(once) == once);
  for (std::uint32_t seed = 0; seed < 20; ++seed)
    CHECK(canonicalize(testing::shuffled(sets, seed)) == once);
}

TEST_CASE("Clique constructor sorts and deduplicates") {
  const Clique c{5, 1, 3, 1};
  CHECK(c.vertices == std::vector<VertexId>{1, 3, 5});
  CHECK(Clique{1, 3}.is_subset_of(c));
  CHECK_FALSE(Clique{1, 2}.is_subset_of(c));
}

TEST_CASE("filter_subsets drops nested sets") {
  const auto kept = filter_subsets({Clique{0, 1}, Clique{0, 1, 2}, Clique{3}, Clique{2, 3}});
  CHECK(kept == std::vector<Clique>{Clique{0, 1, 2}, Clique{2, 3}});
}

TEST_CASE("adjacency is symmetric with empty diagonal for generated graphs") {
  for (const auto& [name, g] : testing::random_corpus(25, 1, 40, 11)) {
    for (VertexId u = 0; u < g.order(); ++u) {
      CHECK_FALSE(g.adjacent(u, u));
      for (VertexId v = 0; v < g.order(); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
  }
}

TEST_CASE("VertexSet iteration crosses word boundaries") {
  VertexSet s(130);
  for (VertexId v : {0U, 63U, 64U, 127U, 129U}) s.set(v);
  CHECK(s.count() == 5);
  CHECK(s.to_vector() == std::vector<VertexId>{0, 63, 64, 127, 129});
  CHECK(s.next(64) == 127);
  CHECK(s.next(129) == VertexSet::npos);
  CHECK(VertexSet::full(130).count() == 130);
  CHECK((VertexSet::full(130) - s).count() == 125);
}
