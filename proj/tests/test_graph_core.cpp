#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "cdcrit/canonical.hpp"
#include "cdcrit/census.hpp"
#include "cdcrit/graph.hpp"
#include "cdcrit/graph6.hpp"
#include "test_util.hpp"

using namespace cdcrit;
using testutil::edges_graph;

TEST_CASE("vertex set basics") {
  VertexSet s(70, {0, 5, 64, 69});
  CHECK(s.size() == 4);
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(63));
  CHECK(s.first() == 0);
  CHECK(s.next(5) == 64);
  CHECK(s.next(69) == -1);
  CHECK(s.to_string() == "{0,5,64,69}");
  CHECK(s.complement().size() == 66);
  VertexSet t(70, {5, 6});
  CHECK((s & t).to_vector() == std::vector<Vertex>{5});
  CHECK((s - t).size() == 3);
  CHECK(lex_less(VertexSet(8, {0, 3}), VertexSet(8, {0, 4})));
  CHECK(lex_less(VertexSet(8, {0}), VertexSet(8, {0, 1})));
  CHECK_THROWS_AS(s.insert(70), Error);
}

TEST_CASE("graph build rejects malformed input") {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("no error");
    return Errc::Precondition;
  };
  CHECK(code([] { Graph::build(3, {{0, 3}}); }) == Errc::VertexOutOfRange);
  CHECK(code([] { Graph::build(3, {{1, 1}}); }) == Errc::SelfLoop);
  CHECK(code([] { Graph::build(3, {{0, 1}, {1, 0}}); }) == Errc::DuplicateEdge);
  Graph p3 = path_graph(3);
  CHECK(code([&] { add_edge(p3, 0, 1); }) == Errc::EdgePresent);
}

TEST_CASE("basic operations") {
  Graph p4 = path_graph(4);
  CHECK(p4.size() == 3);
  Graph q = add_edge(p4, 0, 3);
  CHECK(q == cycle_graph(4));
  CHECK(remove_edge(q, 0, 3) == p4);
  // complement of P4 is P4
  CHECK(isomorphic(complement(p4), p4));
  CHECK(complement(complete_graph(5)).size() == 0);

  Graph c6 = cycle_graph(6);
  auto ind = induced(c6, VertexSet(6, {0, 1, 2, 4}));
  CHECK(ind.graph.order() == 4);
  CHECK(ind.graph.size() == 2);
  CHECK(ind.old_to_new[3] == -1);
  CHECK(ind.new_to_old[3] == 4);

  CHECK(diameter(c6) == 3);
  CHECK(diameter(path_graph(5)) == 4);
  CHECK_FALSE(diameter(disjoint_union(complete_graph(2), complete_graph(1))).has_value());
  CHECK(distance(c6, 0, 3) == 3);
  CHECK_FALSE(distance(Graph(2), 0, 1).has_value());
  CHECK(components(disjoint_union(path_graph(3), cycle_graph(4))).size() == 2);
  CHECK(is_connected_subset(c6, VertexSet(6, {5, 0, 1})));
  CHECK_FALSE(is_connected_subset(c6, VertexSet(6, {0, 2})));
  CHECK(star_graph(5).min_degree() == 1);
}

TEST_CASE("labels do not affect equality") {
  Graph a = path_graph(3).with_labels({"x", "y", "z"});
  CHECK(a == path_graph(3));
  CHECK(a.find_label("y") == 1);
  CHECK(a.find_label("w") == -1);
}

TEST_CASE("join expressions") {
  // K1 v K2 v K1 = K4 minus an edge
  Graph d = join(JoinExpr::chain({complete_graph(1), complete_graph(2), complete_graph(1)}));
  CHECK(d.order() == 4);
  CHECK(d.size() == 5);
  CHECK_FALSE(d.adjacent(0, 3));

  Graph kn = join(complete_graph(2), complete_graph(3));
  CHECK(kn == complete_graph(5));

  JoinExpr x;
  int a = x.add_vertex("a");
  int b = x.add(path_graph(3));
  x.restricted(a, b, VertexSet(3, {0, 2}));
  Graph r = join(x);
  CHECK(r.adjacent(0, 1));
  CHECK(r.adjacent(0, 3));
  CHECK_FALSE(r.adjacent(0, 2));
  CHECK(r.label(0) == "a");

  JoinExpr y;
  y.add_clique(2, "k");
  CHECK_THROWS_AS(y.full(0, 0), Error);
  y.add(path_graph(2));
  CHECK_THROWS_AS(y.restricted(0, 1, VertexSet(3, {0})), Error);
  CHECK_THROWS_AS(y.restricted(0, 1, VertexSet(2)), Error);
  CHECK_THROWS_AS(y.full(0, 2), Error);
}

TEST_CASE("graph6 encodes known strings") {
  CHECK(to_graph6(complete_graph(3)) == "Bw");
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(from_graph6(">>graph6<<Bw\n") == complete_graph(3));
  CHECK_THROWS_AS(from_graph6("B"), Error);
  CHECK_THROWS_AS(from_graph6("B~"), Error);
  // long-form header
  Graph big = cycle_graph(70);
  CHECK(from_graph6(to_graph6(big)) == big);
}

TEST_CASE("graph6 round trip over the n<=7 atlas") {
  std::ifstream in(testutil::data_path("graph_atlas_n7.g6"));
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Graph g = from_graph6(line);
    REQUIRE(to_graph6(g) == line);
    ++count;
  }
  CHECK(count == 1252);
}

TEST_CASE("canonical form agrees with the permutation minimum") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) e.push_back({u, v});
    Graph g = Graph::build(n, e);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h = permute(g, perm);
    CHECK(canonical_graph6(g) == canonical_graph6(h));
    CHECK(testutil::brute_canonical(canonical_form(g).graph) == testutil::brute_canonical(g));
    auto cf = canonical_form(g);
    CHECK(permute(g, cf.labeling) == cf.graph);
  }
}

TEST_CASE("canonical forms separate non-isomorphic graphs") {
  std::ifstream in(testutil::data_path("graph_atlas_n7.g6"));
  auto all = read_graph6_stream(in);
  std::set<std::string> keys;
  for (const auto& g : all) keys.insert(canonical_graph6(g));
  CHECK(keys.size() == all.size());
}

TEST_CASE("automorphism generators are automorphisms") {
  Graph p = join(cycle_graph(5), Graph(1));
  auto cf = canonical_form(p);
  CHECK_FALSE(cf.automorphisms.empty());
  for (const auto& a : cf.automorphisms) CHECK(permute(p, a) == p);
}

TEST_CASE("coloured canonical form respects colours") {
  Graph p3 = path_graph(3);
  CHECK(canonical_form(p3, {1, 0, 0}).graph == canonical_form(p3, {0, 0, 1}).graph);
  CHECK_FALSE(canonical_form(p3, {1, 0, 0}).graph == canonical_form(p3, {0, 1, 0}).graph);
}

TEST_CASE("census counts of connected graphs") {
  const std::vector<std::size_t> expected = {1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) CHECK(connected_keys(n).size() == expected[n - 1]);
  auto g7 = census(7);
  CHECK(g7.size() == 996);
  for (const auto& g : census(5)) CHECK(is_connected(g));
}

TEST_CASE("census agrees with the atlas stream") {
  std::ifstream in(testutil::data_path("graph_atlas_n7.g6"));
  auto stream = census_stream(in);
  auto built = census(7);
  REQUIRE(stream.size() == built.size());
  std::multiset<std::string> a, b;
  for (const auto& g : stream) a.insert(canonical_graph6(g));
  for (const auto& g : built) b.insert(canonical_graph6(g));
  CHECK(a == b);
}

TEST_CASE("census classes match brute-force classes for n<=5") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    std::set<std::string> classes;
    for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
      std::vector<Edge> e;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) e.push_back(pairs[i]);
      Graph g = Graph::build(n, e);
      if (is_connected(g)) classes.insert(testutil::brute_canonical(g));
    }
    CHECK(classes.size() == connected_keys(n).size());
  }
}

TEST_CASE("census predicate and lower bound") {
  auto trees = census(6, [](const Graph& g) { return g.size() == g.order() - 1; }, 6);
  CHECK(trees.size() == 6);
  auto dedup = canonical_dedup({path_graph(4), permute(path_graph(4), {2, 0, 3, 1}), star_graph(3)});
  CHECK(dedup.size() == 2);
}
