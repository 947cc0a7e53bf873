#include <random>

#include "cdcrit/families.hpp"
#include "cdcrit/gamma.hpp"
#include "test_util.hpp"

using namespace cdcrit;

namespace {

Graph random_connected(std::mt19937_64& rng, int n, int pct) {
  while (true) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (static_cast<int>(rng() % 100) < pct) e.push_back({u, v});
    Graph g = Graph::build(n, e);
    if (is_connected(g)) return g;
  }
}

}  // namespace

TEST_CASE("is_cds") {
  Graph c6 = cycle_graph(6);
  CHECK(is_cds(c6, VertexSet(6, {0, 1, 2, 3})));
  CHECK_FALSE(is_cds(c6, VertexSet(6, {0, 1, 2})));
  CHECK_FALSE(is_cds(c6, VertexSet(6, {0, 1, 3, 4})));
  CHECK_THROWS_AS(is_cds(c6, VertexSet(6)), Error);
}

TEST_CASE("small values") {
  CHECK(gamma_c(path_graph(5)).gamma_c == 3);
  CHECK(gamma_c(path_graph(5)).witness == VertexSet(5, {1, 2, 3}));
  CHECK(gamma_c(star_graph(5)).gamma_c == 1);
  CHECK(gamma_c(cycle_graph(6)).gamma_c == 4);
  CHECK(gamma_c(complete_graph(4)).gamma_c == 1);
  CHECK(gamma_c(gen_f(1, 2, 2).graph).gamma_c == 7);
  auto one = gamma_c(Graph(1));
  CHECK(one.gamma_c == 1);
  CHECK(one.witness == VertexSet(1, {0}));
  CHECK(gamma_c(complete_graph(2)).gamma_c == 1);
  CHECK_THROWS_AS(gamma_c(Graph(2)), Error);
}

TEST_CASE("witness is the lexicographically least minimum set") {
  auto r = gamma_c(cycle_graph(6), true);
  REQUIRE(r.all_min_sets.has_value());
  CHECK(r.all_min_sets->size() == 6);
  CHECK(r.witness == r.all_min_sets->front());
  CHECK(r.witness == VertexSet(6, {0, 1, 2, 3}));
}

TEST_CASE("reference table over connected graphs up to 7 vertices") {
  for (const auto& row : testutil::read_table("atlas_reference.txt")) {
    Graph g = from_graph6(row[0]);
    INFO(row[0]);
    auto r = gamma_c(g);
    CHECK(r.gamma_c == std::stoi(row[1]));
    CHECK(is_cds(g, r.witness));
  }
}

TEST_CASE("solver paths agree with the brute-force oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 3 + static_cast<int>(rng() % 12);
    Graph g = random_connected(rng, n, 20 + static_cast<int>(rng() % 40));
    auto brute = gamma_c_bruteforce(g);
    auto word = gamma_c(g, true, SolverPath::Word);
    auto general = gamma_c(g, true, SolverPath::General);
    REQUIRE(word.gamma_c == brute.gamma_c);
    CHECK(general.gamma_c == brute.gamma_c);
    CHECK(word.witness == brute.witness);
    CHECK(general.witness == brute.witness);
    CHECK(*word.all_min_sets == *general.all_min_sets);
    CHECK(*word.all_min_sets == cds_of_size(g, brute.gamma_c));
  }
}

TEST_CASE("enumeration matches subset scan") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + static_cast<int>(rng() % 7);
    Graph g = random_connected(rng, n, 40);
    for (int size = 1; size <= n; ++size) {
      std::vector<VertexSet> expect;
      for (std::uint64_t m = 1; m < (1ull << n); ++m)
        if (std::popcount(m) == size) {
          VertexSet s = VertexSet::from_mask(n, m);
          if (is_cds(g, s)) expect.push_back(s);
        }
      std::sort(expect.begin(), expect.end(), LexLess{});
      CHECK(cds_of_size(g, size) == expect);
      int seen = 0;
      for_each_cds(g, size, [&](const VertexSet&) { return ++seen < 1000000; }, SolverPath::General);
      CHECK(seen == static_cast<int>(expect.size()));
      CHECK(has_cds_at_most(g, size) == (size >= gamma_c(g).gamma_c));
    }
  }
}

TEST_CASE("early stop and predicate search") {
  Graph c6 = cycle_graph(6);
  int calls = 0;
  CHECK_FALSE(for_each_cds(c6, 4, [&](const VertexSet&) { return ++calls < 2; }));
  CHECK(calls == 2);
  auto hit = find_cds(c6, 5, [](const VertexSet& s) { return s.contains(5) && s.contains(2); });
  REQUIRE(hit.has_value());
  CHECK(hit->size() == 4);
  CHECK_FALSE(find_cds(c6, 3, [](const VertexSet&) { return true; }).has_value());
}

TEST_CASE("adding an edge never raises gamma_c") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_connected(rng, 9, 30);
    int k = gamma_c(g).gamma_c;
    for (auto [u, v] : g.non_edges()) CHECK(gamma_c(add_edge(g, u, v)).gamma_c <= k);
  }
}

TEST_CASE("general path beyond one word") {
  Graph c = cycle_graph(70);
  auto r = gamma_c(c, false, SolverPath::General);
  CHECK(r.gamma_c == 68);
  Graph p = join(complete_graph(1), path_graph(80));
  CHECK(gamma_c(p).gamma_c == 1);
}
