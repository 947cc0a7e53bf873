#include <random>

#include "cdcrit/canonical.hpp"
#include "cdcrit/census.hpp"
#include "cdcrit/decomposition.hpp"
#include "cdcrit/families.hpp"
#include "cdcrit/matching.hpp"
#include "test_util.hpp"

using namespace cdcrit;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return Errc::Precondition;
}

void check_is_matching(const Graph& g, const MatchingResult& m) {
  VertexSet used(g.order());
  for (auto [u, v] : m.edges) {
    CHECK(u < v);
    CHECK(g.adjacent(u, v));
    CHECK_FALSE(used.contains(u));
    CHECK_FALSE(used.contains(v));
    used.insert(u);
    used.insert(v);
  }
  CHECK(static_cast<int>(m.edges.size()) == m.size);
  CHECK(m.is_perfect == (2 * m.size == g.order()));
}

}  // namespace

TEST_CASE("small matchings") {
  CHECK(max_matching(cycle_graph(6)).is_perfect);
  CHECK(max_matching(cycle_graph(6)).size == 3);
  CHECK(max_matching(star_graph(3)).size == 1);
  CHECK(max_matching(cycle_graph(5)).size == 2);
  CHECK(max_matching(Graph(3)).size == 0);
  // Petersen graph has a perfect matching
  Graph pet = Graph::build(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  CHECK(max_matching(pet).is_perfect);
  CHECK(matching_number(cycle_graph(6), VertexSet(6, {0})) == 2);
}

TEST_CASE("blossom agrees with exhaustive branching") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    int pct = 10 + static_cast<int>(rng() % 60);
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (static_cast<int>(rng() % 100) < pct) e.push_back({u, v});
    Graph g = Graph::build(n, e);
    auto m = max_matching(g);
    check_is_matching(g, m);
    CHECK(m.size == max_matching_bruteforce(g));
  }
}

TEST_CASE("factor-criticality by definition") {
  auto c5 = is_factor_critical(cycle_graph(5), 1);
  CHECK(c5.holds);
  auto k13 = is_factor_critical(star_graph(3), 0);
  CHECK_FALSE(k13.holds);
  REQUIRE(k13.counterexample_set.has_value());
  CHECK(k13.counterexample_set->empty());
  REQUIRE(k13.favaron_witness.has_value());
  CHECK(k13.witness_odd_components == 3);
  CHECK(is_factor_critical(complete_graph(4), 2).holds);
  CHECK_FALSE(is_factor_critical(cycle_graph(6), 2).holds);
}

TEST_CASE("ell = 0 is a perfect matching test") {
  for (auto key : connected_keys(6)) {
    Graph g = detail::unpack_key(key);
    CHECK(is_factor_critical(g, 0).holds == max_matching(g).is_perfect);
  }
}

TEST_CASE("parameter errors") {
  CHECK(code_of([] { is_factor_critical(cycle_graph(5), 3); }) == Errc::BadParameter);
  CHECK(code_of([] { favaron_check(cycle_graph(5), -1); }) == Errc::BadParameter);
  CHECK(code_of([] { is_factor_critical(cycle_graph(5), 0); }) == Errc::ParityMismatch);
  CHECK(code_of([] { favaron_check(cycle_graph(6), 2); }) == Errc::DegreeTooSmall);
  CHECK(code_of([] { favaron_check(path_graph(4), 1); }) == Errc::DegreeTooSmall);
}

TEST_CASE("odd-component condition scopes") {
  // K4 - v leaves K3, an odd component; the set {v} is not a cut set
  Graph k4 = complete_graph(4);
  auto all = favaron_check(k4, 1, FavaronScope::AllSubsets);
  CHECK_FALSE(all.holds);
  CHECK(all.favaron_witness->size() == 1);
  CHECK(favaron_check(k4, 1, FavaronScope::CutSets).holds);
  CHECK(favaron_violation(k4, VertexSet(4, {0}), 1));
  CHECK_FALSE(favaron_violation(k4, VertexSet(4, {0, 1}), 2));
}

TEST_CASE("odd-component condition matches the definition up to 7 vertices") {
  int compared = 0;
  for (int n = 2; n <= 7; ++n)
    for (auto key : connected_keys(n)) {
      Graph g = detail::unpack_key(key);
      for (int ell = 0; ell <= 2; ++ell) {
        if ((n - ell) % 2 != 0 || g.min_degree() < ell + 1) continue;
        auto fav = favaron_check(g, ell);
        CHECK(fav.holds == is_factor_critical(g, ell).holds);
        if (!fav.holds) CHECK(favaron_violation(g, *fav.favaron_witness, ell));
        ++compared;
      }
    }
  CHECK(compared > 500);
}

TEST_CASE("witness sets of the generated families") {
  auto a = gen_a(3, 2);
  auto va = is_factor_critical(a.graph, 2);
  CHECK_FALSE(va.holds);
  CHECK(favaron_violation(a.graph, a.marks.at("S"), 2));
  CHECK(odd_components(a.graph, a.marks.at("S")) == 2);

  auto x = gen_x(3);
  CHECK_FALSE(is_factor_critical(x.graph, 1).holds);
  CHECK(odd_components(x.graph, x.marks.at("A")) == 4);
  CHECK(favaron_violation(x.graph, x.marks.at("A"), 1));

  auto g5 = gen_g5(2, 2);
  CHECK_FALSE(is_factor_critical(g5.graph, 1).holds);
  CHECK(odd_components(g5.graph, g5.marks.at("S")) == 4);
}

TEST_CASE("the odd-order 3-critical construction is factor-critical") {
  // Computed value; see the reference table.
  for (int n = 3; n <= 4; ++n) {
    auto f = gen_fig4(n);
    CHECK(f.graph.order() % 2 == 1);
    CHECK(is_factor_critical(f.graph, 1).holds);
    CHECK(favaron_check(f.graph, 1).holds);
  }
}
