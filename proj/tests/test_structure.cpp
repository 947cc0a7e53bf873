#include "cdcrit/canonical.hpp"
#include "cdcrit/census.hpp"
#include "cdcrit/families.hpp"
#include "cdcrit/structure.hpp"
#include "test_util.hpp"

using namespace cdcrit;

namespace {

// Tries every assignment of vertices to {none, X, X1, Y, Y1}.
bool brute_bad_subgraph(const Graph& g) {
  const int n = g.order();
  std::vector<int> part(n, 0);
  while (true) {
    std::vector<VertexSet> s(5, VertexSet(n));
    for (int v = 0; v < n; ++v) s[part[v]].insert(v);
    if (!s[1].empty() && !s[2].empty() && !s[3].empty() && !s[4].empty() &&
        is_bad_subgraph(g, s[1], s[2], s[3], s[4]))
      return true;
    int i = 0;
    while (i < n && part[i] == 4) part[i++] = 0;
    if (i == n) return false;
    ++part[i];
  }
}

}  // namespace

TEST_CASE("bad subgraph examples") {
  // P4: X={0}, X1={1}, Y1={2}, Y={3}
  auto p4 = find_bad_subgraph(path_graph(4));
  REQUIRE(p4.holds);
  CHECK(is_bad_subgraph(path_graph(4), p4.witness.at("X"), p4.witness.at("X1"), p4.witness.at("Y"),
                        p4.witness.at("Y1")));
  CHECK_FALSE(find_bad_subgraph(complete_graph(4)).holds);
  CHECK_FALSE(find_bad_subgraph(cycle_graph(5)).holds);
  CHECK_FALSE(is_bad_subgraph(path_graph(4), VertexSet(4, {0}), VertexSet(4, {1}), VertexSet(4, {2}),
                              VertexSet(4, {3})));
  CHECK_THROWS_AS(find_bad_subgraph(cycle_graph(20)), Error);
}

TEST_CASE("two cliques joined through their marked parts") {
  // X ∪ X1 and Y ∪ Y1 are cliques, X1 and Y1 are fully joined
  JoinExpr j;
  int x = j.add_clique(2, "x");
  int x1 = j.add_clique(2, "p");
  int y1 = j.add_clique(1, "q");
  int y = j.add_clique(3, "y");
  j.full(x, x1).full(x1, y1).full(y1, y);
  Graph g = join(j);
  auto v = find_bad_subgraph(g);
  REQUIRE(v.holds);
  for (const auto& name : {"X", "X1", "Y", "Y1"}) CHECK_FALSE(v.witness.at(name).empty());
}

TEST_CASE("bad subgraph search agrees with exhaustive assignment") {
  for (int n = 4; n <= 6; ++n)
    for (auto key : connected_keys(n)) {
      Graph g = detail::unpack_key(key);
      INFO(to_graph6(g));
      auto v = find_bad_subgraph(g);
      CHECK(v.holds == brute_bad_subgraph(g));
      if (v.holds)
        CHECK(is_bad_subgraph(g, v.witness.at("X"), v.witness.at("X1"), v.witness.at("Y"), v.witness.at("Y1")));
    }
}

TEST_CASE("end block rules") {
  auto b = default_b3_block();
  CHECK(is_b3_block(b.graph, b.head).holds);
  CHECK(is_b3_block(b.graph, b.head, B3Rule::WithHeadBound).holds);
  // C5 passes the two properties, but its head lies in a 3-vertex CDS
  CHECK(is_b3_block(cycle_graph(5), 0).holds);
  auto strict = is_b3_block(cycle_graph(5), 0, B3Rule::WithHeadBound);
  CHECK_FALSE(strict.holds);
  CHECK_FALSE(strict.note.empty());
  CHECK_FALSE(is_b3_block(cycle_graph(4), 0).holds);
  CHECK_THROWS_AS(is_b3_block(path_graph(3), 0), Error);
  CHECK_THROWS_AS(is_b3_block(cycle_graph(5), 7), Error);
}

TEST_CASE("P(k) membership") {
  for (int k = 3; k <= 5; ++k) CHECK(is_pk_member(cycle_graph(k + 2), VertexSet(k + 2, {0, 1})).holds);
  auto x = gen_x(3);
  CHECK(is_pk_member(x.graph, x.marks.at("H")).holds);
  auto a = gen_a(3, 2);
  CHECK(is_pk_member(a.graph, a.marks.at("H")).holds);
  CHECK_THROWS_AS(is_pk_member(cycle_graph(5), VertexSet(5, {0, 2})), Error);
  CHECK_THROWS_AS(is_pk_member(complete_graph(3), VertexSet(3, {0, 1})), Error);
  // not critical
  Graph nc = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
  CHECK_FALSE(is_pk_member(nc, VertexSet(4, {0, 1})).holds);
}

TEST_CASE("claw-freeness") {
  CHECK_FALSE(is_claw_free(star_graph(3)).holds);
  CHECK(is_claw_free(cycle_graph(5)).holds);
  CHECK(is_claw_free(gen_a(3, 2).graph).holds);
  auto v = is_claw_free(star_graph(4));
  CHECK_FALSE(v.witness.empty());
}

TEST_CASE("diameter criticality") {
  CHECK(is_diameter_critical(cycle_graph(5), 2).holds);
  CHECK(is_diameter_critical(cycle_graph(6), 3).holds);
  CHECK(is_diameter_critical(complete_graph(4), 1).holds);
  CHECK(is_diameter_critical(path_graph(3), 2).holds);
  CHECK_FALSE(is_diameter_critical(cycle_graph(5), 3).holds);
  Graph k4e = remove_edge(complete_graph(4), 0, 1);
  CHECK_FALSE(is_diameter_critical(k4e, 2).holds);
}

TEST_CASE("complements of stars") {
  CHECK(is_two_crit_complement_of_stars(complement(disjoint_union(star_graph(2), star_graph(1)))).holds);
  CHECK(is_two_crit_complement_of_stars(complement(disjoint_union(star_graph(3), star_graph(3)))).holds);
  CHECK_FALSE(is_two_crit_complement_of_stars(complement(disjoint_union(star_graph(2), Graph(1)))).holds);
  CHECK_FALSE(is_two_crit_complement_of_stars(complement(star_graph(3))).holds);
  CHECK_FALSE(is_two_crit_complement_of_stars(complement(disjoint_union(path_graph(4), star_graph(1)))).holds);
}

TEST_CASE("block chain recognizer") {
  for (const auto& f : {gen_g1(4, 1, 2), gen_g1(5, 1, 2), gen_g1(5, 2, 2, {1, 2}, 1), gen_g1(6, 3, 2)}) {
    auto v = classify_k3(f.graph, *f.claims.gamma_c);
    INFO(f.spec.to_string() << " " << v.note);
    CHECK(v.holds);
    CHECK(v.note == "G1");
  }
  for (int k = 5; k <= 7; ++k) {
    auto v = classify_k3(gen_g2(k).graph, k);
    CHECK(v.holds);
    CHECK(v.note == "G2");
  }
  CHECK_FALSE(classify_k3(path_graph(6), 4).holds);
  CHECK_FALSE(classify_k3(cycle_graph(6), 4).holds);
}
