#include <cstdlib>
#include <set>

#include "cdcrit/canonical.hpp"
#include "cdcrit/criticality.hpp"
#include "cdcrit/decomposition.hpp"
#include "cdcrit/families.hpp"
#include "cdcrit/gamma.hpp"
#include "cdcrit/matching.hpp"
#include "cdcrit/structure.hpp"
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

std::string fc_value(const Graph& g, int ell) {
  if ((g.order() - ell) % 2) return "-";
  return is_factor_critical(g, ell).holds ? "1" : "0";
}

// Columns: name n m gamma_c critical zeta zeta0 min_degree fc1 fc2 witness_odd graph6
struct Ref {
  std::vector<std::string> row;
  int num(int i) const { return std::stoi(row[i]); }
};

}  // namespace

TEST_CASE("generators match the independent reference constructions") {
  auto rows = testutil::read_table("families_reference.txt");
  REQUIRE(rows.size() == 21);
  // some instances exceed the default canonical-form cap
  setenv("CDCRIT_MAX_N", "16", 1);
  for (const auto& r : rows) {
    Ref ref{r};
    INFO(r[0]);
    Family f = generate(FamilySpec::parse(r[0]));
    const Graph& g = f.graph;
    CHECK(isomorphic(g, from_graph6(r[11])));
    CHECK(g.order() == ref.num(1));
    CHECK(g.size() == ref.num(2));
    CHECK(gamma_c(g).gamma_c == ref.num(3));
    CHECK(check_critical(g).is_critical == (r[4] == "1"));
    auto d = decompose(g);
    CHECK(d.zeta == ref.num(5));
    CHECK(d.zeta0 == ref.num(6));
    CHECK(g.min_degree() == ref.num(7));
    CHECK(fc_value(g, 1) == r[8]);
    CHECK(fc_value(g, 2) == r[9]);
    if (r[10] != "-") {
      std::optional<std::string> mark;
      for (const auto& fc : f.claims.factor)
        if (fc.witness) mark = fc.witness;
      REQUIRE(mark.has_value());
      CHECK(odd_components(g, f.marks.at(*mark)) == ref.num(10));
    }
  }
}

TEST_CASE("claims compared with the reference values") {
  // Disagreements between what a generator asserts and what the reference
  // computes. Exactly these three are known.
  std::set<std::string> found;
  for (const auto& r : testutil::read_table("families_reference.txt")) {
    Ref ref{r};
    Family f = generate(FamilySpec::parse(r[0]));
    const auto& c = f.claims;
    auto note = [&](bool ok, const std::string& what) {
      if (!ok) found.insert(r[0] + " " + what);
    };
    if (c.gamma_c) note(*c.gamma_c == ref.num(3), "gamma_c");
    if (c.critical) note(*c.critical == (r[4] == "1"), "critical");
    if (c.zeta) note(*c.zeta == ref.num(5), "zeta");
    if (c.zeta0) note(*c.zeta0 == ref.num(6), "zeta0");
    if (c.min_degree_at_least) note(ref.num(7) >= *c.min_degree_at_least, "min_degree");
    if (c.odd_order) note(*c.odd_order == (ref.num(1) % 2 == 1), "odd_order");
    for (const auto& fc : c.factor) note(r[8 + fc.ell - 1] == (fc.holds ? "1" : "0"), "factor");
  }
  CHECK(found == std::set<std::string>{"FIG4:n=4 factor", "EXT:n=2/3;A:t1=3,t2=2 min_degree",
                                         "G1:k=4,l=1,n=1 zeta"});
}

TEST_CASE("spec text round trip") {
  for (std::string s : {"G1:k=5,l=1,m=1/2,n=2,r=0", "EXT:n=2/2/1;X:s=3", "HL:u=2/2", "A:t1=3,t2=2"}) {
    auto spec = FamilySpec::parse(s);
    CHECK(FamilySpec::parse(spec.to_string()).to_string() == spec.to_string());
  }
  auto e = FamilySpec::parse("EXT:n=2/3;A:t1=3,t2=2");
  CHECK(e.tag == FamilyTag::EXT);
  CHECK(e.list("n") == std::vector<int>{2, 3});
  REQUIRE(e.base.size() == 1);
  CHECK(e.base[0].get("t1") == 3);
  CHECK(e.get("missing", 7) == 7);
  CHECK_THROWS_AS(e.get("missing"), Error);
  CHECK(parse_tag("FIG4") == FamilyTag::FIG4);
  CHECK_FALSE(parse_tag("FIG5").has_value());
  CHECK(std::string(tag_name(FamilyTag::G5)) == "G5");
  for (std::string bad : {"", "Q:s=1", "X:s", "X:s=a", "X:=3"})
    CHECK(code_of([&] { FamilySpec::parse(bad); }) == Errc::BadFormat);
}

TEST_CASE("end blocks") {
  auto b21 = gen_b21(2, 2);
  CHECK(b21.graph.label(b21.head) == "c");
  CHECK(gamma_c(b21.graph).gamma_c == 2);
  auto b22 = gen_b22({1, 2}, 1);
  CHECK(b22.marks.at("S").size() == 3);
  CHECK(is_b22_shaped(b22.graph, b22.head).holds);
  CHECK(gen_b0(2).graph.label(gen_b0(2).head) == "c");
  CHECK(is_connected(gen_b1(2).graph));
}

TEST_CASE("end block with the head bound") {
  auto b = default_b3_block();
  CHECK(b.graph.order() == 6);
  CHECK(b.graph.size() == 7);
  CHECK(is_b3_block(b.graph, b.head, B3Rule::WithHeadBound).holds);
  auto found = search_b3_block(6);
  REQUIRE(found.has_value());
  CHECK(isomorphic(found->graph, b.graph));
  CHECK_FALSE(search_b3_block(5).has_value());
}

TEST_CASE("G1 and G2 parameters") {
  auto g = gen_g1(6, 2, 3, {1, 2}, 1);
  CHECK(g.claims.gamma_c == 6);
  CHECK(is_critical(g.graph, 6));
  CHECK(decompose(g.graph).zeta == 3);
  CHECK(code_of([] { gen_g1(5, 3, 1); }) == Errc::BadParameter);
  CHECK(code_of([] { gen_g2(4); }) == Errc::BadParameter);
  CHECK(code_of([] { gen_g2(5, gen_b0(2)); }) == Errc::Precondition);
  auto g2 = gen_g2(5);
  CHECK(g2.graph.label(g2.head) == "c2");
}

TEST_CASE("HL blocks") {
  auto h = gen_hl({2, 2});
  CHECK(h.graph.order() == 5);
  CHECK(h.graph.label(h.head) == "x");
  CHECK(gen_hl({2, 3, 2}).graph.order() == 8);
  CHECK_THROWS_AS(gen_hl({1, 2}), Error);
  CHECK_THROWS_AS(gen_hl({2}), Error);
}

TEST_CASE("realizing parameters") {
  for (int k = 4; k <= 8; ++k)
    for (int zeta = 1; zeta <= k - 2; ++zeta)
      for (int zeta0 = 2; zeta0 <= std::min((k + 2) / 3, zeta); ++zeta0) {
        auto spec = realizing_spec(k, zeta, zeta0);
        int r = spec.get("r");
        if (r < 2) continue;  // no F instance for these triples
        INFO(k << " " << zeta << " " << zeta0);
        auto f = generate(spec);
        auto d = decompose(f.graph);
        CHECK(d.zeta == zeta);
        CHECK(d.zeta0 == zeta0);
        CHECK(gamma_c(f.graph).gamma_c == k);
      }
}

TEST_CASE("parity and parameter errors") {
  CHECK(code_of([] { gen_g5(2, 3); }) == Errc::ParityMismatch);
  CHECK_THROWS_AS(gen_a(2, 2), Error);
  CHECK_THROWS_AS(gen_x(1), Error);
  CHECK_THROWS_AS(extend_pk(gen_b0(2), {2}), Error);
  CHECK_THROWS_AS(generate(FamilySpec::parse("EXT:n=2")), Error);
}
