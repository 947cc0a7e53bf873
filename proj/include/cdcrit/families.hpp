#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdcrit/graph.hpp"

namespace cdcrit {

enum class FamilyTag { B0, B1, B21, B22, G1, G2, HL, F, X, G5, A, FIG4, CYCLE, EXT };

const char* tag_name(FamilyTag tag);
std::optional<FamilyTag> parse_tag(const std::string& s);

struct FactorClaim {
  int ell = 1;
  bool holds = false;
  std::optional<std::string> witness;  // name of a mark set
};

// Properties a generator asserts about its output; unset means no claim.
struct Claims {
  std::optional<int> gamma_c, zeta, zeta0, min_degree_at_least;
  std::optional<bool> critical, claw_free, odd_order;
  std::vector<FactorClaim> factor;
};

// Compact text form "TAG:key=v,key=v1/v2". EXT carries its base after ';',
// e.g. "EXT:n=2/2/1;X:s=3".
struct FamilySpec {
  FamilyTag tag = FamilyTag::B0;
  std::map<std::string, std::vector<int>> params;
  std::vector<FamilySpec> base;  // at most one, EXT only

  static FamilySpec parse(const std::string& text);
  std::string to_string() const;
  int get(const std::string& key, std::optional<int> fallback = std::nullopt) const;
  std::vector<int> list(const std::string& key, std::vector<int> fallback = {}) const;
};

struct Family {
  Graph graph;
  FamilySpec spec;
  Claims claims;
  std::map<std::string, VertexSet> marks;
  Vertex head = -1;
};

// End blocks; the head is labeled c.
Family gen_b0(int t1);
Family gen_b1(int t2);
Family gen_b21(int t3, int t4);
Family gen_b22(const std::vector<int>& m, int r);

// Unit position l in 1..k-3, clique K_{n_l}, end block from gen_b22(m, r).
Family gen_g1(int k, int l, int n_l, const std::vector<int>& m = {1, 1}, int r = 0);
// Path c0..c_{k-4} attached to the head of the block. k = 4 needs allow_k4.
Family gen_g2(int k, const Family& block, bool allow_k4 = false);
Family gen_g2(int k, bool allow_k4 = false);
// Smallest head-labeled block passing is_b3_block with the head bound
// (6-cycle with one chord at the head's neighbours).
Family default_b3_block();
// Exhaustive search over 2-connected graphs up to max_n; first hit in
// (order, canonical key, head) order.
std::optional<Family> search_b3_block(int max_n);

// sizes = |U_1|..|U_l|; miss[j] = index in U_l missed by the j-th vertex of
// U_{l-1} (default j mod |U_l|). Head labeled x.
Family gen_hl(const std::vector<int>& sizes, std::vector<int> miss = {});
// Blocks H_i use U-sets of size s.
Family gen_f(int p, int q, int r, int s = 2);
// Parameters realizing (k, zeta, zeta0) as an F instance.
FamilySpec realizing_spec(int k, int zeta, int zeta0);

Family gen_x(int s);
Family gen_g5(int l1, int l2);
// t1 odd >= 3, t2 even >= 2.
Family gen_a(int t1, int t2);
Family gen_fig4(int n);
Family gen_cycle(int k);

// x0 v K_{n_1} v ... v K_{n_l} v_H G, with H = base.marks["H"]. The base
// must pass is_pk_member unless check is false.
Family extend_pk(const Family& base, const std::vector<int>& sizes, bool check = true);

Family generate(const FamilySpec& spec);

}  // namespace cdcrit
