#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdcrit/graph.hpp"

namespace cdcrit {

struct NonEdgeRecord {
  Vertex u = 0, v = 0;
  int gamma_c = 0;    // gamma_c(G + uv)
  VertexSet witness;  // lexicographically least minimum CDS of G + uv
};

struct CriticalityReport {
  int n = 0;
  int k = 0;  // gamma_c(G)
  bool is_critical = false;
  std::vector<NonEdgeRecord> records;  // non-edges in lexicographic order
  std::optional<Edge> failing_pair;
};

CriticalityReport check_critical(const Graph& g);

// Early-exit decision used by census filters. When k is given, also requires
// gamma_c(g) == k.
bool is_critical(const Graph& g, std::optional<int> k = std::nullopt);

struct LemmaVerdict {
  bool holds = true;
  std::string failure;  // first violated statement, empty when holds
  explicit operator bool() const { return holds; }
};

// Witness-set bounds for every non-edge xy and every minimum CDS D of G + xy:
// k-2 <= |D| <= k-1, D meets {x,y}, and if D ∩ {x,y} = {x} then D misses N(y).
LemmaVerdict verify_lemma1(const Graph& g, const CriticalityReport& report);

// Block-level statements for a critical graph with cut vertices: every cut
// vertex c splits G into exactly two components whose neighbourhoods of c are
// cliques, c lies in every minimum CDS, and for every block B, non-edge xy in
// B, minimum CDS D of G and D_xy of G + xy: D and D_xy agree on cut vertices,
// |D_xy ∩ B| < |D ∩ B| and the same strict inequality off the cut vertices.
LemmaVerdict verify_block_lemmas(const Graph& g, const CriticalityReport& report);

}  // namespace cdcrit
