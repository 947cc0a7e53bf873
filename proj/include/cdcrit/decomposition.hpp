#pragma once

#include <vector>

#include "cdcrit/graph.hpp"

namespace cdcrit {

struct BlockDecomposition {
  VertexSet cut_vertices;
  std::vector<VertexSet> blocks;      // ordered by smallest vertex
  std::vector<VertexSet> block_cuts;  // block_cuts[i] = blocks[i] ∩ cut_vertices
  int zeta = 0;
  int zeta0 = 0;
  std::vector<int> end_blocks;  // indices of blocks with exactly one cut vertex

  // Blocks containing v.
  std::vector<int> blocks_of(Vertex v) const;
};

// Lowpoint DFS. Bridges are two-vertex blocks; K1 is a single block.
BlockDecomposition decompose(const Graph& g);

// Number of odd-order components of g - s.
int odd_components(const Graph& g, const VertexSet& s);

// Cut-vertex bounds for a k-critical graph: zeta <= k-2 and
// zeta0 <= min(floor((k+2)/3), zeta). Throws ReportMismatch if k != gamma_c(g).
bool verify_cut_bound(const Graph& g, int k);

}  // namespace cdcrit
