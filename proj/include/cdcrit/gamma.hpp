#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cdcrit/graph.hpp"

namespace cdcrit {

struct GammaCResult {
  int gamma_c = 0;
  VertexSet witness;  // lexicographically least minimum CDS
  std::optional<std::vector<VertexSet>> all_min_sets;  // sorted lexicographically
};

// Word uses single-word masks (n <= 64); General works for any n.
enum class SolverPath { Auto, Word, General };

bool is_cds(const Graph& g, const VertexSet& d);

// Exact gamma_c by iterative deepening over connected subsets. For n = 1 the
// result is gamma_c = 1 with witness {0}.
GammaCResult gamma_c(const Graph& g, bool enumerate_all = false, SolverPath path = SolverPath::Auto);

// Independent oracle: scans subsets in size order. n <= 20.
GammaCResult gamma_c_bruteforce(const Graph& g);

// Visits every connected dominating set with exactly `size` vertices, each
// once, in no particular order. Stops early when visit returns false; the
// return value is false iff stopped.
bool for_each_cds(const Graph& g, int size, const std::function<bool(const VertexSet&)>& visit,
                  SolverPath path = SolverPath::Auto);

std::vector<VertexSet> cds_of_size(const Graph& g, int size);  // sorted lexicographically

// Is there a CDS with at most `size` vertices?
bool has_cds_at_most(const Graph& g, int size);

// Smallest-size-first search for a CDS of at most max_size vertices accepted
// by the predicate.
std::optional<VertexSet> find_cds(const Graph& g, int max_size,
                                  const std::function<bool(const VertexSet&)>& accept);

}  // namespace cdcrit
