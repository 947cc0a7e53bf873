#pragma once

#include <optional>
#include <vector>

#include "cdcrit/graph.hpp"

namespace cdcrit {

struct MatchingResult {
  int size = 0;
  std::vector<Edge> edges;  // (u,v) with u < v, sorted
  bool is_perfect = false;
};

// Edmonds' blossom algorithm, O(n^3).
MatchingResult max_matching(const Graph& g);
// Maximum matching of g - removed.
int matching_number(const Graph& g, const VertexSet& removed);

// Independent oracle: exhaustive branching on the lowest unmatched vertex.
int max_matching_bruteforce(const Graph& g);

struct FactorCriticalityVerdict {
  int ell = 0;
  bool holds = true;
  std::optional<VertexSet> counterexample_set;  // |S| = ell, G - S has no perfect matching
  std::optional<VertexSet> favaron_witness;     // odd_components(G - S) > |S| - ell
  int witness_odd_components = 0;
};

// Direct definition: every ell-subset S leaves a perfect matching. The first
// failing S in lexicographic order is reported, together with a Tutte-type
// set for G - S when one exists at small size. ell in {0,1,2}, n ≡ ell mod 2.
FactorCriticalityVerdict is_factor_critical(const Graph& g, int ell);

// Which sets S the odd-component condition is scanned over.
enum class FavaronScope {
  AllSubsets,  // every S with |S| >= ell
  CutSets,     // only S with |S| >= ell whose removal disconnects G
};

// Odd-component condition: odd_components(G - S) <= |S| - ell for all scanned
// S. Needs min degree >= ell + 1 and n <= 18. Sets are scanned by size, then
// lexicographically; the first violation is the witness.
FactorCriticalityVerdict favaron_check(const Graph& g, int ell, FavaronScope scope = FavaronScope::AllSubsets);

// True iff S violates the condition at level ell.
bool favaron_violation(const Graph& g, const VertexSet& s, int ell);

}  // namespace cdcrit
