#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <vector>

#include "cdcrit/graph.hpp"

namespace cdcrit {

using GraphPredicate = std::function<bool(const Graph&)>;

// Canonical keys of all connected graphs on exactly n vertices, sorted.
// Built by vertex extension of the n-1 level plus canonical deduplication;
// levels are cached for the life of the process. n <= 9 by default.
const std::vector<std::uint64_t>& connected_keys(int n);

// Connected graphs with min_n <= order <= max_n (canonical labeling, sorted
// by order then key) that satisfy the predicate. The predicate must be
// isomorphism invariant; at the top level it is applied before
// deduplication, so the top level is never materialized in full.
std::vector<Graph> census(int max_n, const GraphPredicate& pred = {}, int min_n = 1);

// Filter an external graph6 stream: connected members satisfying pred,
// canonicalized and deduplicated.
std::vector<Graph> census_stream(std::istream& in, const GraphPredicate& pred = {});

// Number of distinct canonical graphs on n vertices in a list.
std::vector<Graph> canonical_dedup(const std::vector<Graph>& graphs);

}  // namespace cdcrit
