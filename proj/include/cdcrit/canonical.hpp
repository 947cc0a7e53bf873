#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdcrit/graph.hpp"

namespace cdcrit {

// Canonical labeling by individualization/refinement. Exact; intended for
// small graphs (default cap n <= 12, raise with CDCRIT_MAX_N up to 64).
struct CanonicalForm {
  Graph graph;                // canonical relabeling of the input
  std::vector<int> labeling;  // labeling[v] = canonical index of input vertex v
  std::vector<std::vector<int>> automorphisms;  // generators found during search
};

// `colors` optionally assigns a colour class to each vertex; colour-preserving
// canonical form (classes are ordered by colour value).
CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colors = {});
std::string canonical_graph6(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

namespace detail {

// Word-level entry point used by the census: rows[v] is the adjacency mask of
// v, cells is the initial ordered partition (empty = unit partition).
// Returns order[i] = input vertex placed at canonical position i.
std::vector<int> canonical_order(const std::uint64_t* rows, int n,
                                 std::vector<std::uint64_t> cells = {},
                                 std::vector<std::vector<int>>* automorphisms = nullptr);

// Upper triangle of the relabeled adjacency matrix packed into 64 bits,
// with n in the top four bits. n <= 11.
std::uint64_t pack_key(const std::uint64_t* rows, int n, const std::vector<int>& order);
Graph unpack_key(std::uint64_t key);

}  // namespace detail

}  // namespace cdcrit
