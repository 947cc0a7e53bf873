#pragma once

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cdcrit/graph.hpp"
#include "cdcrit/graph6.hpp"
#include "doctest.h"

namespace testutil {

inline std::string data_path(const std::string& name) { return std::string(CDCRIT_TEST_DATA) + "/" + name; }

inline std::vector<std::vector<std::string>> read_table(const std::string& name) {
  std::ifstream in(data_path(name));
  REQUIRE_MESSAGE(in.good(), "missing test data " << name);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream s(line);
    std::vector<std::string> row;
    std::string f;
    while (s >> f) row.push_back(f);
    if (!row.empty()) rows.push_back(row);
  }
  return rows;
}

// Adjacency-matrix string minimized over all n! relabelings; n <= 8.
inline std::string brute_canonical(const cdcrit::Graph& g) {
  const int n = g.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += g.adjacent(p[i], p[j]) ? '1' : '0';
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::to_string(n) + ":" + best;
}

inline cdcrit::Graph edges_graph(int n, std::vector<cdcrit::Edge> e) { return cdcrit::Graph::build(n, e); }

}  // namespace testutil
