#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "cdcrit/families.hpp"
#include "json.hpp"

namespace cdcrit {

// Flat key=value configuration; '#' starts a comment. Lists use ',' and
// family lists use '|'.
class Manifest {
 public:
  static Manifest defaults();
  static Manifest load(const std::string& path);  // defaults overlaid by the file
  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  bool has(const std::string& key) const { return values_.count(key) != 0; }
  std::string get(const std::string& key) const;
  int get_int(const std::string& key) const;
  std::vector<int> get_ints(const std::string& key) const;
  std::vector<std::string> get_specs(const std::string& key) const;
  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

struct InstanceResult {
  std::string id;
  bool pass = true;
  std::string graph6;
  std::string detail;
  nlohmann::json witness = nlohmann::json::object();
};

struct SuiteReport {
  std::string suite;
  std::vector<InstanceResult> instances;
  double seconds = 0;

  int failures() const;
  bool passed() const { return failures() == 0; }
  nlohmann::json to_json(bool failures_only = false) const;
};

std::vector<std::string> suite_ids();
SuiteReport run_suite(const std::string& id, const Manifest& manifest = Manifest::defaults());

// Claim-by-claim verification of a generated family with the independent
// modules; returns the failed claims (empty = all hold).
std::vector<std::string> check_claims(const Family& f);

// Deterministic corpus helpers.
Graph random_connected_graph(std::mt19937_64& rng, int n);
std::vector<Graph> random_corpus(std::uint64_t seed, int count, int min_n, int max_n);
// Every graph on n vertices (connected or not), one per isomorphism class:
// each graph or its complement is connected. n <= census cap.
std::vector<Graph> all_graphs(int n);

nlohmann::json set_json(const Graph& g, const VertexSet& s);

}  // namespace cdcrit
