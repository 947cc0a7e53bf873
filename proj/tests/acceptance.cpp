// Acceptance checks, one line per criterion:
//   PASS|FAIL <n> <name>: <summary> [<seconds>s / <budget>s]
// Exit status is 0 iff every selected criterion passes.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cdcrit/census.hpp"
#include "cdcrit/gamma.hpp"
#include "cdcrit/graph6.hpp"
#include "cdcrit/harness.hpp"
#include "cdcrit/matching.hpp"

using namespace cdcrit;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> failures;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome(const Manifest&)> run;
};

// At most this many failing instances are listed under a FAIL line.
constexpr std::size_t kListed = 8;

void absorb(Outcome& o, const SuiteReport& rep) {
  std::ostringstream s;
  if (!o.summary.empty()) s << o.summary << "; ";
  s << rep.suite << " " << rep.instances.size() - rep.failures() << "/" << rep.instances.size();
  o.summary = s.str();
  for (const auto& r : rep.instances)
    if (!r.pass) {
      o.pass = false;
      o.failures.push_back(rep.suite + " " + r.id + ": " + r.detail);
    }
}

Outcome suites(const Manifest& m, std::initializer_list<const char*> ids) {
  Outcome o;
  for (const char* id : ids) absorb(o, run_suite(id, m));
  return o;
}

// Every connected graph in the n <= 7 atlas file, solver against oracle.
Outcome solver_soundness(const Manifest& m) {
  Outcome o = suites(m, {"solver"});
  std::ifstream in(std::string(CDCRIT_TEST_DATA) + "/graph_atlas_n7.g6");
  if (!in) {
    o.pass = false;
    o.failures.push_back("atlas file missing");
    return o;
  }
  int total = 0, connected = 0, agree = 0;
  for (const auto& g : read_graph6_stream(in)) {
    ++total;
    if (!is_connected(g)) continue;
    ++connected;
    if (gamma_c(g).gamma_c == gamma_c_bruteforce(g).gamma_c)
      ++agree;
    else
      o.failures.push_back("atlas " + to_graph6(g));
  }
  // 1253 atlas graphs minus the null graph; 996 of them are connected
  if (total != 1252 || connected != 996 || static_cast<std::size_t>(connected) != census(7).size()) {
    o.failures.push_back("atlas counts " + std::to_string(total) + "/" + std::to_string(connected));
  }
  if (agree != connected || !o.failures.empty()) o.pass = false;
  o.summary += "; atlas " + std::to_string(agree) + "/" + std::to_string(connected) + " connected of " +
               std::to_string(total + 1);
  return o;
}

struct MatchingCase {
  std::string spec;
  int ell;
  std::optional<std::string> witness_mark;
};

Outcome matching_theorems(const Manifest&) {
  const std::vector<MatchingCase> cases = {
      {"FIG4:n=4", 1, std::nullopt},
      {"X:s=3", 1, "A"},
      {"X:s=5", 1, "A"},
      {"G5:l1=2,l2=2", 1, "S"},
      {"EXT:n=2/1;X:s=3", 1, "S"},    // k = 6
      {"EXT:n=2/2/1;X:s=3", 1, "S"},  // k = 7
      {"A:t1=3,t2=2", 2, "S"},
      {"EXT:n=2/3;A:t1=3,t2=2", 2, "S"},
  };
  Outcome o;
  int ok = 0;
  for (const auto& c : cases) {
    Family f = generate(FamilySpec::parse(c.spec));
    const Graph& g = f.graph;
    std::vector<std::string> bad;
    auto direct = is_factor_critical(g, c.ell);
    if (direct.holds) bad.push_back(std::to_string(c.ell) + "-factor-critical");
    if (c.witness_mark) {
      const VertexSet& s = f.marks.at(*c.witness_mark);
      if (!favaron_violation(g, s, c.ell))
        bad.push_back("witness " + *c.witness_mark + " is not a violation");
    }
    if (g.min_degree() >= c.ell + 1 && favaron_check(g, c.ell).holds != direct.holds)
      bad.push_back("odd-component condition disagrees with the definition");
    if (bad.empty()) {
      ++ok;
      continue;
    }
    o.pass = false;
    std::string line = c.spec + ":";
    for (const auto& b : bad) line += " " + b + ";";
    o.failures.push_back(line);
  }
  o.summary = std::to_string(ok) + "/" + std::to_string(cases.size()) + " instances";
  return o;
}

std::vector<Criterion> criteria() {
  return {
      {1, "solver soundness", 2 * 60, solver_soundness},
      {2, "k <= 2 characterization", 5 * 60, [](const Manifest& m) { return suites(m, {"chen"}); }},
      {3, "cut-vertex bounds", 20 * 60, [](const Manifest& m) { return suites(m, {"zeta0-bound"}); }},
      {4, "zeta = k-3 structure", 30 * 60, [](const Manifest& m) { return suites(m, {"theorem-k3"}); }},
      {5, "realizability", 10 * 60, [](const Manifest& m) { return suites(m, {"realizability"}); }},
      {6, "factor and bi-criticality", 5 * 60, matching_theorems},
      {7, "lemma suites", 20 * 60,
       [](const Manifest& m) { return suites(m, {"lemma1", "block-lemmas", "bad-subgraph", "anan-matching"}); }},
      {8, "matching engine", 10 * 60, [](const Manifest& m) { return suites(m, {"matching"}); }},
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  std::vector<int> selected;
  std::string manifest_path;
  bool verbose = false;
  app.add_option("--criterion", selected, "criteria to run (default: all)")->check(CLI::Range(1, 8));
  app.add_option("--manifest", manifest_path, "manifest overriding the defaults");
  app.add_flag("-v,--verbose", verbose, "list every failing instance");
  CLI11_PARSE(app, argc, argv);

  Manifest m = manifest_path.empty() ? Manifest::defaults() : Manifest::load(manifest_path);
  bool all_pass = true;
  for (const auto& c : criteria()) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(m);
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("error: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_seconds) {
      o.pass = false;
      o.failures.push_back("over the time budget");
    }
    all_pass &= o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.id << " " << c.name << ": " << o.summary << " ["
              << std::fixed << std::setprecision(1) << secs << "s / " << c.budget_seconds << "s]\n";
    std::size_t shown = 0;
    for (const auto& f : o.failures) {
      if (!verbose && shown == kListed) {
        std::cout << "    ... " << o.failures.size() - kListed << " more\n";
        break;
      }
      std::cout << "    " << f << "\n";
      ++shown;
    }
    std::cout.flush();
  }
  return all_pass ? 0 : 1;
}
