#include "cdcrit/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "cdcrit/canonical.hpp"
#include "cdcrit/census.hpp"
#include "cdcrit/criticality.hpp"
#include "cdcrit/decomposition.hpp"
#include "cdcrit/gamma.hpp"
#include "cdcrit/graph6.hpp"
#include "cdcrit/matching.hpp"
#include "cdcrit/structure.hpp"

namespace cdcrit {

namespace {

constexpr const char* kCorpus =
    "G1:k=4,l=1,n=2 | G1:k=5,l=1,n=2 | G1:k=5,l=2,n=2 | G1:k=6,l=2,n=2,m=1/2,r=1 | G2:k=5 | G2:k=6 | "
    "F:p=0,q=2,r=2 | F:p=1,q=2,r=2 | F:p=0,q=3,r=3 | X:s=3 | X:s=5 | G5:l1=2,l2=2 | A:t1=3,t2=2 | "
    "FIG4:n=3 | FIG4:n=4 | CYCLE:k=3 | CYCLE:k=4 | CYCLE:k=5 | CYCLE:k=6 | EXT:n=2;CYCLE:k=4 | "
    "EXT:n=2/1;X:s=3 | EXT:n=2/3;A:t1=3,t2=2";

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

InstanceResult make_result(const std::string& id, const Graph& g) {
  InstanceResult r;
  r.id = id;
  r.graph6 = to_graph6(g);
  return r;
}

void fail(InstanceResult& r, const std::string& why) {
  if (r.pass) {
    r.pass = false;
    r.detail = why;
  } else {
    r.detail += "; " + why;
  }
}

std::string census_id(const Graph& g) { return "census:n" + std::to_string(g.order()) + ":" + to_graph6(g); }

bool complete(const Graph& g) { return 2 * g.size() == g.order() * (g.order() - 1); }

// Critical census graphs plus every generated corpus member claimed critical.
struct CriticalGraph {
  std::string id;
  Graph graph;
  int k;
};

std::vector<CriticalGraph> lemma_corpus(const Manifest& m) {
  std::vector<CriticalGraph> out;
  for (const auto& text : m.get_specs("corpus")) {
    Family f = generate(FamilySpec::parse(text));
    if (f.claims.critical.value_or(false) && is_critical(f.graph))
      out.push_back({text, f.graph, gamma_c(f.graph).gamma_c});
  }
  for (const auto& g : census(m.get_int("lemma.census_max_n"), [](const Graph& g) { return is_critical(g); }))
    out.push_back({census_id(g), g, gamma_c(g).gamma_c});
  return out;
}

using SuiteFn = std::function<void(const Manifest&, SuiteReport&)>;

void suite_solver(const Manifest& m, SuiteReport& rep) {
  auto check = [&](const std::string& id, const Graph& g) {
    auto r = make_result(id, g);
    auto fast = gamma_c(g, true);
    auto slow = gamma_c_bruteforce(g);
    r.witness["gamma_c"] = fast.gamma_c;
    if (fast.gamma_c != slow.gamma_c)
      fail(r, "gamma_c " + std::to_string(fast.gamma_c) + " vs brute force " + std::to_string(slow.gamma_c));
    else if (*fast.all_min_sets != *slow.all_min_sets)
      fail(r, "minimum CDS families differ");
    else if (fast.witness != slow.all_min_sets->front())
      fail(r, "witness is not the lexicographically least minimum CDS");
    rep.instances.push_back(std::move(r));
  };
  for (const auto& g : census(m.get_int("solver.census_max_n"))) check(census_id(g), g);
  auto corpus = random_corpus(static_cast<std::uint64_t>(m.get_int("seed")), m.get_int("solver.random_count"),
                              m.get_int("solver.random_min_n"), m.get_int("solver.random_max_n"));
  for (std::size_t i = 0; i < corpus.size(); ++i) check("random:" + std::to_string(i), corpus[i]);
}

void suite_chen(const Manifest& m, SuiteReport& rep) {
  const int max_n = m.get_int("chen.max_n");
  int ones = 0;
  for (const auto& g : census(max_n, [](const Graph& g) { return is_critical(g); })) {
    int k = gamma_c(g).gamma_c;
    if (k > 2) continue;
    auto r = make_result(census_id(g), g);
    r.witness["k"] = k;
    if (k == 1) {
      ++ones;
      if (!complete(g)) fail(r, "1-critical but not complete");
    } else if (!is_two_crit_complement_of_stars(g)) {
      fail(r, "2-critical but the complement is not a union of >= 2 stars");
    }
    rep.instances.push_back(std::move(r));
  }
  {
    InstanceResult r;
    r.id = "complete-graphs";
    r.witness["one_critical"] = ones;
    if (ones != max_n) fail(r, std::to_string(ones) + " 1-critical graphs, expected K_1..K_" + std::to_string(max_n));
    rep.instances.push_back(std::move(r));
  }
  // Converse: complements of unions of >= 2 stars.
  std::vector<int> leaves;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      if (leaves.size() < 2) return;
      Graph u(0);
      std::string id = "stars:";
      for (int l : leaves) {
        u = disjoint_union(u, star_graph(l));
        id += std::to_string(l) + "/";
      }
      id.pop_back();
      Graph g = complement(u);
      auto r = make_result(id, g);
      if (!is_critical(g, 2)) fail(r, "complement of stars is not 2-critical");
      rep.instances.push_back(std::move(r));
      return;
    }
    for (int l = std::min(cap, left - 1); l >= 1; --l) {
      leaves.push_back(l);
      rec(left - l - 1, l);
      leaves.pop_back();
    }
  };
  for (int n = 4; n <= max_n; ++n) rec(n, n);
}

void suite_hanson_wang(const Manifest& m, SuiteReport& rep) {
  for (const auto& g : census(m.get_int("hanson-wang.max_n"))) {
    bool crit3 = gamma_c(g).gamma_c == 3 && is_critical(g, 3);
    bool dc = static_cast<bool>(is_diameter_critical(complement(g), 2));
    if (!crit3 && !dc) continue;
    auto r = make_result(census_id(g), g);
    r.witness["three_critical"] = crit3;
    r.witness["complement_diameter_critical"] = dc;
    if (crit3 != dc) fail(r, crit3 ? "complement is not 2-diameter-critical" : "complement is 2-diameter-critical but g is not 3-critical");
    rep.instances.push_back(std::move(r));
  }
}

void suite_zeta0_bound(const Manifest& m, SuiteReport& rep) {
  for (const auto& g : census(m.get_int("zeta0-bound.max_n"), [](const Graph& g) { return is_critical(g); })) {
    int k = gamma_c(g).gamma_c;
    if (k < 3) continue;
    auto r = make_result(census_id(g), g);
    auto d = decompose(g);
    r.witness = {{"k", k}, {"zeta", d.zeta}, {"zeta0", d.zeta0}};
    if (!verify_cut_bound(g, k)) fail(r, "zeta or zeta0 exceeds the bound");
    rep.instances.push_back(std::move(r));
  }
}

void suite_theorem_k3(const Manifest& m, SuiteReport& rep) {
  const int k = m.get_int("theorem-k3.k");
  auto members = census(m.get_int("theorem-k3.max_n"), [k](const Graph& g) {
    return decompose(g).zeta == k - 3 && gamma_c(g).gamma_c == k && is_critical(g, k);
  });
  for (const auto& g : members) {
    auto r = make_result(census_id(g), g);
    auto v = classify_k3(g, k);
    r.witness["shape"] = v.note;
    if (!v) fail(r, "not certified: " + v.note);
    rep.instances.push_back(std::move(r));
  }
  {
    InstanceResult r;
    r.id = "census-members";
    r.witness["count"] = members.size();
    rep.instances.push_back(std::move(r));
  }
  auto verify = [&](const std::string& id, const std::function<Family()>& make, int gk) {
    InstanceResult r;
    r.id = id;
    try {
      Family f = make();
      r.graph6 = to_graph6(f.graph);
      int gc = gamma_c(f.graph).gamma_c;
      int zeta = decompose(f.graph).zeta;
      r.witness = {{"gamma_c", gc}, {"zeta", zeta}};
      if (gc != gk) fail(r, "gamma_c = " + std::to_string(gc));
      if (!is_critical(f.graph)) fail(r, "not critical");
      if (zeta != gk - 3) fail(r, "zeta = " + std::to_string(zeta) + ", expected " + std::to_string(gk - 3));
      else if (gc == gk && !classify_k3(f.graph, gk)) fail(r, "structural check rejects the generated graph");
    } catch (const Error& e) {
      fail(r, e.what());
    }
    rep.instances.push_back(std::move(r));
  };
  for (int gk : m.get_ints("theorem-k3.grid_k")) {
    for (int l = 1; l <= gk - 3; ++l)
      for (int nl : m.get_ints("theorem-k3.grid_nl"))
        for (const auto& ms : m.get_specs("theorem-k3.grid_m")) {
          std::vector<int> mv;
          for (const auto& x : split(ms, '/')) mv.push_back(std::stoi(x));
          for (int r : m.get_ints("theorem-k3.grid_r")) {
            FamilySpec s;
            s.tag = FamilyTag::G1;
            s.params = {{"k", {gk}}, {"l", {l}}, {"n", {nl}}, {"m", mv}, {"r", {r}}};
            verify(s.to_string(), [&] { return generate(s); }, gk);
          }
        }
    verify("G2:k=" + std::to_string(gk) + (gk == 4 ? ",k4=1" : ""), [gk] { return gen_g2(gk, gk == 4); }, gk);
  }
}

void suite_realizability(const Manifest& m, SuiteReport& rep) {
  for (int k = m.get_int("realizability.k_min"); k <= m.get_int("realizability.k_max"); ++k)
    for (int zeta = 2; zeta <= k - 2; ++zeta)
      for (int zeta0 = 2; zeta0 <= std::min((k + 2) / 3, zeta); ++zeta0) {
        InstanceResult r;
        r.id = "(" + std::to_string(k) + "," + std::to_string(zeta) + "," + std::to_string(zeta0) + ")";
        FamilySpec spec = realizing_spec(k, zeta, zeta0);
        r.witness["spec"] = spec.to_string();
        try {
          Family f = generate(spec);
          r.graph6 = to_graph6(f.graph);
          int gc = gamma_c(f.graph).gamma_c;
          auto d = decompose(f.graph);
          bool has_block = std::any_of(d.block_cuts.begin(), d.block_cuts.end(),
                                       [&](const VertexSet& c) { return c.size() == zeta0; });
          if (gc != k) fail(r, "gamma_c = " + std::to_string(gc));
          if (!is_critical(f.graph)) fail(r, "not critical");
          if (d.zeta != zeta) fail(r, "zeta = " + std::to_string(d.zeta));
          if (!has_block) fail(r, "no block with " + std::to_string(zeta0) + " cut vertices");
        } catch (const Error& e) {
          fail(r, e.what());
        }
        rep.instances.push_back(std::move(r));
      }
}

void claims_instances(const std::vector<std::string>& specs, SuiteReport& rep) {
  for (const auto& text : specs) {
    InstanceResult r;
    r.id = text;
    try {
      Family f = generate(FamilySpec::parse(text));
      r.graph6 = to_graph6(f.graph);
      for (const auto& [name, s] : f.marks) r.witness[name] = set_json(f.graph, s);
      for (const auto& why : check_claims(f)) fail(r, why);
    } catch (const Error& e) {
      fail(r, e.what());
    }
    rep.instances.push_back(std::move(r));
  }
}

void suite_factor(const Manifest& m, SuiteReport& rep) {
  claims_instances(m.get_specs("factor.instances"), rep);
  for (const auto& g : census(m.get_int("factor.census_max_n"), [](const Graph& g) {
         return g.order() % 2 == 1 && g.min_degree() >= 2 && gamma_c(g).gamma_c <= 2 && is_critical(g);
       })) {
    auto r = make_result(census_id(g), g);
    auto v = is_factor_critical(g, 1);
    if (!v.holds) fail(r, "1- or 2-critical graph of odd order is not factor-critical");
    rep.instances.push_back(std::move(r));
  }
}

void suite_bicritical(const Manifest& m, SuiteReport& rep) {
  claims_instances(m.get_specs("bicritical.instances"), rep);
  for (const auto& g : census(m.get_int("bicritical.census_max_n"), [](const Graph& g) {
         return g.order() % 2 == 0 && g.min_degree() >= 3 && gamma_c(g).gamma_c <= 2 && is_critical(g) &&
                is_claw_free(g);
       })) {
    auto r = make_result(census_id(g), g);
    if (!is_factor_critical(g, 2).holds) fail(r, "claw-free 1- or 2-critical graph with min degree 3 is not bi-critical");
    rep.instances.push_back(std::move(r));
  }
}

void suite_families(const Manifest& m, SuiteReport& rep) { claims_instances(m.get_specs("corpus"), rep); }

void suite_lemma1(const Manifest& m, SuiteReport& rep) {
  for (const auto& c : lemma_corpus(m)) {
    if (c.k < 2) continue;
    auto r = make_result(c.id, c.graph);
    auto v = verify_lemma1(c.graph, check_critical(c.graph));
    if (!v) fail(r, v.failure);
    rep.instances.push_back(std::move(r));
  }
}

void suite_block_lemmas(const Manifest& m, SuiteReport& rep) {
  for (const auto& c : lemma_corpus(m)) {
    if (decompose(c.graph).zeta == 0) continue;
    auto r = make_result(c.id, c.graph);
    auto v = verify_block_lemmas(c.graph, check_critical(c.graph));
    if (!v) fail(r, v.failure);
    rep.instances.push_back(std::move(r));
  }
}

void suite_bad_subgraph(const Manifest& m, SuiteReport& rep) {
  for (const auto& c : lemma_corpus(m)) {
    if (c.k < 3) continue;
    auto r = make_result(c.id, c.graph);
    auto v = find_bad_subgraph(c.graph, std::max(14, c.graph.order()));
    if (v) {
      fail(r, "bad subgraph present");
      for (const auto& [name, s] : v.witness) r.witness[name] = set_json(c.graph, s);
    }
    rep.instances.push_back(std::move(r));
  }
}

void suite_anan(const Manifest& m, SuiteReport& rep) {
  for (const auto& c : lemma_corpus(m)) {
    if (c.k != 3 || c.graph.order() % 2 || c.graph.min_degree() < 2) continue;
    auto r = make_result(c.id, c.graph);
    if (!max_matching(c.graph).is_perfect) fail(r, "no perfect matching");
    rep.instances.push_back(std::move(r));
  }
}

void suite_matching(const Manifest& m, SuiteReport& rep) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(m.get_int("seed")) ^ 0x6d61746368ULL);
  const int count = m.get_int("matching.random_count"), max_n = m.get_int("matching.random_max_n");
  std::vector<Graph> corpus;
  for (int i = 0; i < count; ++i) {
    int n = std::uniform_int_distribution<int>(2, max_n)(rng);
    double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (std::bernoulli_distribution(p)(rng)) b.add_edge(u, v);
    corpus.push_back(b.finish());
  }
  auto favaron = [&](InstanceResult& r, const Graph& g) {
    for (int ell = 0; ell <= 2; ++ell) {
      if (g.order() < ell || (g.order() - ell) % 2 || g.min_degree() < ell + 1) continue;
      bool direct = is_factor_critical(g, ell).holds;
      bool fav = favaron_check(g, ell).holds;
      if (direct != fav)
        fail(r, "ell = " + std::to_string(ell) + ": direct " + (direct ? "holds" : "fails") + ", odd-component condition " +
                    (fav ? "holds" : "fails"));
    }
  };
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& g = corpus[i];
    auto r = make_result("random:" + std::to_string(i), g);
    auto mm = max_matching(g);
    int brute = max_matching_bruteforce(g);
    VertexSet used(g.order());
    for (auto [u, v] : mm.edges) {
      if (!g.adjacent(u, v) || used.contains(u) || used.contains(v)) fail(r, "returned edges are not a matching");
      used.insert(u);
      used.insert(v);
    }
    if (mm.size != brute) fail(r, "blossom " + std::to_string(mm.size) + " vs brute force " + std::to_string(brute));
    favaron(r, g);
    rep.instances.push_back(std::move(r));
  }
  const int fav_max = m.get_int("matching.favaron_max_n");
  const std::string stream = m.has("matching.stream") ? m.get("matching.stream") : "";
  const int cap = std::min(scale_cap(9), 11);
  for (int n = 1; n <= fav_max; ++n) {
    InstanceResult r;
    r.id = "exhaustive:n" + std::to_string(n);
    std::vector<Graph> graphs;
    if (n <= cap) {
      graphs = all_graphs(n);
    } else if (!stream.empty()) {
      std::ifstream in(stream);
      if (!in) throw Error(Errc::BadParameter, "cannot open " + stream);
      for (auto& g : read_graph6_stream(in))
        if (g.order() == n) graphs.push_back(std::move(g));
      if (graphs.empty()) fail(r, "stream " + stream + " has no graphs on " + std::to_string(n) + " vertices");
    } else {
      fail(r, "no exhaustive source: internal enumeration stops at n = " + std::to_string(cap) +
                  " and matching.stream is not set");
    }
    r.witness["graphs"] = graphs.size();
    for (const auto& g : graphs) {
      InstanceResult one = make_result(r.id, g);
      favaron(one, g);
      if (!one.pass) {
        fail(r, one.detail + " on " + one.graph6);
        break;
      }
    }
    rep.instances.push_back(std::move(r));
  }
}

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites = {
      {"solver", suite_solver},
      {"chen", suite_chen},
      {"hanson-wang", suite_hanson_wang},
      {"zeta0-bound", suite_zeta0_bound},
      {"theorem-k3", suite_theorem_k3},
      {"realizability", suite_realizability},
      {"factor", suite_factor},
      {"bicritical", suite_bicritical},
      {"families", suite_families},
      {"lemma1", suite_lemma1},
      {"block-lemmas", suite_block_lemmas},
      {"bad-subgraph", suite_bad_subgraph},
      {"anan-matching", suite_anan},
      {"matching", suite_matching},
  };
  return suites;
}

}  // namespace

Manifest Manifest::defaults() {
  Manifest m;
  m.values_ = {
      {"seed", "20261018"},
      {"corpus", kCorpus},
      {"solver.census_max_n", "7"},
      {"solver.random_count", "500"},
      {"solver.random_min_n", "8"},
      {"solver.random_max_n", "14"},
      {"chen.max_n", "7"},
      {"hanson-wang.max_n", "7"},
      {"zeta0-bound.max_n", "8"},
      {"theorem-k3.k", "4"},
      {"theorem-k3.max_n", "9"},
      {"theorem-k3.grid_k", "4,5,6"},
      {"theorem-k3.grid_nl", "1,2"},
      {"theorem-k3.grid_m", "1/1,1/2"},
      {"theorem-k3.grid_r", "0,1"},
      {"realizability.k_min", "4"},
      {"realizability.k_max", "8"},
      {"factor.instances",
       "FIG4:n=4 | X:s=3 | X:s=5 | G5:l1=2,l2=2 | EXT:n=2/1;X:s=3 | EXT:n=2/2/1;X:s=3"},
      {"factor.census_max_n", "7"},
      {"bicritical.instances", "A:t1=3,t2=2 | EXT:n=2/3;A:t1=3,t2=2 | EXT:n=3/2;A:t1=3,t2=2"},
      {"bicritical.census_max_n", "7"},
      {"lemma.census_max_n", "7"},
      {"matching.random_count", "300"},
      {"matching.random_max_n", "10"},
      {"matching.favaron_max_n", "10"},
  };
  return m;
}

Manifest Manifest::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadParameter, "cannot open manifest " + path);
  Manifest m = defaults();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(Errc::BadFormat, path + ":" + std::to_string(lineno) + ": expected key = value");
    m.values_[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return m;
}

std::string Manifest::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw Error(Errc::BadParameter, "manifest has no key " + key);
  return it->second;
}

int Manifest::get_int(const std::string& key) const {
  try {
    return std::stoi(get(key));
  } catch (const std::logic_error&) {
    throw Error(Errc::BadFormat, "manifest key " + key + " is not an integer");
  }
}

std::vector<int> Manifest::get_ints(const std::string& key) const {
  std::vector<int> out;
  for (const auto& s : split(get(key), ',')) {
    try {
      out.push_back(std::stoi(s));
    } catch (const std::logic_error&) {
      throw Error(Errc::BadFormat, "manifest key " + key + " has a non-integer entry");
    }
  }
  return out;
}

std::vector<std::string> Manifest::get_specs(const std::string& key) const {
  auto v = get(key);
  return split(v, v.find('|') != std::string::npos ? '|' : ',');
}

int SuiteReport::failures() const {
  return static_cast<int>(std::count_if(instances.begin(), instances.end(), [](const auto& r) { return !r.pass; }));
}

nlohmann::json SuiteReport::to_json(bool failures_only) const {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : instances) {
    if (failures_only && r.pass) continue;
    nlohmann::json j = {{"id", r.id}, {"pass", r.pass}};
    if (!r.graph6.empty()) j["graph6"] = r.graph6;
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (!r.witness.empty()) j["witness"] = r.witness;
    results.push_back(std::move(j));
  }
  return {{"schema", "cdcrit/1"},   {"suite", suite},           {"instances", instances.size()},
          {"failures", failures()}, {"passed", passed()},       {"seconds", seconds},
          {"results", results}};
}

std::vector<std::string> suite_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : registry()) ids.push_back(id);
  return ids;
}

SuiteReport run_suite(const std::string& id, const Manifest& manifest) {
  auto it = registry().find(id);
  if (it == registry().end()) throw Error(Errc::BadParameter, "unknown suite " + id);
  SuiteReport rep;
  rep.suite = id;
  Timer t;
  it->second(manifest, rep);
  rep.seconds = t.seconds();
  return rep;
}

std::vector<std::string> check_claims(const Family& f) {
  std::vector<std::string> bad;
  const Graph& g = f.graph;
  const Claims& c = f.claims;
  auto mismatch = [&](const std::string& what, auto got, auto want) {
    if (got != want) {
      std::ostringstream s;
      s << std::boolalpha << what << " = " << got << ", claimed " << want;
      bad.push_back(s.str());
    }
  };
  if (c.gamma_c) mismatch("gamma_c", gamma_c(g).gamma_c, *c.gamma_c);
  if (c.critical) mismatch("critical", is_critical(g), *c.critical);
  if (c.zeta || c.zeta0) {
    auto d = decompose(g);
    if (c.zeta) mismatch("zeta", d.zeta, *c.zeta);
    if (c.zeta0) mismatch("zeta0", d.zeta0, *c.zeta0);
  }
  if (c.min_degree_at_least && g.min_degree() < *c.min_degree_at_least)
    bad.push_back("min degree = " + std::to_string(g.min_degree()) + ", claimed >= " +
                  std::to_string(*c.min_degree_at_least));
  if (c.claw_free) mismatch("claw_free", static_cast<bool>(is_claw_free(g)), *c.claw_free);
  if (c.odd_order) mismatch("odd_order", g.order() % 2 == 1, *c.odd_order);
  for (const auto& fc : c.factor) {
    std::string tag = "ell = " + std::to_string(fc.ell) + ": ";
    if ((g.order() - fc.ell) % 2) {
      bad.push_back(tag + "order " + std::to_string(g.order()) + " has the wrong parity");
      continue;
    }
    auto v = is_factor_critical(g, fc.ell);
    mismatch(tag + "factor-critical", v.holds, fc.holds);
    if (fc.witness) {
      auto it = f.marks.find(*fc.witness);
      if (it == f.marks.end())
        bad.push_back(tag + "witness set " + *fc.witness + " is not marked");
      else if (!favaron_violation(g, it->second, fc.ell))
        bad.push_back(tag + "witness set " + *fc.witness + " " + it->second.to_string() +
                      " does not violate the odd-component condition");
    }
    if (g.min_degree() >= fc.ell + 1) mismatch(tag + "odd-component condition", favaron_check(g, fc.ell).holds, v.holds);
  }
  return bad;
}

Graph random_connected_graph(std::mt19937_64& rng, int n) {
  double p = std::uniform_real_distribution<double>(0.15, 0.85)(rng);
  while (true) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (std::bernoulli_distribution(p)(rng)) b.add_edge(u, v);
    Graph g = b.finish();
    if (is_connected(g)) return g;
  }
}

std::vector<Graph> random_corpus(std::uint64_t seed, int count, int min_n, int max_n) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i)
    out.push_back(random_connected_graph(rng, std::uniform_int_distribution<int>(min_n, max_n)(rng)));
  return out;
}

std::vector<Graph> all_graphs(int n) {
  std::vector<Graph> out;
  for (auto key : connected_keys(n)) {
    Graph g = detail::unpack_key(key);
    Graph c = complement(g);
    bool disconnected_complement = !is_connected(c);
    out.push_back(std::move(g));
    if (disconnected_complement) out.push_back(std::move(c));
  }
  return out;
}

nlohmann::json set_json(const Graph& g, const VertexSet& s) {
  nlohmann::json out = nlohmann::json::array();
  s.for_each([&](Vertex v) { out.push_back(g.label(v)); });
  return out;
}

}  // namespace cdcrit
