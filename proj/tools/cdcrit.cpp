// Command-line front end. Exit codes: 0 all checks pass, 1 a check failed,
// 2 usage or input error.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cdcrit/census.hpp"
#include "cdcrit/criticality.hpp"
#include "cdcrit/decomposition.hpp"
#include "cdcrit/families.hpp"
#include "cdcrit/gamma.hpp"
#include "cdcrit/graph6.hpp"
#include "cdcrit/harness.hpp"
#include "cdcrit/matching.hpp"
#include "cdcrit/structure.hpp"

using namespace cdcrit;
using nlohmann::json;

namespace {

struct Input {
  std::string graph6;
  std::string file;
};

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("-g,--graph6", in.graph6, "graph6 string (default: read graphs from stdin)");
  cmd->add_option("-i,--input", in.file, "file with one graph6 string per line");
}

std::vector<Graph> read_graphs(const Input& in) {
  if (!in.graph6.empty()) return {from_graph6(in.graph6)};
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) throw Error(Errc::BadParameter, "cannot open " + in.file);
    return read_graph6_stream(f);
  }
  return read_graph6_stream(std::cin);
}

Vertex resolve(const Graph& g, const std::string& ref) {
  Vertex v = g.find_label(ref);
  if (v >= 0) return v;
  try {
    std::size_t used = 0;
    v = std::stoi(ref, &used);
    if (used == ref.size() && v >= 0 && v < g.order()) return v;
  } catch (const std::logic_error&) {
  }
  throw Error(Errc::VertexOutOfRange, "no vertex '" + ref + "'");
}

VertexSet resolve_set(const Graph& g, const std::string& refs) {
  VertexSet s(g.order());
  std::stringstream in(refs);
  std::string item;
  while (std::getline(in, item, ',')) s.insert(resolve(g, item));
  return s;
}

json base_json(const Graph& g) { return {{"schema", "cdcrit/1"}, {"graph6", to_graph6(g)}, {"n", g.order()}}; }

json family_json(const Family& f) {
  json j = base_json(f.graph);
  j["spec"] = f.spec.to_string();
  j["labels"] = json::array();
  for (Vertex v = 0; v < f.graph.order(); ++v) j["labels"].push_back(f.graph.label(v));
  if (f.head >= 0) j["head"] = f.graph.label(f.head);
  j["marks"] = json::object();
  for (const auto& [name, s] : f.marks) j["marks"][name] = set_json(f.graph, s);
  json c = json::object();
  const Claims& cl = f.claims;
  if (cl.gamma_c) c["gamma_c"] = *cl.gamma_c;
  if (cl.zeta) c["zeta"] = *cl.zeta;
  if (cl.zeta0) c["zeta0"] = *cl.zeta0;
  if (cl.min_degree_at_least) c["min_degree_at_least"] = *cl.min_degree_at_least;
  if (cl.critical) c["critical"] = *cl.critical;
  if (cl.claw_free) c["claw_free"] = *cl.claw_free;
  if (cl.odd_order) c["odd_order"] = *cl.odd_order;
  for (const auto& fc : cl.factor) {
    json e = {{"ell", fc.ell}, {"holds", fc.holds}};
    if (fc.witness) e["witness"] = *fc.witness;
    c["factor_critical"].push_back(e);
  }
  j["claims"] = c;
  return j;
}

json verdict_json(const Graph& g, const StructureVerdict& v) {
  json j = base_json(g);
  j["holds"] = v.holds;
  if (!v.note.empty()) j["note"] = v.note;
  for (const auto& [name, s] : v.witness) j["witness"][name] = set_json(g, s);
  return j;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

// Suite-specific manifest key that --max-n overrides.
std::string max_n_key(const std::string& suite) {
  static const std::map<std::string, std::string> keys = {
      {"solver", "solver.census_max_n"},     {"chen", "chen.max_n"},
      {"hanson-wang", "hanson-wang.max_n"},  {"zeta0-bound", "zeta0-bound.max_n"},
      {"theorem-k3", "theorem-k3.max_n"},    {"factor", "factor.census_max_n"},
      {"bicritical", "bicritical.census_max_n"}, {"lemma1", "lemma.census_max_n"},
      {"block-lemmas", "lemma.census_max_n"}, {"bad-subgraph", "lemma.census_max_n"},
      {"anan-matching", "lemma.census_max_n"}, {"matching", "matching.favaron_max_n"},
  };
  auto it = keys.find(suite);
  if (it == keys.end()) throw Error(Errc::BadParameter, "suite " + suite + " takes no --max-n");
  return it->second;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connected-domination critical graph toolkit"};
  app.require_subcommand(1);
  std::string format = "json";

  // gen
  auto* gen = app.add_subcommand("gen", "generate a family member");
  std::string family, params, sidecar;
  std::string gen_format = "graph6";
  gen->add_option("-f,--family", family, "family tag, or a full spec such as F:p=1,q=2,r=2")->required();
  gen->add_option("-p,--params", params, "parameters, e.g. p=1,q=2,r=2 (lists use '/')");
  gen->add_option("--format", gen_format, "graph6 or json")->check(CLI::IsMember({"graph6", "json"}));
  gen->add_option("--sidecar", sidecar, "write the JSON claims sidecar to this file");

  // gamma-c
  Input gin;
  bool all_sets = false;
  auto* gcmd = app.add_subcommand("gamma-c", "connected domination number");
  add_input(gcmd, gin);
  gcmd->add_flag("--all", all_sets, "list every minimum connected dominating set");

  // critical
  Input cin_;
  std::optional<int> want_k;
  auto* crit = app.add_subcommand("critical", "k-critical check with per-pair witnesses");
  add_input(crit, cin_);
  crit->add_option("-k,--k", want_k, "required value of gamma_c");

  // blocks
  Input bin;
  auto* blocks = app.add_subcommand("blocks", "cut vertices and blocks");
  add_input(blocks, bin);

  // factor-critical
  Input fin;
  int ell = 1;
  bool with_favaron = false;
  auto* fcmd = app.add_subcommand("factor-critical", "ell-factor-criticality");
  add_input(fcmd, fin);
  fcmd->add_option("-l,--ell", ell, "0, 1 or 2")->check(CLI::Range(0, 2));
  fcmd->add_flag("--favaron", with_favaron, "also scan the odd-component condition");

  // check
  Input kin;
  std::string property, head_ref, set_refs;
  int check_k = 2;
  auto* check = app.add_subcommand("check", "structural property");
  add_input(check, kin);
  check->add_option("--property", property, "property name")
      ->required()
      ->check(CLI::IsMember({"bad-subgraph", "b3", "pk", "claw-free", "diam-critical"}));
  check->add_option("--head", head_ref, "head vertex (label or index) for b3");
  check->add_option("--set", set_refs, "comma-separated clique H for pk");
  check->add_option("-k,--k", check_k, "target diameter for diam-critical");

  // verify
  std::string suite, manifest_path;
  std::optional<int> vk, vmax_n;
  std::vector<std::string> overrides;
  bool failures_only = false;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("-s,--suite", suite, "suite id")->required()->check(CLI::IsMember(suite_ids()));
  verify->add_option("-k,--k", vk, "k for theorem-k3");
  verify->add_option("--max-n", vmax_n, "census order bound");
  verify->add_option("-m,--manifest", manifest_path, "manifest file (key = value)");
  verify->add_option("--set", overrides, "manifest override key=value")->take_all();
  verify->add_flag("--failures-only", failures_only, "list failing instances only");

  // enumerate
  Input ein;
  std::optional<int> ek, ezeta, emax_n;
  int emin_n = 1;
  auto* en = app.add_subcommand("enumerate", "filter the census or a graph6 stream");
  add_input(en, ein);
  en->add_option("-k,--k", ek, "keep k-critical graphs");
  en->add_option("--zeta", ezeta, "keep graphs with this many cut vertices");
  en->add_option("--max-n", emax_n, "enumerate connected graphs internally up to this order");
  en->add_option("--min-n", emin_n, "smallest order for internal enumeration");
  en->add_option("--format", format, "graph6 or json")->check(CLI::IsMember({"graph6", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    int status = 0;
    if (*gen) {
      std::string text = family;
      if (!params.empty()) text += ":" + params;
      Family f = generate(FamilySpec::parse(text));
      json j = family_json(f);
      if (gen_format == "json")
        emit(j);
      else
        std::cout << to_graph6(f.graph) << "\n";
      if (!sidecar.empty()) {
        std::ofstream out(sidecar);
        if (!out) throw Error(Errc::BadParameter, "cannot write " + sidecar);
        out << j.dump(2) << "\n";
      }
    } else if (*gcmd) {
      for (const auto& g : read_graphs(gin)) {
        auto r = gamma_c(g, all_sets);
        json j = base_json(g);
        j["gamma_c"] = r.gamma_c;
        j["witness"] = set_json(g, r.witness);
        if (r.all_min_sets) {
          j["min_sets"] = json::array();
          for (const auto& d : *r.all_min_sets) j["min_sets"].push_back(set_json(g, d));
        }
        emit(j);
      }
    } else if (*crit) {
      for (const auto& g : read_graphs(cin_)) {
        auto rep = check_critical(g);
        json j = base_json(g);
        j["gamma_c"] = rep.k;
        j["critical"] = rep.is_critical && (!want_k || rep.k == *want_k);
        if (rep.failing_pair) j["failing_pair"] = {g.label(rep.failing_pair->first), g.label(rep.failing_pair->second)};
        j["records"] = json::array();
        for (const auto& r : rep.records)
          j["records"].push_back(
              {{"pair", {g.label(r.u), g.label(r.v)}}, {"gamma_c", r.gamma_c}, {"witness", set_json(g, r.witness)}});
        if (!j["critical"].get<bool>()) status = 1;
        emit(j);
      }
    } else if (*blocks) {
      for (const auto& g : read_graphs(bin)) {
        auto d = decompose(g);
        json j = base_json(g);
        j["cut_vertices"] = set_json(g, d.cut_vertices);
        j["blocks"] = json::array();
        for (const auto& b : d.blocks) j["blocks"].push_back(set_json(g, b));
        j["end_blocks"] = d.end_blocks;
        j["zeta"] = d.zeta;
        j["zeta0"] = d.zeta0;
        emit(j);
      }
    } else if (*fcmd) {
      for (const auto& g : read_graphs(fin)) {
        auto v = is_factor_critical(g, ell);
        json j = base_json(g);
        j["ell"] = ell;
        j["holds"] = v.holds;
        if (v.counterexample_set) j["counterexample_set"] = set_json(g, *v.counterexample_set);
        if (v.favaron_witness) {
          j["favaron_witness"] = set_json(g, *v.favaron_witness);
          j["odd_components"] = v.witness_odd_components;
        }
        if (with_favaron) {
          auto fv = favaron_check(g, ell);
          j["odd_component_condition"] = fv.holds;
          if (fv.favaron_witness) j["condition_witness"] = set_json(g, *fv.favaron_witness);
        }
        if (!v.holds) status = 1;
        emit(j);
      }
    } else if (*check) {
      for (const auto& g : read_graphs(kin)) {
        StructureVerdict v;
        if (property == "bad-subgraph") {
          v = find_bad_subgraph(g);
        } else if (property == "b3") {
          if (head_ref.empty()) throw Error(Errc::BadParameter, "b3 needs --head");
          v = is_b3_block(g, resolve(g, head_ref));
        } else if (property == "pk") {
          if (set_refs.empty()) throw Error(Errc::BadParameter, "pk needs --set");
          v = is_pk_member(g, resolve_set(g, set_refs));
        } else if (property == "claw-free") {
          v = is_claw_free(g);
        } else {
          v = is_diameter_critical(g, check_k);
        }
        if (!v.holds) status = 1;
        emit(verdict_json(g, v));
      }
    } else if (*verify) {
      Manifest m = manifest_path.empty() ? Manifest::defaults() : Manifest::load(manifest_path);
      if (vk) m.set("theorem-k3.k", std::to_string(*vk));
      if (vmax_n) m.set(max_n_key(suite), std::to_string(*vmax_n));
      for (const auto& o : overrides) {
        auto eq = o.find('=');
        if (eq == std::string::npos) throw Error(Errc::BadFormat, "override needs key=value: " + o);
        m.set(o.substr(0, eq), o.substr(eq + 1));
      }
      auto rep = run_suite(suite, m);
      std::cout << rep.to_json(failures_only).dump(2) << "\n";
      status = rep.passed() ? 0 : 1;
    } else if (*en) {
      GraphPredicate pred = [&](const Graph& g) {
        if (ezeta && decompose(g).zeta != *ezeta) return false;
        return !ek || (gamma_c(g).gamma_c == *ek && is_critical(g, *ek));
      };
      std::vector<Graph> out;
      if (emax_n) {
        out = census(*emax_n, pred, emin_n);
      } else if (!ein.graph6.empty()) {
        std::istringstream s(ein.graph6);
        out = census_stream(s, pred);
      } else if (!ein.file.empty()) {
        std::ifstream f(ein.file);
        if (!f) throw Error(Errc::BadParameter, "cannot open " + ein.file);
        out = census_stream(f, pred);
      } else {
        out = census_stream(std::cin, pred);
      }
      for (const auto& g : out) {
        if (format == "json") {
          json j = base_json(g);
          j["gamma_c"] = gamma_c(g).gamma_c;
          j["zeta"] = decompose(g).zeta;
          emit(j);
        } else {
          std::cout << to_graph6(g) << "\n";
        }
      }
    }
    return status;
  } catch (const Error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
