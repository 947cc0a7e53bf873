#include "cdcrit/families.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "cdcrit/canonical.hpp"
#include "cdcrit/census.hpp"
#include "cdcrit/decomposition.hpp"
#include "cdcrit/gamma.hpp"
#include "cdcrit/structure.hpp"

namespace cdcrit {

namespace {

constexpr const char* kTagNames[] = {"B0", "B1", "B21", "B22", "G1", "G2", "HL",
                                     "F", "X", "G5", "A", "FIG4", "CYCLE", "EXT"};

void require(bool ok, const std::string& msg) {
  if (!ok) throw Error(Errc::BadParameter, msg);
}

std::string idx(const std::string& prefix, int i) { return prefix + std::to_string(i); }
std::string idx(const std::string& prefix, int i, int j) {
  return prefix + std::to_string(i) + "_" + std::to_string(j);
}

std::vector<Vertex> add_many(GraphBuilder& b, int count, const std::function<std::string(int)>& name) {
  std::vector<Vertex> out;
  for (int i = 1; i <= count; ++i) out.push_back(b.add_vertex(name(i)));
  return out;
}

void path_edges(GraphBuilder& b, const std::vector<Vertex>& p) {
  for (std::size_t i = 1; i < p.size(); ++i) b.add_edge(p[i - 1], p[i]);
}

VertexSet set_of(int n, const std::vector<Vertex>& vs) { return VertexSet(n, vs); }

// Copies g into b; returns the new index of each vertex of g.
std::vector<Vertex> embed(GraphBuilder& b, const Graph& g) {
  std::vector<Vertex> at;
  for (Vertex v = 0; v < g.order(); ++v) at.push_back(b.add_vertex(g.label(v)));
  for (auto [u, v] : g.edges()) b.add_edge(at[u], at[v]);
  return at;
}

VertexSet shift(const VertexSet& s, const std::vector<Vertex>& at, int n) {
  VertexSet out(n);
  s.for_each([&](Vertex v) { out.insert(at[v]); });
  return out;
}

FamilySpec make_spec(FamilyTag tag, std::map<std::string, std::vector<int>> params) {
  FamilySpec s;
  s.tag = tag;
  s.params = std::move(params);
  return s;
}

}  // namespace

const char* tag_name(FamilyTag tag) { return kTagNames[static_cast<int>(tag)]; }

std::optional<FamilyTag> parse_tag(const std::string& s) {
  for (int i = 0; i < static_cast<int>(std::size(kTagNames)); ++i)
    if (s == kTagNames[i]) return static_cast<FamilyTag>(i);
  return std::nullopt;
}

FamilySpec FamilySpec::parse(const std::string& text) {
  auto semi = text.find(';');
  std::string head = text.substr(0, semi);
  FamilySpec spec;
  auto colon = head.find(':');
  auto tag = parse_tag(head.substr(0, colon));
  if (!tag) throw Error(Errc::BadFormat, "unknown family tag in '" + text + "'");
  spec.tag = *tag;
  if (colon != std::string::npos) {
    std::stringstream items(head.substr(colon + 1));
    std::string item;
    while (std::getline(items, item, ',')) {
      if (item.empty()) continue;
      auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) throw Error(Errc::BadFormat, "expected key=value, got '" + item + "'");
      std::vector<int> values;
      std::stringstream vs(item.substr(eq + 1));
      std::string v;
      while (std::getline(vs, v, '/')) {
        try {
          std::size_t used = 0;
          values.push_back(std::stoi(v, &used));
          if (used != v.size()) throw std::invalid_argument(v);
        } catch (const std::exception&) {
          throw Error(Errc::BadFormat, "bad integer '" + v + "' in '" + item + "'");
        }
      }
      if (values.empty()) throw Error(Errc::BadFormat, "no value for '" + item.substr(0, eq) + "'");
      spec.params[item.substr(0, eq)] = values;
    }
  }
  if (semi != std::string::npos) {
    if (spec.tag != FamilyTag::EXT) throw Error(Errc::BadFormat, "only EXT takes a base family");
    spec.base.push_back(parse(text.substr(semi + 1)));
  } else if (spec.tag == FamilyTag::EXT) {
    throw Error(Errc::BadFormat, "EXT needs a base family after ';'");
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out = tag_name(tag);
  char sep = ':';
  for (const auto& [key, values] : params) {
    out += sep;
    out += key + "=";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "/" : "") + std::to_string(values[i]);
    sep = ',';
  }
  if (!base.empty()) out += ";" + base.front().to_string();
  return out;
}

int FamilySpec::get(const std::string& key, std::optional<int> fallback) const {
  auto it = params.find(key);
  if (it == params.end()) {
    if (fallback) return *fallback;
    throw Error(Errc::BadParameter, std::string(tag_name(tag)) + " needs parameter " + key);
  }
  if (it->second.size() != 1) throw Error(Errc::BadParameter, "parameter " + key + " takes one value");
  return it->second.front();
}

std::vector<int> FamilySpec::list(const std::string& key, std::vector<int> fallback) const {
  auto it = params.find(key);
  if (it != params.end()) return it->second;
  if (!fallback.empty()) return fallback;
  throw Error(Errc::BadParameter, std::string(tag_name(tag)) + " needs parameter " + key);
}

Family gen_b0(int t1) {
  require(t1 >= 1, "B0 needs t1 >= 1");
  GraphBuilder b;
  Vertex c = b.add_vertex("c");
  auto k = add_many(b, t1, [](int i) { return idx("k", i); });
  b.make_clique(k);
  b.connect_all({c}, k);
  Family f;
  f.graph = b.finish();
  f.spec = make_spec(FamilyTag::B0, {{"t", {t1}}});
  f.head = c;
  return f;
}

Family gen_b1(int t2) {
  require(t2 >= 2, "B1 needs t2 >= 2");
  GraphBuilder b;
  Vertex c = b.add_vertex("c");
  auto k = add_many(b, t2, [](int i) { return idx("k", i); });
  Vertex z = b.add_vertex("z1");
  b.make_clique(k);
  b.connect_all({c}, k);
  b.connect_all(k, {z});
  Family f;
  f.graph = b.finish();
  f.spec = make_spec(FamilyTag::B1, {{"t", {t2}}});
  f.head = c;
  return f;
}

Family gen_b21(int t3, int t4) {
  require(t3 >= 2 && t4 >= 2, "B21 needs t3, t4 >= 2");
  GraphBuilder b;
  Vertex c = b.add_vertex("c");
  auto k3 = add_many(b, t3, [](int i) { return idx("p", i); });
  auto k4 = add_many(b, t4, [](int i) { return idx("q", i); });
  Vertex z = b.add_vertex("z2");
  b.make_clique(k3);
  b.make_clique(k4);
  b.connect_all({c}, k3);
  b.connect_all(k3, k4);
  b.connect_all(k4, {z});
  Family f;
  f.graph = b.finish();
  f.spec = make_spec(FamilyTag::B21, {{"t3", {t3}}, {"t4", {t4}}});
  f.head = c;
  return f;
}

Family gen_b22(const std::vector<int>& m, int r) {
  require(m.size() >= 2, "B22 needs at least two stars");
  require(r >= 0, "B22 needs r >= 0");
  for (int mi : m) require(mi >= 1, "B22 stars need at least one leaf");
  GraphBuilder b;
  Vertex c = b.add_vertex("c");
  std::vector<Vertex> leaves, centres, extra, inner;
  std::vector<Edge> star_edges;
  for (std::size_t i = 0; i < m.size(); ++i) {
    int si = static_cast<int>(i) + 1;
    Vertex s0 = b.add_vertex(idx("s", si, 0));
    centres.push_back(s0);
    inner.push_back(s0);
    for (int j = 1; j <= m[i]; ++j) {
      Vertex sj = b.add_vertex(idx("s", si, j));
      leaves.push_back(sj);
      inner.push_back(sj);
      star_edges.emplace_back(s0, sj);
    }
  }
  for (int j = 1; j <= r; ++j) {
    extra.push_back(b.add_vertex(idx("t", j)));
    inner.push_back(extra.back());
  }
  for (std::size_t i = 0; i < inner.size(); ++i)
    for (std::size_t j = i + 1; j < inner.size(); ++j) {
      Edge e(inner[i], inner[j]);
      if (std::find(star_edges.begin(), star_edges.end(), e) == star_edges.end()) b.add_edge(e.first, e.second);
    }
  b.connect_all({c}, leaves);
  Family f;
  f.graph = b.finish();
  int n = f.graph.order();
  f.spec = make_spec(FamilyTag::B22, {{"m", m}, {"r", {r}}});
  f.head = c;
  f.marks["S"] = set_of(n, leaves);
  f.marks["S1"] = set_of(n, centres);
  f.marks["S2"] = set_of(n, extra);
  return f;
}

Family gen_g1(int k, int l, int n_l, const std::vector<int>& m, int r) {
  require(k >= 4, "G1 needs k >= 4");
  require(l >= 1 && l <= k - 3, "G1 unit position must lie in 1..k-3");
  require(n_l >= 1, "G1 needs n_l >= 1");
  Family block = gen_b22(m, r);
  GraphBuilder b;
  auto cs = add_many(b, k - 3, [](int i) { return idx("c", i - 1); });
  auto kl = add_many(b, n_l, [](int i) { return idx("k", i); });
  b.make_clique(kl);
  auto at = embed(b, block.graph);
  Vertex c = at[block.head];
  if (l < k - 3) {
    // c_0..c_{l-1} | K | c_l..c_{k-4}, then c_{k-4} c
    path_edges(b, std::vector<Vertex>(cs.begin(), cs.begin() + l));
    path_edges(b, std::vector<Vertex>(cs.begin() + l, cs.end()));
    b.connect_all({cs[l - 1]}, kl);
    b.connect_all(kl, {cs[l]});
    b.add_edge(cs.back(), c);
  } else {
    path_edges(b, cs);
    b.connect_all({cs.back()}, kl);
    b.connect_all(kl, {c});
  }
  Family f;
  f.graph = b.finish();
  int n = f.graph.order();
  f.spec = make_spec(FamilyTag::G1, {{"k", {k}}, {"l", {l}}, {"n", {n_l}}, {"m", m}, {"r", {r}}});
  f.head = c;
  f.marks["K"] = set_of(n, kl);
  f.marks["B"] = shift(VertexSet::full(block.graph.order()), at, n);
  for (const auto& [name, s] : block.marks) f.marks[name] = shift(s, at, n);
  f.claims.gamma_c = k;
  f.claims.zeta = k - 3;
  f.claims.critical = true;
  return f;
}

Family gen_g2(int k, const Family& block, bool allow_k4) {
  require(k >= 5 || (k == 4 && allow_k4), "G2 needs k >= 5 (k = 4 only when allowed explicitly)");
  if (block.head < 0) throw Error(Errc::BadParameter, "G2 block has no head");
  if (!is_b3_block(block.graph, block.head))
    throw Error(Errc::Precondition, "G2 block fails the B3 properties");
  GraphBuilder b;
  auto cs = add_many(b, k - 3, [](int i) { return idx("c", i - 1); });
  path_edges(b, cs);
  auto at = embed(b, block.graph);
  b.set_label(at[block.head], idx("c", k - 3));
  b.add_edge(cs.back(), at[block.head]);
  Family f;
  f.graph = b.finish();
  int n = f.graph.order();
  f.spec = make_spec(FamilyTag::G2, {{"k", {k}}});
  if (allow_k4) f.spec.params["k4"] = {1};
  f.head = at[block.head];
  f.marks["B"] = shift(VertexSet::full(block.graph.order()), at, n);
  f.claims.gamma_c = k;
  f.claims.zeta = k - 3;
  f.claims.critical = true;
  return f;
}

Family gen_g2(int k, bool allow_k4) { return gen_g2(k, default_b3_block(), allow_k4); }

Family default_b3_block() {
  // b on a 6-cycle b a1 w1 t w2 a2, chord a1 a2.
  Family f;
  f.graph = Graph::build(6, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 5}},
                         {"b", "a1", "a2", "w1", "w2", "t"});
  f.spec = make_spec(FamilyTag::G2, {});
  f.head = 0;
  return f;
}

std::optional<Family> search_b3_block(int max_n) {
  for (int n = 3; n <= max_n; ++n) {
    for (auto key : connected_keys(n)) {
      Graph g = detail::unpack_key(key);
      if (!decompose(g).cut_vertices.empty()) continue;
      for (Vertex h = 0; h < n; ++h) {
        if (!is_b3_block(g, h, B3Rule::WithHeadBound)) continue;
        Family f;
        f.graph = g;
        f.head = h;
        return f;
      }
    }
  }
  return std::nullopt;
}

Family gen_hl(const std::vector<int>& sizes, std::vector<int> miss) {
  const int l = static_cast<int>(sizes.size());
  require(l >= 2, "H block needs l >= 2");
  for (int s : sizes) require(s >= 2, "H block sets need order >= 2");
  const int prev = sizes[l - 2], last = sizes[l - 1];
  if (miss.empty())
    for (int j = 0; j < prev; ++j) miss.push_back(j % last);
  require(static_cast<int>(miss.size()) == prev, "missing-edge pattern needs one entry per vertex of U_{l-1}");
  for (int t : miss) require(t >= 0 && t < last, "missing-edge pattern entry out of range");
  for (int t = 0; t < last; ++t)
    require(std::count(miss.begin(), miss.end(), t) < prev, "pattern leaves a vertex of U_l without neighbours");

  GraphBuilder b;
  Vertex x = b.add_vertex("x");
  std::vector<std::vector<Vertex>> u;
  for (int i = 0; i < l; ++i)
    u.push_back(add_many(b, sizes[i], [i](int j) { return idx("u", i + 1, j); }));
  std::vector<Vertex> head_part = u[0];
  head_part.push_back(x);
  b.make_clique(head_part);
  for (int i = 0; i + 2 < l; ++i) {
    std::vector<Vertex> pair = u[i];
    pair.insert(pair.end(), u[i + 1].begin(), u[i + 1].end());
    b.make_clique(pair);
  }
  b.make_clique(u[l - 1]);
  for (int j = 0; j < prev; ++j)
    for (int t = 0; t < last; ++t)
      if (t != miss[j]) b.add_edge(u[l - 2][j], u[l - 1][t]);
  Family f;
  f.graph = b.finish();
  f.spec = make_spec(FamilyTag::HL, {{"u", sizes}, {"miss", miss}});
  f.head = x;
  for (int i = 0; i < l; ++i) f.marks[idx("U", i + 1)] = set_of(f.graph.order(), u[i]);
  return f;
}

Family gen_f(int p, int q, int r, int s) {
  require(p >= 0 && q >= 2 && r >= 2, "F needs p >= 0, q >= 2, r >= 2");
  require(s >= 2, "F block sets need order >= 2");
  GraphBuilder b;
  std::vector<Vertex> heads;
  auto add_block = [&](int ell, int which) {
    Family h = gen_hl(std::vector<int>(ell, s));
    auto at = embed(b, h.graph);
    for (Vertex v = 0; v < h.graph.order(); ++v)
      b.set_label(at[v], v == h.head ? idx("c", which) : "h" + std::to_string(which) + h.graph.label(v));
    heads.push_back(at[h.head]);
  };
  for (int i = 1; i <= p; ++i) add_block(2, i);
  std::vector<Vertex> path{b.add_vertex(idx("c", p + 1))};
  for (int j = 1; j < q; ++j) path.push_back(b.add_vertex(idx("d", j)));
  path_edges(b, path);
  heads.push_back(path.front());
  add_block(r, p + 2);
  b.make_clique(heads);
  Family f;
  f.graph = b.finish();
  f.spec = make_spec(FamilyTag::F, {{"p", {p}}, {"q", {q}}, {"r", {r}}, {"s", {s}}});
  f.marks["heads"] = set_of(f.graph.order(), heads);
  f.claims.gamma_c = r + q + 3 * p;
  f.claims.zeta = p + q;
  f.claims.zeta0 = p + 2;
  f.claims.critical = true;
  return f;
}

FamilySpec realizing_spec(int k, int zeta, int zeta0) {
  return make_spec(FamilyTag::F, {{"p", {zeta0 - 2}}, {"q", {zeta - zeta0 + 2}}, {"r", {k - zeta - 2 * zeta0 + 4}}});
}

Family gen_x(int s) {
  require(s >= 3, "X needs s >= 3");
  GraphBuilder b;
  auto a = add_many(b, s, [](int i) { return idx("a", i); });
  auto bb = add_many(b, s, [](int i) { return idx("b", i); });
  auto y = add_many(b, s, [](int i) { return idx("y", i); });
  b.make_clique(y);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      if (i != j) {
        b.add_edge(a[i], bb[j]);
        b.add_edge(a[i], y[j]);
      }
  Family f;
  f.graph = b.finish();
  int n = f.graph.order();
  f.spec = make_spec(FamilyTag::X, {{"s", {s}}});
  f.marks["A"] = set_of(n, a);
  f.marks["B"] = set_of(n, bb);
  f.marks["K"] = set_of(n, y);
  f.marks["H"] = f.marks["K"];
  f.claims.gamma_c = 4;
  f.claims.critical = true;
  f.claims.min_degree_at_least = 2;
  if (s % 2 == 1) {
    f.claims.odd_order = true;
    f.claims.factor.push_back({1, false, "A"});
  }
  return f;
}

Family gen_g5(int l1, int l2) {
  require(l1 >= 2 && l2 >= 2, "G5 needs l1, l2 >= 2");
  if ((l1 + l2) % 2) throw Error(Errc::ParityMismatch, "G5 needs l1 + l2 even");
  GraphBuilder b;
  Vertex u = b.add_vertex("u");
  auto k1 = add_many(b, l1, [](int i) { return idx("p", i); });
  auto k2 = add_many(b, l2, [](int i) { return idx("q", i); });
  Vertex xp = b.add_vertex("x'"), yp = b.add_vertex("y'");
  Vertex x = b.add_vertex("x"), y = b.add_vertex("y"), z = b.add_vertex("z"), w = b.add_vertex("w");
  b.make_clique(k1);
  b.make_clique(k2);
  b.connect_all({u}, k1);
  b.connect_all(k1, k2);
  b.connect_all(k2, {xp, yp});
  b.add_edge(xp, yp);
  b.add_edge(x, xp);
  b.add_edge(y, yp);
  b.connect_all({w}, {xp, yp});
  b.connect_all({z}, {x, y, w});
  Family f;
  f.graph = b.finish();
  f.spec = make_spec(FamilyTag::G5, {{"l1", {l1}}, {"l2", {l2}}});
  f.marks["S"] = set_of(f.graph.order(), {xp, yp, z});
  f.claims.gamma_c = 5;
  f.claims.critical = true;
  f.claims.odd_order = true;
  f.claims.min_degree_at_least = 2;
  f.claims.factor.push_back({1, false, "S"});
  return f;
}

Family gen_a(int t1, int t2) {
  require(t1 >= 3 && t2 >= 2, "A needs t1 >= 3 and t2 >= 2");
  if (t1 % 2 == 0 || t2 % 2 == 1) throw Error(Errc::ParityMismatch, "A needs t1 odd and t2 even");
  GraphBuilder b;
  Vertex x1 = b.add_vertex("x1"), x2 = b.add_vertex("x2"), x3 = b.add_vertex("x3");
  auto p = add_many(b, t1, [](int i) { return idx("p", i); });
  auto q = add_many(b, t2, [](int i) { return idx("q", i); });
  b.make_clique(p);
  b.make_clique(q);
  b.connect_all({x1}, p);
  b.connect_all(p, {x2});
  b.add_edge(x2, x3);
  b.connect_all({x1}, q);
  b.connect_all(q, {x3});
  Family f;
  f.graph = b.finish();
  int n = f.graph.order();
  f.spec = make_spec(FamilyTag::A, {{"t1", {t1}}, {"t2", {t2}}});
  auto h = q;
  h.push_back(x3);
  f.marks["H"] = set_of(n, h);
  f.marks["S"] = set_of(n, {x1, x2});
  f.claims.gamma_c = 3;
  f.claims.critical = true;
  f.claims.claw_free = true;
  f.claims.min_degree_at_least = 3;
  f.claims.factor.push_back({2, false, "S"});
  return f;
}

Family gen_fig4(int n) {
  require(n >= 2, "FIG4 needs n >= 2");
  GraphBuilder b;
  Vertex c = b.add_vertex("c");
  auto leaf = add_many(b, n, [](int i) { return idx("l", i); });
  auto k = add_many(b, n, [](int i) { return idx("k", i); });
  b.make_clique(k);
  b.connect_all({c}, leaf);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) b.add_edge(leaf[i], k[j]);
  Family f;
  f.graph = b.finish();
  f.spec = make_spec(FamilyTag::FIG4, {{"n", {n}}});
  f.claims.gamma_c = 3;
  f.claims.critical = true;
  f.claims.odd_order = true;
  f.claims.min_degree_at_least = 2;
  f.claims.factor.push_back({1, false, std::nullopt});
  return f;
}

Family gen_cycle(int k) {
  require(k >= 1, "CYCLE needs k >= 1");
  std::vector<std::string> labels;
  for (int i = 1; i <= k + 2; ++i) labels.push_back(idx("c", i));
  Family f;
  f.graph = cycle_graph(k + 2).with_labels(labels);
  f.spec = make_spec(FamilyTag::CYCLE, {{"k", {k}}});
  f.marks["H"] = VertexSet(k + 2, {0, 1});
  f.claims.gamma_c = k;
  f.claims.critical = true;
  return f;
}

Family extend_pk(const Family& base, const std::vector<int>& sizes, bool check) {
  require(!sizes.empty(), "extension needs at least one clique");
  for (int s : sizes) require(s >= 1, "extension cliques need order >= 1");
  auto hit = base.marks.find("H");
  if (hit == base.marks.end()) throw Error(Errc::Precondition, "base family has no marked clique H");
  if (check && !is_pk_member(base.graph, hit->second))
    throw Error(Errc::Precondition, "base family fails the P(k) properties for H");
  int k = base.claims.gamma_c ? *base.claims.gamma_c : gamma_c(base.graph).gamma_c;

  GraphBuilder b;
  Vertex x0 = b.add_vertex("x0");
  std::vector<Vertex> prev{x0};
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    auto ki = add_many(b, sizes[i], [i](int j) { return idx("K", static_cast<int>(i) + 1, j); });
    b.make_clique(ki);
    b.connect_all(prev, ki);
    prev = ki;
  }
  auto at = embed(b, base.graph);
  std::vector<Vertex> h;
  hit->second.for_each([&](Vertex v) { h.push_back(at[v]); });
  b.connect_all(prev, h);

  Family f;
  f.graph = b.finish();
  int n = f.graph.order();
  f.spec.tag = FamilyTag::EXT;
  f.spec.params["n"] = sizes;
  f.spec.base.push_back(base.spec);
  for (const auto& [name, s] : base.marks) f.marks[name] = shift(s, at, n);
  f.marks["Y"] = set_of(n, prev);
  f.claims.gamma_c = k + static_cast<int>(sizes.size());
  f.claims.critical = true;
  f.claims.claw_free = base.claims.claw_free;
  f.claims.min_degree_at_least = base.claims.min_degree_at_least;
  for (const auto& fc : base.claims.factor) {
    if (fc.holds || !fc.witness || (n - fc.ell) % 2) continue;
    if (fc.ell == 1 && sizes.back() == 1) {
      f.marks["S"] = f.marks[*fc.witness] | f.marks["Y"];
      f.claims.factor.push_back({1, false, "S"});
    } else if (fc.ell == 2) {
      f.claims.factor.push_back(fc);
    }
  }
  if (f.claims.factor.size() && f.claims.factor.front().ell == 1) f.claims.odd_order = true;
  return f;
}

Family generate(const FamilySpec& spec) {
  switch (spec.tag) {
    case FamilyTag::B0: return gen_b0(spec.get("t"));
    case FamilyTag::B1: return gen_b1(spec.get("t"));
    case FamilyTag::B21: return gen_b21(spec.get("t3"), spec.get("t4"));
    case FamilyTag::B22: return gen_b22(spec.list("m", {1, 1}), spec.get("r", 0));
    case FamilyTag::G1:
      return gen_g1(spec.get("k"), spec.get("l"), spec.get("n"), spec.list("m", {1, 1}), spec.get("r", 0));
    case FamilyTag::G2: return gen_g2(spec.get("k"), spec.get("k4", 0) != 0);
    case FamilyTag::HL: {
      auto it = spec.params.find("miss");
      return gen_hl(spec.list("u"), it == spec.params.end() ? std::vector<int>{} : it->second);
    }
    case FamilyTag::F: return gen_f(spec.get("p"), spec.get("q"), spec.get("r"), spec.get("s", 2));
    case FamilyTag::X: return gen_x(spec.get("s"));
    case FamilyTag::G5: return gen_g5(spec.get("l1"), spec.get("l2"));
    case FamilyTag::A: return gen_a(spec.get("t1"), spec.get("t2"));
    case FamilyTag::FIG4: return gen_fig4(spec.get("n"));
    case FamilyTag::CYCLE: return gen_cycle(spec.get("k"));
    case FamilyTag::EXT:
      if (spec.base.size() != 1) throw Error(Errc::BadParameter, "EXT needs exactly one base family");
      return extend_pk(generate(spec.base.front()), spec.list("n"));
  }
  throw Error(Errc::BadParameter, "unknown family tag");
}

}  // namespace cdcrit
