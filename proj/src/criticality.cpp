#include "cdcrit/criticality.hpp"

#include "cdcrit/decomposition.hpp"
#include "cdcrit/gamma.hpp"

namespace cdcrit {

CriticalityReport check_critical(const Graph& g) {
  CriticalityReport r;
  r.n = g.order();
  r.k = gamma_c(g).gamma_c;
  r.is_critical = true;
  for (auto [u, v] : g.non_edges()) {
    auto res = gamma_c(add_edge(g, u, v));
    r.records.push_back({u, v, res.gamma_c, res.witness});
    if (res.gamma_c >= r.k && r.is_critical) {
      r.is_critical = false;
      r.failing_pair = Edge(u, v);
    }
  }
  return r;
}

bool is_critical(const Graph& g, std::optional<int> k) {
  int gc = gamma_c(g).gamma_c;
  if (k && gc != *k) return false;
  for (auto [u, v] : g.non_edges())
    if (!has_cds_at_most(add_edge(g, u, v), gc - 1)) return false;
  return true;
}

namespace {

void check_report(const Graph& g, const CriticalityReport& report) {
  if (report.n != g.order())
    throw Error(Errc::ReportMismatch, "report was made for a graph of another order");
  auto ne = g.non_edges();
  if (ne.size() != report.records.size())
    throw Error(Errc::ReportMismatch, "report non-edges differ from the graph");
  for (std::size_t i = 0; i < ne.size(); ++i) {
    const auto& rec = report.records[i];
    if (ne[i] != Edge(rec.u, rec.v))
      throw Error(Errc::ReportMismatch, "report non-edges differ from the graph");
    if (rec.witness.universe() != g.order() || static_cast<int>(rec.witness.size()) != rec.gamma_c ||
        !is_cds(add_edge(g, rec.u, rec.v), rec.witness))
      throw Error(Errc::ReportMismatch, "stored witness is not a CDS of G + uv");
  }
  if (gamma_c(g).gamma_c != report.k) throw Error(Errc::ReportMismatch, "report k differs from gamma_c");
}

std::string pair_text(const Graph& g, Vertex x, Vertex y) { return g.label(x) + "," + g.label(y); }

}  // namespace

LemmaVerdict verify_lemma1(const Graph& g, const CriticalityReport& report) {
  check_report(g, report);
  if (report.records.empty()) return {};
  if (!report.is_critical || report.k < 2)
    throw Error(Errc::Precondition, "verify_lemma1 needs a k-critical graph with k >= 2");
  const int k = report.k;
  for (const auto& rec : report.records) {
    Graph h = add_edge(g, rec.u, rec.v);
    auto all = gamma_c(h, true);
    for (const auto& d : *all.all_min_sets) {
      int sz = d.size();
      if (sz < k - 2 || sz > k - 1)
        return {false, "|D_xy| = " + std::to_string(sz) + " outside [k-2,k-1] for xy = " + pair_text(g, rec.u, rec.v)};
      bool hx = d.contains(rec.u), hy = d.contains(rec.v);
      if (!hx && !hy) return {false, "D_xy misses {x,y} for xy = " + pair_text(g, rec.u, rec.v)};
      if (hx != hy) {
        Vertex in = hx ? rec.u : rec.v, out = hx ? rec.v : rec.u;
        if (g.neighbors(out).intersects(d))
          return {false, "D_xy ∩ {x,y} = {" + g.label(in) + "} but N(" + g.label(out) + ") meets D_xy"};
      }
    }
  }
  return {};
}

LemmaVerdict verify_block_lemmas(const Graph& g, const CriticalityReport& report) {
  check_report(g, report);
  if (!report.is_critical) throw Error(Errc::Precondition, "verify_block_lemmas needs a critical graph");
  auto dec = decompose(g);
  if (dec.zeta == 0) return {};
  const auto& cuts = dec.cut_vertices;
  auto min_sets = *gamma_c(g, true).all_min_sets;

  bool bad = false;
  std::string why;
  cuts.for_each([&](Vertex c) {
    if (bad) return;
    VertexSet rest = VertexSet(g.order(), {c}).complement();
    auto comps = components(g, rest);
    if (comps.size() != 2) {
      bad = true;
      why = "G - " + g.label(c) + " has " + std::to_string(comps.size()) + " components";
      return;
    }
    for (const auto& comp : comps) {
      VertexSet nc = g.neighbors(c) & comp;
      nc.for_each([&](Vertex a) {
        if (!bad && !(nc - VertexSet(g.order(), {a})).subset_of(g.neighbors(a))) {
          bad = true;
          why = "neighbourhood of cut vertex " + g.label(c) + " in a component is not a clique";
        }
      });
    }
    for (const auto& d : min_sets)
      if (!bad && !d.contains(c)) {
        bad = true;
        why = "cut vertex " + g.label(c) + " missing from minimum CDS " + d.to_string();
      }
  });
  if (bad) return {false, why};

  for (const auto& block : dec.blocks) {
    VertexSet block_free = block - cuts;
    for (const auto& rec : report.records) {
      if (!block.contains(rec.u) || !block.contains(rec.v)) continue;
      auto dxy_sets = *gamma_c(add_edge(g, rec.u, rec.v), true).all_min_sets;
      for (const auto& d : min_sets) {
        for (const auto& dxy : dxy_sets) {
          auto at = [&] {
            return " for xy = " + pair_text(g, rec.u, rec.v) + ", D = " + d.to_string() + ", D_xy = " + dxy.to_string();
          };
          if ((d & cuts) != (dxy & cuts)) return {false, "D and D_xy differ on cut vertices" + at()};
          if ((dxy & block).size() >= (d & block).size()) return {false, "|D_xy ∩ B| >= |D ∩ B|" + at()};
          if ((dxy & block_free).size() >= (d & block_free).size())
            return {false, "|(D_xy ∩ B) - C| >= |(D ∩ B) - C|" + at()};
        }
      }
    }
  }
  return {};
}

}  // namespace cdcrit
