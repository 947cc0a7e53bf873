#include "cdcrit/structure.hpp"

#include <algorithm>
#include <bit>

#include "cdcrit/criticality.hpp"
#include "cdcrit/decomposition.hpp"
#include "cdcrit/gamma.hpp"

namespace cdcrit {

namespace {

std::uint64_t full_mask(int n) { return n == 64 ? ~0ULL : (1ULL << n) - 1; }

struct BadParts {
  std::uint64_t x = 0, x1 = 0;
};

// P = X ∪ X1 works iff its boundary vertices are adjacent to all of P and a
// nonempty split exists.
bool split_of(const Graph& g, std::uint64_t p, BadParts* out) {
  std::uint64_t boundary = 0, univ = 0;
  for (std::uint64_t t = p; t; t &= t - 1) {
    int v = std::countr_zero(t);
    std::uint64_t nb = g.row(v);
    if (nb & ~p) boundary |= 1ULL << v;
    if ((p & ~(1ULL << v) & ~nb) == 0) univ |= 1ULL << v;
  }
  if (boundary & ~univ) return false;
  std::uint64_t x1 = boundary;
  if (!x1) {
    if (!univ || std::popcount(p) < 2) return false;
    x1 = univ & (~univ + 1);
  }
  std::uint64_t x = p & ~x1;
  if (!x) return false;
  if (out) *out = {x, x1};
  return true;
}

}  // namespace

bool is_bad_subgraph(const Graph& g, const VertexSet& x, const VertexSet& x1, const VertexSet& y,
                     const VertexSet& y1) {
  if (x.empty() || x1.empty() || y.empty() || y1.empty()) return false;
  if (x.intersects(x1) || x.intersects(y) || x.intersects(y1) || x1.intersects(y) || x1.intersects(y1) ||
      y.intersects(y1))
    return false;
  auto side = [&](const VertexSet& a, const VertexSet& a1) {
    VertexSet p = a | a1;
    bool ok = true;
    a1.for_each([&](Vertex v) { ok = ok && (p - VertexSet(g.order(), {v})).subset_of(g.neighbors(v)); });
    a.for_each([&](Vertex v) { ok = ok && g.closed_neighbors(v).subset_of(p); });
    return ok;
  };
  return side(x, x1) && side(y, y1);
}

StructureVerdict find_bad_subgraph(const Graph& g, int cap) {
  const int n = g.order();
  int limit = std::min(std::max(cap, scale_cap(cap)), 24);
  if (n > limit) throw Error(Errc::CapExceeded, "bad-subgraph scan capped at n <= " + std::to_string(limit));
  const std::uint64_t all = full_mask(n);
  std::vector<char> valid(static_cast<std::size_t>(1) << n, 0), any_valid(valid.size(), 0);
  for (std::uint64_t p = 1; p <= all; ++p) valid[p] = split_of(g, p, nullptr);
  // any_valid[M]: some valid P ⊆ M (sum over subsets).
  for (std::size_t m = 0; m < valid.size(); ++m) any_valid[m] = valid[m];
  for (int b = 0; b < n; ++b)
    for (std::size_t m = 0; m < valid.size(); ++m)
      if (m >> b & 1) any_valid[m] |= any_valid[m ^ (1ULL << b)];
  StructureVerdict r;
  for (std::uint64_t p = 1; p <= all; ++p) {
    if (!valid[p] || !any_valid[all & ~p]) continue;
    std::uint64_t q = 1;
    while (!(valid[q] && (q & p) == 0)) ++q;
    BadParts a, b;
    split_of(g, p, &a);
    split_of(g, q, &b);
    r.holds = true;
    r.witness["X"] = VertexSet::from_mask(n, a.x);
    r.witness["X1"] = VertexSet::from_mask(n, a.x1);
    r.witness["Y"] = VertexSet::from_mask(n, b.x);
    r.witness["Y1"] = VertexSet::from_mask(n, b.x1);
    return r;
  }
  r.note = "no bad subgraph";
  return r;
}

StructureVerdict is_b3_block(const Graph& b, Vertex head, B3Rule rule) {
  const int n = b.order();
  if (head < 0 || head >= n) throw Error(Errc::VertexOutOfRange, "head not in block");
  if (n < 3 || !decompose(b).cut_vertices.empty())
    throw Error(Errc::Precondition, "block must be 2-connected");
  StructureVerdict r;
  VertexSet a = b.neighbors(head);
  r.witness["A"] = a;
  auto gc = gamma_c(b, true);
  if (gc.gamma_c != 3) {
    r.note = "gamma_c(B) = " + std::to_string(gc.gamma_c) + ", not 3";
    return r;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v == head) continue;
    bool covered = std::any_of(gc.all_min_sets->begin(), gc.all_min_sets->end(),
                               [&](const VertexSet& d) { return d.contains(v); });
    if (!covered) {
      r.note = "vertex " + b.label(v) + " lies in no minimum CDS";
      r.witness["vertex"] = VertexSet(n, {v});
      return r;
    }
  }
  for (auto [x, y] : b.non_edges()) {
    if (x == head || y == head) continue;
    Graph h = add_edge(b, x, y);
    bool ok = false;
    for_each_cds(h, 2, [&](const VertexSet& d) {
      ok = (d.contains(x) || d.contains(y)) && d.intersects(a);
      return !ok;
    });
    if (!ok) {
      r.note = "B + " + b.label(x) + b.label(y) + " has no 2-vertex CDS meeting {x,y} and A";
      r.witness["pair"] = VertexSet(n, {x, y});
      return r;
    }
  }
  if (rule == B3Rule::WithHeadBound) {
    auto small = find_cds(b, 3, [&](const VertexSet& d) { return d.contains(head); });
    if (small) {
      r.note = "CDS " + small->to_string() + " contains the head with fewer than 4 vertices";
      r.witness["head_cds"] = *small;
      return r;
    }
  }
  r.holds = true;
  return r;
}

StructureVerdict is_pk_member(const Graph& g, const VertexSet& h) {
  const int n = g.order();
  if (!is_connected(g)) throw Error(Errc::Disconnected, "is_pk_member needs a connected graph");
  if (h.universe() != n || h.size() < 2) throw Error(Errc::Precondition, "H must have order >= 2");
  h.for_each([&](Vertex v) {
    if (!(h - VertexSet(n, {v})).subset_of(g.neighbors(v)))
      throw Error(Errc::Precondition, "H is not complete");
  });
  for (Vertex v = 0; v < n; ++v)
    if (!h.contains(v) && h.subset_of(g.neighbors(v)))
      throw Error(Errc::Precondition, "H is not maximal: " + g.label(v) + " is adjacent to all of H");
  StructureVerdict r;
  r.witness["H"] = h;
  auto rep = check_critical(g);
  if (!rep.is_critical) {
    r.note = "graph is not gamma_c-critical";
    return r;
  }
  const int k = rep.k;
  auto mins = *gamma_c(g, true).all_min_sets;
  for (Vertex x = 0; x < n; ++x) {
    bool ok = std::any_of(mins.begin(), mins.end(), [&](const VertexSet& d) { return d.contains(x) && d.intersects(h); });
    if (!ok) {
      r.note = "property (i) fails at " + g.label(x);
      r.witness["vertex"] = VertexSet(n, {x});
      return r;
    }
  }
  for (auto [x, y] : g.non_edges()) {
    auto d = find_cds(add_edge(g, x, y), k - 1, [&](const VertexSet& s) { return s.intersects(h); });
    if (!d) {
      r.note = "property (ii) fails at " + g.label(x) + "," + g.label(y);
      r.witness["pair"] = VertexSet(n, {x, y});
      return r;
    }
  }
  r.holds = true;
  return r;
}

StructureVerdict is_claw_free(const Graph& g) {
  StructureVerdict r;
  for (Vertex c = 0; c < g.order(); ++c) {
    auto nb = g.neighbors(c).to_vector();
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t l = j + 1; l < nb.size(); ++l) {
          if (g.adjacent(nb[i], nb[l]) || g.adjacent(nb[j], nb[l])) continue;
          r.witness["center"] = VertexSet(g.order(), {c});
          r.witness["leaves"] = VertexSet(g.order(), {nb[i], nb[j], nb[l]});
          r.note = "induced claw";
          return r;
        }
      }
  }
  r.holds = true;
  return r;
}

StructureVerdict is_diameter_critical(const Graph& g, int k) {
  StructureVerdict r;
  auto d = diameter(g);
  if (!d || *d != k) {
    r.note = d ? "diameter is " + std::to_string(*d) : "graph is disconnected";
    return r;
  }
  for (auto [u, v] : g.edges()) {
    auto d2 = diameter(remove_edge(g, u, v));
    if (d2 && *d2 <= k) {
      r.note = "deleting " + g.label(u) + g.label(v) + " keeps the diameter at " + std::to_string(*d2);
      r.witness["edge"] = VertexSet(g.order(), {u, v});
      return r;
    }
  }
  r.holds = true;
  return r;
}

namespace {

// Center of a star component (K2: the smaller vertex); -1 if not a star.
Vertex star_center(const Graph& h, const VertexSet& comp) {
  int sz = comp.size();
  if (sz < 2) return -1;
  int edges = 0;
  Vertex center = -1;
  comp.for_each([&](Vertex v) {
    int d = (h.neighbors(v) & comp).size();
    edges += d;
    if (d == sz - 1 && center < 0) center = v;
  });
  if (edges / 2 != sz - 1 || center < 0) return -1;
  return center;
}

}  // namespace

StructureVerdict is_two_crit_complement_of_stars(const Graph& g) {
  StructureVerdict r;
  Graph h = complement(g);
  auto comps = components(h);
  int stars = 0;
  for (const auto& c : comps) {
    if (star_center(h, c) < 0) {
      r.note = "complement component " + c.to_string() + " is not a star";
      r.witness["component"] = c;
      return r;
    }
    ++stars;
  }
  if (stars < 2) {
    r.note = "complement has fewer than two stars";
    return r;
  }
  r.holds = true;
  return r;
}

StructureVerdict is_b22_shaped(const Graph& b, Vertex head) {
  const int n = b.order();
  StructureVerdict r;
  VertexSet rest = VertexSet(n, {head}).complement();
  if (rest.empty()) {
    r.note = "block has no vertex besides the head";
    return r;
  }
  auto sub = induced(b, rest);
  Graph h = complement(sub.graph);
  VertexSet s(n), s_prime(n), s_free(n);
  int stars = 0;
  for (const auto& comp : components(h)) {
    if (comp.size() == 1) {
      s_free.insert(sub.new_to_old[comp.first()]);
      continue;
    }
    Vertex center = star_center(h, comp);
    if (center < 0) {
      r.note = "complement of B - head has a non-star component";
      return r;
    }
    ++stars;
    if (comp.size() == 2) {
      Vertex a = sub.new_to_old[comp.first()], c = sub.new_to_old[comp.next(comp.first())];
      bool ha = b.adjacent(head, a), hc = b.adjacent(head, c);
      if (ha == hc) {
        r.note = "head must see exactly one end of each two-vertex star";
        return r;
      }
      s.insert(ha ? a : c);
      s_prime.insert(ha ? c : a);
    } else {
      comp.for_each([&](Vertex v) { (v == center ? s_prime : s).insert(sub.new_to_old[v]); });
    }
  }
  if (stars < 2) {
    r.note = "fewer than two stars";
    return r;
  }
  if (b.neighbors(head) != s) {
    r.note = "head is not adjacent exactly to the star leaves";
    return r;
  }
  r.holds = true;
  r.witness["S"] = s;
  r.witness["S'"] = s_prime;
  r.witness["S''"] = s_free;
  return r;
}

namespace {

// c ∨ K ∨ c' with K a clique of order >= 2 and c, c' non-adjacent.
bool clique_between(const Graph& g, const VertexSet& block, Vertex a, Vertex c) {
  if (g.adjacent(a, c)) return false;
  VertexSet k = block - VertexSet(g.order(), {a, c});
  if (k.size() < 2) return false;
  bool ok = k.subset_of(g.neighbors(a)) && k.subset_of(g.neighbors(c));
  k.for_each([&](Vertex v) { ok = ok && (k - VertexSet(g.order(), {v})).subset_of(g.neighbors(v)); });
  return ok;
}

}  // namespace

StructureVerdict classify_k3(const Graph& g, int k) {
  StructureVerdict r;
  auto dec = decompose(g);
  if (dec.zeta != k - 3 || dec.zeta < 1) {
    r.note = "zeta = " + std::to_string(dec.zeta) + ", expected " + std::to_string(k - 3);
    return r;
  }
  // Block-cut tree must be a path.
  bool chain = true;
  dec.cut_vertices.for_each([&](Vertex c) { chain = chain && dec.blocks_of(c).size() == 2; });
  for (const auto& bc : dec.block_cuts) chain = chain && bc.size() <= 2;
  if (!chain || dec.end_blocks.size() != 2) {
    r.note = "blocks do not form a chain";
    return r;
  }
  auto block_graph = [&](int i) { return induced(g, dec.blocks[i]); };
  auto is_bridge = [&](int i) { return dec.blocks[i].size() == 2; };

  // G1: a complement-of-stars end block, exactly one clique block, bridges elsewhere.
  for (int e : dec.end_blocks) {
    auto bg = block_graph(e);
    Vertex head = bg.old_to_new[dec.block_cuts[e].first()];
    if (!is_b22_shaped(bg.graph, head)) continue;
    int clique_blocks = 0, bad = 0;
    for (int i = 0; i < static_cast<int>(dec.blocks.size()); ++i) {
      if (i == e || is_bridge(i)) continue;
      const auto& blk = dec.blocks[i];
      bool ok = false;
      if (dec.block_cuts[i].size() == 2) {
        Vertex a = dec.block_cuts[i].first(), c = dec.block_cuts[i].next(a);
        ok = clique_between(g, blk, a, c);
      } else {
        Vertex c = dec.block_cuts[i].first();
        (blk - dec.cut_vertices).for_each([&](Vertex a) { ok = ok || clique_between(g, blk, a, c); });
      }
      ok ? ++clique_blocks : ++bad;
    }
    if (clique_blocks == 1 && bad == 0) {
      r.holds = true;
      r.note = "G1";
      r.witness["end_block"] = dec.blocks[e];
      return r;
    }
  }
  // G2: a property-defined end block, bridges elsewhere.
  for (int e : dec.end_blocks) {
    bool bridges = true;
    for (int i = 0; i < static_cast<int>(dec.blocks.size()); ++i)
      if (i != e && !is_bridge(i)) bridges = false;
    if (!bridges || dec.blocks[e].size() < 3) continue;
    auto bg = block_graph(e);
    Vertex head = bg.old_to_new[dec.block_cuts[e].first()];
    if (is_b3_block(bg.graph, head)) {
      r.holds = true;
      r.note = "G2";
      r.witness["end_block"] = dec.blocks[e];
      return r;
    }
  }
  r.note = "matches neither block-chain shape";
  return r;
}

}  // namespace cdcrit
