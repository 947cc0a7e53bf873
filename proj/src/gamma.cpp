#include "cdcrit/gamma.hpp"

#include <algorithm>
#include <bit>

namespace cdcrit {

namespace {

struct WordOps {
  using M = std::uint64_t;
  const Graph& g;
  int n;
  M all;
  explicit WordOps(const Graph& gr) : g(gr), n(gr.order()), all(n == 64 ? ~0ULL : (1ULL << n) - 1) {}
  M zero() const { return 0; }
  M single(Vertex v) const { return 1ULL << v; }
  M nb(Vertex v) const { return g.row(v); }
  M above(Vertex r) const { return r >= 63 ? 0 : all & (~0ULL << (r + 1)); }
  static bool none(M a) { return a == 0; }
  static int count(M a) { return std::popcount(a); }
  static Vertex low(M a) { return std::countr_zero(a); }
  static M minus(M a, M b) { return a & ~b; }
  VertexSet to_set(M a) const { return VertexSet::from_mask(n, a); }
};

struct SetOps {
  using M = VertexSet;
  const Graph& g;
  int n;
  M all;
  explicit SetOps(const Graph& gr) : g(gr), n(gr.order()), all(VertexSet::full(gr.order())) {}
  M zero() const { return VertexSet(n); }
  M single(Vertex v) const { return VertexSet(n, {v}); }
  const M& nb(Vertex v) const { return g.neighbors(v); }
  M above(Vertex r) const {
    M s(n);
    for (Vertex v = r + 1; v < n; ++v) s.insert(v);
    return s;
  }
  static bool none(const M& a) { return a.empty(); }
  static int count(const M& a) { return a.size(); }
  static Vertex low(const M& a) { return a.first(); }
  static M minus(M a, const M& b) { return a -= b; }
  const VertexSet& to_set(const M& a) const { return a; }
};

// ESU-style growth: a connected set is generated once, from its smallest
// vertex, extending only by exclusive neighbours of the newest vertex.
template <class Ops, class Visit>
class Enumerator {
 public:
  using M = typename Ops::M;
  Enumerator(const Ops& ops, int size, Visit& visit) : ops_(ops), size_(size), visit_(visit) {
    int n = ops_.n;
    suffix_max_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = n - 1; v >= 0; --v) suffix_max_[v] = std::max(suffix_max_[v + 1], ops_.g.degree(v) + 1);
  }

  bool run() {
    if (size_ < 1 || size_ > ops_.n) return true;
    for (Vertex root = 0; root < ops_.n; ++root) {
      root_ = root;
      above_ = ops_.above(root);
      M sub = ops_.single(root);
      M covered = ops_.nb(root) | sub;
      M ext = ops_.nb(root) & above_;
      if (!grow(sub, 1, ext, covered)) return false;
    }
    return true;
  }

 private:
  bool grow(const M& sub, int have, M ext, const M& covered) {
    if (have == size_) {
      if (Ops::none(Ops::minus(ops_.all, covered))) return visit_(ops_.to_set(sub));
      return true;
    }
    int remaining = size_ - have;
    // Each addition covers at most max |N[w]| new vertices (w > root).
    if (Ops::count(Ops::minus(ops_.all, covered)) > remaining * suffix_max_[root_ + 1]) return true;
    while (!Ops::none(ext)) {
      Vertex w = Ops::low(ext);
      ext = Ops::minus(ext, ops_.single(w));
      M child_ext = ext | (Ops::minus(ops_.nb(w), covered) & above_);
      M child_cov = covered | ops_.nb(w);
      if (!grow(sub | ops_.single(w), have + 1, std::move(child_ext), child_cov)) return false;
    }
    return true;
  }

  const Ops& ops_;
  int size_;
  Visit& visit_;
  Vertex root_ = 0;
  M above_{};
  std::vector<int> suffix_max_;
};

template <class Ops, class Visit>
bool enumerate(const Ops& ops, int size, Visit& visit) {
  Enumerator<Ops, Visit> e(ops, size, visit);
  return e.run();
}

bool use_word(const Graph& g, SolverPath path) {
  if (path == SolverPath::Word) {
    if (g.order() > 64) throw Error(Errc::BadParameter, "word path needs n <= 64");
    return true;
  }
  return path == SolverPath::Auto && g.order() <= 64;
}

void require_connected(const Graph& g) {
  if (g.order() == 0) throw Error(Errc::EmptySet, "gamma_c of the empty graph");
  if (!is_connected(g)) throw Error(Errc::Disconnected, "gamma_c needs a connected graph");
}

}  // namespace

bool is_cds(const Graph& g, const VertexSet& d) {
  if (d.empty()) throw Error(Errc::EmptySet, "is_cds on an empty set");
  if (d.universe() != g.order()) throw Error(Errc::VertexOutOfRange, "set universe differs from graph order");
  return g.closed_neighbors(d).size() == g.order() && is_connected_subset(g, d);
}

bool for_each_cds(const Graph& g, int size, const std::function<bool(const VertexSet&)>& visit,
                  SolverPath path) {
  auto v = [&](const VertexSet& s) { return visit(s); };
  if (use_word(g, path)) return enumerate(WordOps(g), size, v);
  return enumerate(SetOps(g), size, v);
}

std::vector<VertexSet> cds_of_size(const Graph& g, int size) {
  std::vector<VertexSet> out;
  for_each_cds(g, size, [&](const VertexSet& s) {
    out.push_back(s);
    return true;
  });
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

bool has_cds_at_most(const Graph& g, int size) {
  // A CDS of size s < n extends to one of size s + 1 by adding a neighbour,
  // so only the largest admissible size needs searching.
  size = std::min(size, g.order());
  if (size < 1) return false;
  bool found = false;
  auto stop = [&](const auto&) {
    found = true;
    return false;
  };
  if (g.order() <= 64) {
    WordOps ops(g);
    enumerate(ops, size, stop);
  } else {
    SetOps ops(g);
    enumerate(ops, size, stop);
  }
  return found;
}

std::optional<VertexSet> find_cds(const Graph& g, int max_size,
                                  const std::function<bool(const VertexSet&)>& accept) {
  for (int s = 1; s <= std::min(max_size, g.order()); ++s) {
    std::optional<VertexSet> hit;
    for_each_cds(g, s, [&](const VertexSet& d) {
      if (!accept(d)) return true;
      if (!hit || lex_less(d, *hit)) hit = d;
      return true;
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

GammaCResult gamma_c(const Graph& g, bool enumerate_all, SolverPath path) {
  require_connected(g);
  GammaCResult r;
  for (int s = 1; s <= g.order(); ++s) {
    std::vector<VertexSet> sets;
    std::optional<VertexSet> best;
    for_each_cds(
        g, s,
        [&](const VertexSet& d) {
          if (enumerate_all) sets.push_back(d);
          if (!best || lex_less(d, *best)) best = d;
          return true;
        },
        path);
    if (!best) continue;
    r.gamma_c = s;
    r.witness = *best;
    if (enumerate_all) {
      std::sort(sets.begin(), sets.end(), LexLess{});
      r.all_min_sets = std::move(sets);
    }
    return r;
  }
  throw Error(Errc::Precondition, "no connected dominating set found");
}

GammaCResult gamma_c_bruteforce(const Graph& g) {
  require_connected(g);
  const int n = g.order();
  if (n > 20) throw Error(Errc::CapExceeded, "brute-force gamma_c capped at n <= 20");
  const std::uint32_t all = (1u << n) - 1;
  std::vector<std::uint32_t> closed(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) closed[v] = static_cast<std::uint32_t>(g.row(v)) | (1u << v);
  GammaCResult r;
  std::vector<VertexSet> found;
  for (int s = 1; s <= n && found.empty(); ++s) {
    // Gosper's hack over all s-subsets.
    for (std::uint32_t m = (1u << s) - 1; m <= all; ) {
      std::uint32_t dom = 0;
      for (std::uint32_t t = m; t; t &= t - 1) dom |= closed[std::countr_zero(t)];
      if (dom == all) {
        std::uint32_t reach = m & (~m + 1), prev = 0;
        while (reach != prev) {
          prev = reach;
          for (std::uint32_t t = reach; t; t &= t - 1) reach |= closed[std::countr_zero(t)] & m;
        }
        if (reach == m) {
          found.push_back(VertexSet::from_mask(n, m));
          r.gamma_c = s;
        }
      }
      std::uint32_t c = m & (~m + 1), nx = m + c;
      if (nx == 0 || c == 0) break;
      m = (((nx ^ m) >> 2) / c) | nx;
    }
  }
  std::sort(found.begin(), found.end(), LexLess{});
  r.witness = found.front();
  r.all_min_sets = std::move(found);
  return r;
}

}  // namespace cdcrit
