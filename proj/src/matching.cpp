#include "cdcrit/matching.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <queue>

namespace cdcrit {

namespace {

// Edmonds' algorithm with explicit blossom bases (BFS from each free vertex).
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.order()), match_(n_, -1), p_(n_), base_(n_), used_(n_), blossom_(n_) {}

  void run() {
    // Greedy start keeps the augmenting phase short.
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for (Vertex w = g_.neighbors(v).first(); w != -1; w = g_.neighbors(v).next(w))
        if (match_[w] == -1) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int end = find_path(v);
      while (end != -1) {
        int pv = p_[end], ppv = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = ppv;
      }
    }
  }

  const std::vector<int>& mate() const { return match_; }

 private:
  int lca(int a, int b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = p_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = p_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = true;
      p_[v] = child;
      child = match_[v];
      v = p_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(p_.begin(), p_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (Vertex to = g_.neighbors(v).first(); to != -1; to = g_.neighbors(v).next(to)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && p_[match_[to]] != -1)) {
          int cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (!blossom_[base_[i]]) continue;
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = true;
              q.push(i);
            }
          }
        } else if (p_[to] == -1) {
          p_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_, p_, base_;
  std::vector<bool> used_, blossom_;
};

int odd_components_mask(const Graph& g, std::uint64_t alive) {
  int odd = 0;
  while (alive) {
    std::uint64_t comp = alive & (~alive + 1), frontier = comp;
    while (frontier) {
      std::uint64_t nb = 0;
      for (std::uint64_t t = frontier; t; t &= t - 1) nb |= g.row(std::countr_zero(t));
      nb &= alive & ~comp;
      comp |= nb;
      frontier = nb;
    }
    odd += std::popcount(comp) & 1;
    alive &= ~comp;
  }
  return odd;
}

bool disconnects(const Graph& g, std::uint64_t alive) {
  if (!alive) return false;
  std::uint64_t comp = alive & (~alive + 1), frontier = comp;
  while (frontier) {
    std::uint64_t nb = 0;
    for (std::uint64_t t = frontier; t; t &= t - 1) nb |= g.row(std::countr_zero(t));
    nb &= alive & ~comp;
    comp |= nb;
    frontier = nb;
  }
  return comp != alive;
}

// Visit all k-subsets of 0..n-1 in lexicographic order; stop when f returns true.
bool any_combination(int n, int k, const std::function<bool(std::uint64_t)>& f) {
  if (k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t m = 0;
    for (int i : idx) m |= 1ULL << i;
    if (f(m)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint64_t all_mask(int n) { return n == 64 ? ~0ULL : (1ULL << n) - 1; }

void require_small(const Graph& g, const char* what) {
  int cap = std::min(scale_cap(18), 62);
  if (g.order() > cap)
    throw Error(Errc::CapExceeded, std::string(what) + " capped at n <= " + std::to_string(cap));
}

}  // namespace

MatchingResult max_matching(const Graph& g) {
  Blossom b(g);
  b.run();
  MatchingResult r;
  const auto& mate = b.mate();
  for (int v = 0; v < g.order(); ++v)
    if (mate[v] > v) r.edges.emplace_back(v, mate[v]);
  r.size = static_cast<int>(r.edges.size());
  r.is_perfect = 2 * r.size == g.order();
  return r;
}

int matching_number(const Graph& g, const VertexSet& removed) {
  VertexSet keep = removed.complement();
  if (keep.empty()) return 0;
  return max_matching(induced(g, keep).graph).size;
}

int max_matching_bruteforce(const Graph& g) {
  if (g.order() > 24) throw Error(Errc::CapExceeded, "brute-force matching capped at n <= 24");
  std::function<int(std::uint64_t)> best = [&](std::uint64_t alive) -> int {
    if (!alive) return 0;
    int v = std::countr_zero(alive);
    std::uint64_t rest = alive & ~(1ULL << v);
    int b = best(rest);
    for (std::uint64_t t = g.row(v) & rest; t; t &= t - 1) b = std::max(b, 1 + best(rest & ~(t & (~t + 1))));
    return b;
  };
  return best(all_mask(g.order()));
}

bool favaron_violation(const Graph& g, const VertexSet& s, int ell) {
  require_small(g, "favaron_violation");
  return odd_components_mask(g, all_mask(g.order()) & ~s.mask64()) > s.size() - ell;
}

FactorCriticalityVerdict is_factor_critical(const Graph& g, int ell) {
  if (ell < 0 || ell > 2) throw Error(Errc::BadParameter, "ell must be 0, 1 or 2");
  const int n = g.order();
  if ((n - ell) % 2 != 0 || n < ell)
    throw Error(Errc::ParityMismatch, "order " + std::to_string(n) + " does not match ell = " + std::to_string(ell));
  require_small(g, "is_factor_critical");
  FactorCriticalityVerdict v;
  v.ell = ell;
  any_combination(n, ell, [&](std::uint64_t s) {
    VertexSet set = VertexSet::from_mask(n, s);
    if (2 * matching_number(g, set) == n - ell) return false;
    v.holds = false;
    v.counterexample_set = set;
    // Extend S by a Tutte set of G - S: odd components exceed |T|.
    std::uint64_t others = all_mask(n) & ~s;
    int others_n = std::popcount(others);
    for (int t = 0; t <= others_n && !v.favaron_witness; ++t) {
      std::vector<int> pool;
      for (std::uint64_t x = others; x; x &= x - 1) pool.push_back(std::countr_zero(x));
      any_combination(others_n, t, [&](std::uint64_t pick) {
        std::uint64_t tm = 0;
        for (std::uint64_t x = pick; x; x &= x - 1) tm |= 1ULL << pool[std::countr_zero(x)];
        int odd = odd_components_mask(g, others & ~tm);
        if (odd > t) {
          v.favaron_witness = VertexSet::from_mask(n, s | tm);
          v.witness_odd_components = odd;
          return true;
        }
        return false;
      });
    }
    return true;
  });
  return v;
}

FactorCriticalityVerdict favaron_check(const Graph& g, int ell, FavaronScope scope) {
  if (ell < 0 || ell > 2) throw Error(Errc::BadParameter, "ell must be 0, 1 or 2");
  const int n = g.order();
  if (g.min_degree() < ell + 1)
    throw Error(Errc::DegreeTooSmall, "minimum degree " + std::to_string(g.min_degree()) + " < ell + 1");
  require_small(g, "favaron_check");
  FactorCriticalityVerdict v;
  v.ell = ell;
  const std::uint64_t all = all_mask(n);
  for (int size = ell; size <= n && v.holds; ++size) {
    any_combination(n, size, [&](std::uint64_t s) {
      std::uint64_t alive = all & ~s;
      if (scope == FavaronScope::CutSets && !disconnects(g, alive)) return false;
      int odd = odd_components_mask(g, alive);
      if (odd <= size - ell) return false;
      v.holds = false;
      v.favaron_witness = VertexSet::from_mask(n, s);
      v.witness_odd_components = odd;
      return true;
    });
  }
  return v;
}

}  // namespace cdcrit
