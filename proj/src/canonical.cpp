#include "cdcrit/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "cdcrit/graph6.hpp"

namespace cdcrit::detail {

namespace {

using Cells = std::vector<std::uint64_t>;

// Equitable refinement. Splits depend only on cell positions and neighbour
// counts, so the result is invariant under relabeling.
void refine(const std::uint64_t* rows, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t wi = 0; wi < cells.size() && !changed; ++wi) {
      const std::uint64_t w = cells[wi];
      for (std::size_t xi = 0; xi < cells.size(); ++xi) {
        std::uint64_t x = cells[xi];
        if (std::popcount(x) == 1) continue;
        std::array<std::uint64_t, 65> by_count{};
        int lo = 65, hi = -1;
        for (std::uint64_t t = x; t; t &= t - 1) {
          int v = std::countr_zero(t);
          int c = std::popcount(rows[v] & w);
          by_count[c] |= 1ULL << v;
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        }
        if (lo == hi) continue;
        Cells parts;
        for (int c = lo; c <= hi; ++c)
          if (by_count[c]) parts.push_back(by_count[c]);
        cells.erase(cells.begin() + static_cast<long>(xi));
        cells.insert(cells.begin() + static_cast<long>(xi), parts.begin(), parts.end());
        changed = true;
        break;
      }
    }
  }
}

struct Search {
  const std::uint64_t* rows = nullptr;
  int n = 0;
  bool have_best = false;
  std::vector<std::uint64_t> best_code;
  std::vector<int> best_order;
  std::vector<std::vector<int>> gens;

  std::vector<std::uint64_t> code_of(const std::vector<int>& order) const {
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<std::uint64_t> code(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      std::uint64_t r = 0;
      for (std::uint64_t t = rows[order[i]]; t; t &= t - 1) r |= 1ULL << (n - 1 - pos[std::countr_zero(t)]);
      code[i] = r;
    }
    return code;
  }

  int find(std::vector<int>& uf, int x) const {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  }

  void run(Cells cells, std::uint64_t fixed) {
    refine(rows, cells);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (std::popcount(cells[i]) > 1) {
        target = i;
        break;
      }
    if (target == cells.size()) {
      std::vector<int> order;
      for (auto c : cells) order.push_back(std::countr_zero(c));
      auto code = code_of(order);
      if (!have_best || code > best_code) {
        have_best = true;
        best_code = std::move(code);
        best_order = std::move(order);
      } else if (code == best_code) {
        std::vector<int> g(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) g[order[i]] = best_order[i];
        gens.push_back(std::move(g));
      }
      return;
    }
    std::uint64_t explored = 0;
    for (std::uint64_t t = cells[target]; t; t &= t - 1) {
      int v = std::countr_zero(t);
      if (explored) {
        // Orbits of the automorphisms found so far that fix `fixed` pointwise.
        std::vector<int> uf(static_cast<std::size_t>(n));
        std::iota(uf.begin(), uf.end(), 0);
        for (const auto& g : gens) {
          bool fixes = true;
          for (std::uint64_t f = fixed; f && fixes; f &= f - 1) {
            int u = std::countr_zero(f);
            fixes = g[u] == u;
          }
          if (!fixes) continue;
          for (int u = 0; u < n; ++u) {
            int a = find(uf, u), b = find(uf, g[u]);
            if (a != b) uf[a] = b;
          }
        }
        bool skip = false;
        for (std::uint64_t e = explored; e && !skip; e &= e - 1)
          skip = find(uf, std::countr_zero(e)) == find(uf, v);
        if (skip) continue;
      }
      Cells child = cells;
      child[target] &= ~(1ULL << v);
      child.insert(child.begin() + static_cast<long>(target), 1ULL << v);
      run(std::move(child), fixed | (1ULL << v));
      explored |= 1ULL << v;
    }
  }
};

}  // namespace

std::vector<int> canonical_order(const std::uint64_t* rows, int n, std::vector<std::uint64_t> cells,
                                 std::vector<std::vector<int>>* automorphisms) {
  if (n > 64) throw Error(Errc::CapExceeded, "canonical form limited to n <= 64");
  if (n == 0) return {};
  if (cells.empty()) cells.push_back(n == 64 ? ~0ULL : (1ULL << n) - 1);
  Search s;
  s.rows = rows;
  s.n = n;
  s.run(std::move(cells), 0);
  if (automorphisms) *automorphisms = std::move(s.gens);
  return s.best_order;
}

std::uint64_t pack_key(const std::uint64_t* rows, int n, const std::vector<int>& order) {
  if (n > 11) throw Error(Errc::CapExceeded, "packed keys limited to n <= 11");
  std::uint64_t key = static_cast<std::uint64_t>(n) << 60;
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((rows[order[i]] >> order[j]) & 1) key |= 1ULL << bit;
  return key;
}

Graph unpack_key(std::uint64_t key) {
  int n = static_cast<int>(key >> 60);
  std::vector<Edge> edges;
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((key >> bit) & 1) edges.emplace_back(i, j);
  return Graph::build(n, edges);
}

}  // namespace cdcrit::detail

namespace cdcrit {

CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colors) {
  int n = g.order();
  int cap = scale_cap(12);
  if (n > cap || n > 64)
    throw Error(Errc::CapExceeded, "canonical form capped at n <= " + std::to_string(std::min(cap, 64)));
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) rows[v] = g.row(v);
  std::vector<std::uint64_t> cells;
  if (!colors.empty()) {
    if (static_cast<int>(colors.size()) != n) throw Error(Errc::BadParameter, "colour vector size mismatch");
    std::vector<int> distinct(colors.begin(), colors.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int c : distinct) {
      std::uint64_t m = 0;
      for (int v = 0; v < n; ++v)
        if (colors[v] == c) m |= 1ULL << v;
      cells.push_back(m);
    }
  }
  CanonicalForm cf;
  auto order = detail::canonical_order(rows.data(), n, std::move(cells), &cf.automorphisms);
  cf.labeling.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) cf.labeling[order[i]] = i;
  cf.graph = permute(g, cf.labeling);
  return cf;
}

std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_form(g).graph); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a).graph == canonical_form(b).graph;
}

}  // namespace cdcrit
