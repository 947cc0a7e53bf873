#include "cdcrit/decomposition.hpp"

#include <algorithm>

#include "cdcrit/gamma.hpp"

namespace cdcrit {

std::vector<int> BlockDecomposition::blocks_of(Vertex v) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].contains(v)) out.push_back(static_cast<int>(i));
  return out;
}

BlockDecomposition decompose(const Graph& g) {
  const int n = g.order();
  if (!is_connected(g)) throw Error(Errc::Disconnected, "decompose needs a connected graph");
  BlockDecomposition d;
  d.cut_vertices = VertexSet(n);
  if (n == 1) {
    d.blocks.push_back(VertexSet(1, {0}));
  } else {
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<Vertex> next_nb(n, -1);  // iteration cursor per vertex
    std::vector<Vertex> vstack, dfs;
    int time = 0, root_children = 0;
    disc[0] = low[0] = time++;
    next_nb[0] = g.neighbors(0).first();
    dfs.push_back(0);
    vstack.push_back(0);
    while (!dfs.empty()) {
      Vertex v = dfs.back();
      Vertex w = next_nb[v];
      if (w != -1) {
        next_nb[v] = g.neighbors(v).next(w);
        if (disc[w] < 0) {
          parent[w] = v;
          disc[w] = low[w] = time++;
          next_nb[w] = g.neighbors(w).first();
          dfs.push_back(w);
          vstack.push_back(w);
          if (v == 0) ++root_children;
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      dfs.pop_back();
      Vertex p = parent[v];
      if (p < 0) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        VertexSet block(n);
        while (true) {
          Vertex x = vstack.back();
          vstack.pop_back();
          block.insert(x);
          if (x == v) break;
        }
        block.insert(p);
        d.blocks.push_back(std::move(block));
        if (p != 0) d.cut_vertices.insert(p);
      }
    }
    if (root_children >= 2) d.cut_vertices.insert(0);
  }
  std::sort(d.blocks.begin(), d.blocks.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first() || (a.first() == b.first() && lex_less(a, b)); });
  d.zeta = d.cut_vertices.size();
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    VertexSet c = d.blocks[i] & d.cut_vertices;
    d.zeta0 = std::max(d.zeta0, c.size());
    if (c.size() == 1) d.end_blocks.push_back(static_cast<int>(i));
    d.block_cuts.push_back(std::move(c));
  }
  return d;
}

int odd_components(const Graph& g, const VertexSet& s) {
  int odd = 0;
  for (const auto& c : components(g, s.complement())) odd += c.size() & 1;
  return odd;
}

bool verify_cut_bound(const Graph& g, int k) {
  int actual = gamma_c(g).gamma_c;
  if (actual != k)
    throw Error(Errc::ReportMismatch,
                "k = " + std::to_string(k) + " but gamma_c = " + std::to_string(actual));
  auto d = decompose(g);
  return d.zeta <= k - 2 && d.zeta0 <= std::min((k + 2) / 3, d.zeta);
}

}  // namespace cdcrit
