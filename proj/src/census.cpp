#include "cdcrit/census.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>

#include "cdcrit/canonical.hpp"
#include "cdcrit/graph6.hpp"

namespace cdcrit {

namespace {

std::mutex cache_mutex;
std::map<int, std::vector<std::uint64_t>> cache;

void rows_of_key(std::uint64_t key, std::vector<std::uint64_t>& rows) {
  int n = static_cast<int>(key >> 60);
  rows.assign(static_cast<std::size_t>(n) + 1, 0);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((key >> bit) & 1) {
        rows[i] |= 1ULL << j;
        rows[j] |= 1ULL << i;
      }
}

Graph graph_of_rows(const std::vector<std::uint64_t>& rows, int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (std::uint64_t t = rows[i] >> (i + 1); t; t &= t - 1) edges.emplace_back(i, i + 1 + std::countr_zero(t));
  return Graph::build(n, edges);
}

// Extend every level-(n-1) graph by one vertex with a nonempty neighbourhood;
// keep candidates accepted by `keep`.
template <class Keep>
std::vector<std::uint64_t> extend(const std::vector<std::uint64_t>& parents, int n, Keep&& keep) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> rows;
  const Vertex nv = n - 1;
  for (std::uint64_t pk : parents) {
    rows_of_key(pk, rows);
    std::vector<std::uint64_t> base(rows.begin(), rows.end());
    for (std::uint64_t nb = 1; nb < (1ULL << nv); ++nb) {
      for (int i = 0; i < nv; ++i) rows[i] = base[i] | (((nb >> i) & 1) << nv);
      rows[nv] = nb;
      if (!keep(rows)) continue;
      auto order = detail::canonical_order(rows.data(), n);
      seen.insert(detail::pack_key(rows.data(), n, order));
    }
  }
  std::vector<std::uint64_t> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

int census_cap() { return std::min(scale_cap(9), 11); }

}  // namespace

const std::vector<std::uint64_t>& connected_keys(int n) {
  if (n < 1) throw Error(Errc::BadParameter, "census levels start at n = 1");
  if (n > census_cap())
    throw Error(Errc::CapExceeded, "internal enumeration capped at n <= " + std::to_string(census_cap()) +
                                       "; supply an external graph6 stream");
  std::lock_guard<std::mutex> lock(cache_mutex);
  for (int k = 1; k <= n; ++k) {
    if (cache.count(k)) continue;
    if (k == 1) {
      cache[1] = {1ULL << 60};
      continue;
    }
    cache[k] = extend(cache[k - 1], k, [](const auto&) { return true; });
  }
  return cache[n];
}

std::vector<Graph> census(int max_n, const GraphPredicate& pred, int min_n) {
  std::vector<Graph> out;
  min_n = std::max(min_n, 1);
  for (int n = min_n; n <= max_n; ++n) {
    bool have_level = false;
    {
      std::lock_guard<std::mutex> lock(cache_mutex);
      have_level = cache.count(n) > 0;
    }
    if (have_level || n == 1 || !pred) {
      for (std::uint64_t key : connected_keys(n)) {
        Graph g = detail::unpack_key(key);
        if (!pred || pred(g)) out.push_back(std::move(g));
      }
      continue;
    }
    if (n > census_cap())
      throw Error(Errc::CapExceeded, "internal enumeration capped at n <= " + std::to_string(census_cap()));
    const auto& parents = connected_keys(n - 1);
    auto keys = extend(parents, n, [&](const std::vector<std::uint64_t>& rows) { return pred(graph_of_rows(rows, n)); });
    for (std::uint64_t key : keys) out.push_back(detail::unpack_key(key));
  }
  return out;
}

std::vector<Graph> canonical_dedup(const std::vector<Graph>& graphs) {
  std::map<std::pair<int, std::string>, Graph> uniq;
  for (const auto& g : graphs) {
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) rows[v] = g.row(v);
    auto order = detail::canonical_order(rows.data(), g.order());
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) perm[order[i]] = i;
    Graph c = permute(g, perm);
    uniq.emplace(std::make_pair(c.order(), to_graph6(c)), c);
  }
  std::vector<Graph> out;
  for (auto& [k, g] : uniq) out.push_back(g);
  return out;
}

std::vector<Graph> census_stream(std::istream& in, const GraphPredicate& pred) {
  std::vector<Graph> keep;
  for (auto& g : read_graph6_stream(in))
    if (is_connected(g) && (!pred || pred(g))) keep.push_back(std::move(g));
  return canonical_dedup(keep);
}

}  // namespace cdcrit
