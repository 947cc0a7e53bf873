#include "cdcrit/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

namespace cdcrit {

const char* errc_name(Errc e) {
  switch (e) {
    case Errc::VertexOutOfRange: return "vertex_out_of_range";
    case Errc::DuplicateEdge: return "duplicate_edge";
    case Errc::SelfLoop: return "self_loop";
    case Errc::EdgePresent: return "edge_present";
    case Errc::EmptySet: return "empty_set";
    case Errc::OverlappingOperands: return "overlapping_operands";
    case Errc::BadMarkedSubset: return "bad_marked_subset";
    case Errc::Disconnected: return "disconnected";
    case Errc::ParityMismatch: return "parity_mismatch";
    case Errc::DegreeTooSmall: return "degree_too_small";
    case Errc::CapExceeded: return "cap_exceeded";
    case Errc::BadParameter: return "bad_parameter";
    case Errc::BadFormat: return "bad_format";
    case Errc::ReportMismatch: return "report_mismatch";
    case Errc::Precondition: return "precondition";
  }
  return "unknown";
}

int scale_cap(int default_cap) {
  if (const char* s = std::getenv("CDCRIT_MAX_N")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v > default_cap) return static_cast<int>(v);
  }
  return default_cap;
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), VertexSet(n)) {
  if (n < 0) throw Error(Errc::BadParameter, "negative order");
  finish();
}

void Graph::finish() {
  m_ = 0;
  for (const auto& a : adj_) m_ += a.size();
  m_ /= 2;
  rows_.assign(static_cast<std::size_t>(n_), 0);
  if (n_ <= 64)
    for (int v = 0; v < n_; ++v) rows_[v] = adj_[v].mask64();
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
    throw Error(Errc::BadParameter, "label count differs from order");
}

Graph Graph::build(int n, const std::vector<Edge>& edges, std::vector<std::string> labels) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(Errc::VertexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw Error(Errc::SelfLoop, "self-loop at " + std::to_string(u));
    if (g.adj_[u].contains(v))
      throw Error(Errc::DuplicateEdge,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") repeated");
    g.adj_[u].insert(v);
    g.adj_[v].insert(u);
  }
  g.labels_ = std::move(labels);
  g.finish();
  return g;
}

VertexSet Graph::closed_neighbors(Vertex v) const {
  VertexSet s = adj_[v];
  s.insert(v);
  return s;
}

VertexSet Graph::closed_neighbors(const VertexSet& s) const {
  VertexSet out = s;
  s.for_each([&](Vertex v) { out |= adj_[v]; });
  return out;
}

int Graph::min_degree() const {
  int d = n_ ? n_ : 0;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (Vertex v = adj_[u].next(u); v != -1; v = adj_[u].next(v)) out.emplace_back(u, v);
  return out;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!adj_[u].contains(v)) out.emplace_back(u, v);
  return out;
}

std::string Graph::label(Vertex v) const {
  if (v >= 0 && v < static_cast<int>(labels_.size()) && !labels_[v].empty()) return labels_[v];
  return std::to_string(v);
}

Vertex Graph::find_label(const std::string& l) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == l) return static_cast<Vertex>(i);
  return -1;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  Graph g = *this;
  g.labels_ = std::move(labels);
  g.finish();
  return g;
}

GraphBuilder::GraphBuilder(int n)
    : adj_(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n))),
      labels_(static_cast<std::size_t>(n)) {}

Vertex GraphBuilder::add_vertex(std::string label) {
  for (auto& row : adj_) row.push_back(false);
  adj_.emplace_back(adj_.size() + 1, false);
  labels_.push_back(std::move(label));
  return static_cast<Vertex>(adj_.size() - 1);
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u == v) throw Error(Errc::SelfLoop, "self-loop at " + std::to_string(u));
  adj_.at(u).at(v) = true;
  adj_.at(v).at(u) = true;
}

void GraphBuilder::connect_all(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  for (Vertex u : a)
    for (Vertex v : b) add_edge(u, v);
}

void GraphBuilder::make_clique(const std::vector<Vertex>& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) add_edge(a[i], a[j]);
}

void GraphBuilder::set_label(Vertex v, std::string label) { labels_.at(v) = std::move(label); }

Graph GraphBuilder::finish() const {
  int n = order();
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (adj_[u][v]) edges.emplace_back(u, v);
  bool any_label = std::any_of(labels_.begin(), labels_.end(), [](auto& s) { return !s.empty(); });
  return Graph::build(n, edges, any_label ? labels_ : std::vector<std::string>{});
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
    throw Error(Errc::VertexOutOfRange, "add_edge endpoint out of range");
  if (u == v) throw Error(Errc::SelfLoop, "add_edge with u = v");
  if (g.adjacent(u, v))
    throw Error(Errc::EdgePresent,
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") already present");
  auto e = g.edges();
  e.emplace_back(u, v);
  return Graph::build(g.order(), e, g.labels());
}

Graph remove_edge(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
    throw Error(Errc::BadParameter, "remove_edge: not an edge");
  auto e = g.edges();
  std::erase(e, Edge(std::min(u, v), std::max(u, v)));
  return Graph::build(g.order(), e, g.labels());
}

Graph complement(const Graph& g) { return Graph::build(g.order(), g.non_edges(), g.labels()); }

Induced induced(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw Error(Errc::EmptySet, "induced subgraph of an empty set");
  if (s.universe() > g.order()) throw Error(Errc::VertexOutOfRange, "set exceeds host graph");
  Induced r;
  r.old_to_new.assign(static_cast<std::size_t>(g.order()), -1);
  r.new_to_old = s.to_vector();
  for (std::size_t i = 0; i < r.new_to_old.size(); ++i) r.old_to_new[r.new_to_old[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < r.new_to_old.size(); ++i) {
    Vertex u = r.new_to_old[i];
    if (!g.labels().empty()) labels.push_back(g.labels()[u]);
    for (std::size_t j = i + 1; j < r.new_to_old.size(); ++j)
      if (g.adjacent(u, r.new_to_old[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  r.graph = Graph::build(static_cast<int>(r.new_to_old.size()), edges, std::move(labels));
  return r;
}

Graph permute(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    labels.resize(g.labels().size());
    for (int v = 0; v < g.order(); ++v) labels[perm[v]] = g.labels()[v];
  }
  return Graph::build(g.order(), edges, std::move(labels));
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet comp(g.order());
    VertexSet frontier(g.order());
    frontier.insert(left.first());
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next(g.order());
      frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
      next &= left;
      next -= comp;
      frontier = next;
    }
    left -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, VertexSet::full(g.order())); }

bool is_connected(const Graph& g) { return g.order() > 0 && components(g).size() == 1; }

bool is_connected_subset(const Graph& g, const VertexSet& s) {
  return !s.empty() && components(g, s).size() == 1;
}

std::vector<int> bfs_distances(const Graph& g, Vertex src) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop_front();
    g.neighbors(u).for_each([&](Vertex w) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push_back(w);
      }
    });
  }
  return dist;
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
    throw Error(Errc::VertexOutOfRange, "distance endpoint out of range");
  int d = bfs_distances(g, u)[v];
  if (d < 0) return std::nullopt;
  return d;
}

std::optional<int> diameter(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  int best = 0;
  for (int u = 0; u < g.order(); ++u) {
    for (int d : bfs_distances(g, u)) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::build(n, e);
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::build(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(Errc::BadParameter, "cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  e.emplace_back(0, n - 1);
  return Graph::build(n, e);
}

Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph::build(leaves + 1, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  JoinExpr x;
  x.add(a);
  x.add(b);
  return join(x);
}

int JoinExpr::add(Graph piece) {
  ops_.push_back(std::move(piece));
  return static_cast<int>(ops_.size() - 1);
}

int JoinExpr::add_vertex(const std::string& label) { return add(Graph(1).with_labels({label})); }

int JoinExpr::add_clique(int n, const std::string& prefix) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(prefix + std::to_string(i));
  return add(complete_graph(n).with_labels(std::move(labels)));
}

namespace {
void check_pair(const std::vector<Graph>& ops, int a, int b) {
  int m = static_cast<int>(ops.size());
  if (a < 0 || b < 0 || a >= m || b >= m) throw Error(Errc::BadParameter, "join operand index out of range");
  if (a == b) throw Error(Errc::OverlappingOperands, "an operand cannot be joined to itself");
}
}  // namespace

JoinExpr& JoinExpr::full(int a, int b) {
  check_pair(ops_, a, b);
  links_.push_back({a, b, Mode::Full, {}, -1, -1});
  return *this;
}

JoinExpr& JoinExpr::restricted(int a, int b, VertexSet marked) {
  check_pair(ops_, a, b);
  if (marked.universe() != ops_[b].order() || marked.empty())
    throw Error(Errc::BadMarkedSubset, "marked subset is not a nonempty subset of the right operand");
  links_.push_back({a, b, Mode::Restricted, std::move(marked), -1, -1});
  return *this;
}

JoinExpr& JoinExpr::attach(int a, Vertex va, int b, Vertex vb) {
  check_pair(ops_, a, b);
  if (va < 0 || vb < 0 || va >= ops_[a].order() || vb >= ops_[b].order())
    throw Error(Errc::VertexOutOfRange, "attach endpoint out of range");
  links_.push_back({a, b, Mode::Attach, {}, va, vb});
  return *this;
}

JoinExpr JoinExpr::chain(std::vector<Graph> pieces) {
  JoinExpr x;
  for (auto& p : pieces) x.add(std::move(p));
  for (int i = 0; i + 1 < static_cast<int>(x.ops_.size()); ++i) x.full(i, i + 1);
  return x;
}

int JoinExpr::offset(int operand) const {
  int off = 0;
  for (int i = 0; i < operand; ++i) off += ops_[i].order();
  return off;
}

Graph join(const JoinExpr& expr) {
  const auto& ops = expr.operands();
  int n = expr.offset(static_cast<int>(ops.size()));
  GraphBuilder b(n);
  for (int i = 0; i < static_cast<int>(ops.size()); ++i) {
    int off = expr.offset(i);
    for (auto [u, v] : ops[i].edges()) b.add_edge(u + off, v + off);
    for (int v = 0; v < ops[i].order(); ++v)
      if (!ops[i].labels().empty()) b.set_label(v + off, ops[i].labels()[v]);
  }
  for (const auto& l : expr.links()) {
    int oa = expr.offset(l.a), ob = expr.offset(l.b);
    switch (l.mode) {
      case JoinExpr::Mode::Full:
        for (int u = 0; u < ops[l.a].order(); ++u)
          for (int v = 0; v < ops[l.b].order(); ++v) b.add_edge(u + oa, v + ob);
        break;
      case JoinExpr::Mode::Restricted:
        for (int u = 0; u < ops[l.a].order(); ++u)
          l.marked.for_each([&](Vertex v) { b.add_edge(u + oa, v + ob); });
        break;
      case JoinExpr::Mode::Attach:
        b.add_edge(l.va + oa, l.vb + ob);
        break;
    }
  }
  return b.finish();
}

Graph join(const Graph& a, const Graph& b) {
  JoinExpr x;
  x.add(a);
  x.add(b);
  x.full(0, 1);
  return join(x);
}

}  // namespace cdcrit
