#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdcrit/error.hpp"
#include "cdcrit/vertex_set.hpp"

namespace cdcrit {

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1. Labels are advisory and
// do not take part in equality.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);  // edgeless

  static Graph build(int n, const std::vector<Edge>& edges,
                     std::vector<std::string> labels = {});

  int order() const { return n_; }
  int size() const { return m_; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  VertexSet closed_neighbors(Vertex v) const;
  // Union of closed neighbourhoods.
  VertexSet closed_neighbors(const VertexSet& s) const;
  int degree(Vertex v) const { return adj_[v].size(); }
  int min_degree() const;
  // Single-word adjacency rows; only valid when order() <= 64.
  std::uint64_t row(Vertex v) const { return rows_[v]; }
  bool word_sized() const { return n_ <= 64; }

  std::vector<Edge> edges() const;      // u < v, lexicographic
  std::vector<Edge> non_edges() const;  // u < v, lexicographic

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Vertex v) const;
  // First vertex carrying this label; -1 if none.
  Vertex find_label(const std::string& label) const;
  Graph with_labels(std::vector<std::string> labels) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  friend class GraphBuilder;
  void finish();
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::string> labels_;
};

// Mutable edge accumulator used by generators. Duplicate insertions are
// ignored here; Graph::build is the strict entry point.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n = 0);
  Vertex add_vertex(std::string label = {});
  void add_edge(Vertex u, Vertex v);
  void connect_all(const std::vector<Vertex>& a, const std::vector<Vertex>& b);
  void make_clique(const std::vector<Vertex>& a);
  void set_label(Vertex v, std::string label);
  int order() const { return static_cast<int>(adj_.size()); }
  Graph finish() const;

 private:
  std::vector<std::vector<bool>> adj_;
  std::vector<std::string> labels_;
};

Graph add_edge(const Graph& g, Vertex u, Vertex v);
Graph remove_edge(const Graph& g, Vertex u, Vertex v);
Graph complement(const Graph& g);

struct Induced {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for dropped vertices
  std::vector<Vertex> new_to_old;
};
Induced induced(const Graph& g, const VertexSet& s);
// Relabel: vertex v of g becomes perm[v].
Graph permute(const Graph& g, const std::vector<int>& perm);

bool is_connected(const Graph& g);
// Vertex sets of the components of g[within].
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);
std::vector<VertexSet> components(const Graph& g);
bool is_connected_subset(const Graph& g, const VertexSet& s);
// nullopt when v is unreachable from u.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);
std::vector<int> bfs_distances(const Graph& g, Vertex src);  // -1 unreachable
// nullopt for a disconnected graph.
std::optional<int> diameter(const Graph& g);

// Standard small graphs.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph disjoint_union(const Graph& a, const Graph& b);

// Join expression: operands are vertex-disjoint pieces, links join pairs of
// operands. Vertex numbering of the result concatenates operands in order.
class JoinExpr {
 public:
  enum class Mode { Full, Restricted, Attach };
  struct Link {
    int a = 0, b = 0;
    Mode mode = Mode::Full;
    VertexSet marked;  // Restricted: subset of operand b
    Vertex va = -1, vb = -1;  // Attach: local endpoints
  };

  int add(Graph piece);
  int add_vertex(const std::string& label);
  int add_clique(int n, const std::string& prefix);
  JoinExpr& full(int a, int b);
  JoinExpr& restricted(int a, int b, VertexSet marked);
  JoinExpr& attach(int a, Vertex va, int b, Vertex vb);

  // Consecutive full joins G1 v G2 v ... v Gm.
  static JoinExpr chain(std::vector<Graph> pieces);

  const std::vector<Graph>& operands() const { return ops_; }
  const std::vector<Link>& links() const { return links_; }
  int offset(int operand) const;

 private:
  std::vector<Graph> ops_;
  std::vector<Link> links_;
};

Graph join(const JoinExpr& expr);
Graph join(const Graph& a, const Graph& b);

}  // namespace cdcrit
