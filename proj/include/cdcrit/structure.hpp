#pragma once

#include <map>
#include <string>

#include "cdcrit/graph.hpp"

namespace cdcrit {

struct StructureVerdict {
  bool holds = false;
  std::map<std::string, VertexSet> witness;  // named sets, e.g. X, X1, Y, Y1
  std::string note;
  explicit operator bool() const { return holds; }
};

// Disjoint nonempty X, X1, Y, Y1 where every vertex of X1 is adjacent to all
// other vertices of X ∪ X1, N[x] ⊆ X ∪ X1 for x in X, and likewise for Y, Y1.
// holds = a bad subgraph exists. Exponential; n <= cap (default 14).
StructureVerdict find_bad_subgraph(const Graph& g, int cap = 14);
// Re-validates a witness against the four conditions.
bool is_bad_subgraph(const Graph& g, const VertexSet& x, const VertexSet& x1, const VertexSet& y,
                     const VertexSet& y1);

enum class B3Rule {
  AsDefined,      // properties (1) and (2) only
  WithHeadBound,  // additionally every CDS of B containing the head has >= 4 vertices
};

// End-block class defined by CDS properties relative to the head.
StructureVerdict is_b3_block(const Graph& b, Vertex head, B3Rule rule = B3Rule::AsDefined);

// Maximal clique h with properties (i) and (ii) relative to a k-critical g.
StructureVerdict is_pk_member(const Graph& g, const VertexSet& h);

StructureVerdict is_claw_free(const Graph& g);
// diam(g) = k and deleting any edge raises the diameter (disconnection counts).
StructureVerdict is_diameter_critical(const Graph& g, int k);
// Complement is a disjoint union of at least two stars (each with >= 1 leaf).
StructureVerdict is_two_crit_complement_of_stars(const Graph& g);

// Block shaped like the complement-of-stars end block: b - head has a
// complement made of >= 2 stars plus isolated vertices, and the head is
// adjacent exactly to the star leaves (one end of each K2 star).
StructureVerdict is_b22_shaped(const Graph& b, Vertex head);

// Structural certificate for a k-critical graph with exactly k-3 cut
// vertices: the block chain has one of the two shapes built by gen_g1 and
// gen_g2. witness["shape"] is absent; note is "G1" or "G2" when holds.
StructureVerdict classify_k3(const Graph& g, int k);

}  // namespace cdcrit
