#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cdcrit {

using Vertex = int;

// Bitset over the vertex range 0..universe-1 of some host graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<Vertex> vs);
  VertexSet(int universe, const std::vector<Vertex>& vs);

  static VertexSet full(int universe);
  static VertexSet from_mask(int universe, std::uint64_t mask);

  int universe() const { return universe_; }
  bool contains(Vertex v) const {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }
  void insert(Vertex v);
  void erase(Vertex v);
  int size() const;
  bool empty() const;

  // -1 when absent.
  Vertex first() const;
  Vertex next(Vertex v) const;

  std::vector<Vertex> to_vector() const;
  std::uint64_t mask64() const;  // universe <= 64
  const std::vector<std::uint64_t>& words() const { return words_; }

  bool subset_of(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;

  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  VertexSet complement() const;

  bool operator==(const VertexSet& o) const = default;
  // Lexicographic order of the sorted element lists.
  friend bool lex_less(const VertexSet& a, const VertexSet& b);

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t x = words_[w];
      while (x) {
        f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(x))));
        x &= x - 1;
      }
    }
  }

  std::string to_string() const;  // "{0,3,5}"

 private:
  void check(Vertex v) const;
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct LexLess {
  bool operator()(const VertexSet& a, const VertexSet& b) const { return lex_less(a, b); }
};

}  // namespace cdcrit
