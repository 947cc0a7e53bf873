#include "cdcrit/vertex_set.hpp"

#include "cdcrit/error.hpp"

namespace cdcrit {

namespace {
std::size_t word_count(int universe) { return (static_cast<std::size_t>(universe) + 63) / 64; }
}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {
  if (universe < 0) throw Error(Errc::BadParameter, "negative universe");
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> vs) : VertexSet(universe) {
  for (Vertex v : vs) insert(v);
}

VertexSet::VertexSet(int universe, const std::vector<Vertex>& vs) : VertexSet(universe) {
  for (Vertex v : vs) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~0ULL;
  if (universe % 64) s.words_.back() = (1ULL << (universe % 64)) - 1;
  return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  if (universe > 64) throw Error(Errc::BadParameter, "from_mask needs universe <= 64");
  VertexSet s(universe);
  if (universe < 64) mask &= (1ULL << universe) - 1;
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

void VertexSet::check(Vertex v) const {
  if (v < 0 || v >= universe_)
    throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " outside 0.." +
                                            std::to_string(universe_ - 1));
}

void VertexSet::insert(Vertex v) {
  check(v);
  words_[static_cast<std::size_t>(v) >> 6] |= 1ULL << (v & 63);
}

void VertexSet::erase(Vertex v) {
  check(v);
  words_[static_cast<std::size_t>(v) >> 6] &= ~(1ULL << (v & 63));
}

int VertexSet::size() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

Vertex VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<Vertex>(w * 64 + std::countr_zero(words_[w]));
  return -1;
}

Vertex VertexSet::next(Vertex v) const {
  int u = v + 1;
  if (u >= universe_) return -1;
  std::size_t w = static_cast<std::size_t>(u) >> 6;
  std::uint64_t x = words_[w] & (~0ULL << (u & 63));
  while (true) {
    if (x) return static_cast<Vertex>(w * 64 + std::countr_zero(x));
    if (++w >= words_.size()) return -1;
    x = words_[w];
  }
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

std::uint64_t VertexSet::mask64() const {
  if (universe_ > 64) throw Error(Errc::BadParameter, "mask64 needs universe <= 64");
  return words_.empty() ? 0 : words_[0];
}

bool VertexSet::subset_of(const VertexSet& o) const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~(w < o.words_.size() ? o.words_[w] : 0)) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  std::size_t k = std::min(words_.size(), o.words_.size());
  for (std::size_t w = 0; w < k; ++w)
    if (words_[w] & o.words_[w]) return true;
  return false;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= w < o.words_.size() ? o.words_[w] : 0;
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  if (o.universe_ > universe_) throw Error(Errc::VertexOutOfRange, "union with larger universe");
  for (std::size_t w = 0; w < o.words_.size(); ++w) words_[w] |= o.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  std::size_t k = std::min(words_.size(), o.words_.size());
  for (std::size_t w = 0; w < k; ++w) words_[w] &= ~o.words_[w];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet f = full(universe_);
  f -= *this;
  return f;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  // Smallest element d of the symmetric difference decides, unless one list
  // is a prefix of the other.
  std::size_t k = std::max(a.words_.size(), b.words_.size());
  for (std::size_t w = 0; w < k; ++w) {
    std::uint64_t x = w < a.words_.size() ? a.words_[w] : 0;
    std::uint64_t y = w < b.words_.size() ? b.words_[w] : 0;
    if (x == y) continue;
    Vertex d = static_cast<Vertex>(w * 64 + std::countr_zero(x ^ y));
    if (a.contains(d)) return b.next(d) != -1;  // b continues with something larger
    return a.next(d) == -1;
  }
  return false;
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first_el = true;
  for_each([&](Vertex v) {
    if (!first_el) s += ",";
    s += std::to_string(v);
    first_el = false;
  });
  return s + "}";
}

}  // namespace cdcrit
