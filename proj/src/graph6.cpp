#include "cdcrit/graph6.hpp"

namespace cdcrit {

std::string to_graph6(const Graph& g) {
  int n = g.order();
  if (n > 258047) throw Error(Errc::CapExceeded, "graph6 supports n <= 258047");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  }
  if (bits) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(std::string_view s) {
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  if (s.empty()) throw Error(Errc::BadFormat, "empty graph6 string");
  for (char c : s)
    if (c < 63 || c > 126) throw Error(Errc::BadFormat, "graph6 byte out of range");
  std::size_t pos = 0;
  int n;
  if (s[0] != 126) {
    n = s[0] - 63;
    pos = 1;
  } else {
    if (s.size() < 4 || s[1] == 126) throw Error(Errc::BadFormat, "unsupported graph6 size field");
    n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
    pos = 4;
  }
  std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t need = (nbits + 5) / 6;
  if (s.size() - pos != need)
    throw Error(Errc::BadFormat, "graph6 length mismatch for n = " + std::to_string(n));
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = s[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (k % 6) {
    int byte = s[pos + k / 6] - 63;
    if (byte & ((1 << (6 - k % 6)) - 1)) throw Error(Errc::BadFormat, "graph6 padding bits not zero");
  }
  return Graph::build(n, edges);
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

}  // namespace cdcrit
