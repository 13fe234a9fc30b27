#include "oddcycle/graph6.hpp"

#include <sstream>

namespace oddcycle {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::size_t kMaxGraph6Order = std::size_t{1} << 18;

int body_value(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126) throw FormatError("graph6 byte " + std::to_string(u) + " outside 63..126");
  return u - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw FormatError("empty graph6 record");

  std::size_t n = 0;
  std::size_t pos = 0;
  if (static_cast<unsigned char>(text[0]) == 126) {
    if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
      throw FormatError("graph6 size encodings above 2^18 are not supported");
    if (text.size() < 4) throw FormatError("truncated graph6 size field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(body_value(text[i]));
    pos = 4;
  } else {
    n = static_cast<std::size_t>(body_value(text[0]));
    pos = 1;
  }
  if (n > kMaxVertices)
    throw FormatError("graph6 record has " + std::to_string(n) + " vertices; limit is " + std::to_string(kMaxVertices));

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw FormatError("truncated graph6 bit vector");
  if (text.size() - pos > bytes) throw FormatError("trailing bytes after graph6 bit vector");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int byte = body_value(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  for (std::size_t b = pos; b < text.size(); ++b) body_value(text[b]);
  return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n >= kMaxGraph6Order) throw FormatError("graph too large for graph6 encoding");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_edge_list(std::istream& in) {
  std::size_t n = 0, m = 0;
  if (!(in >> n >> m)) throw FormatError("edge list must start with \"n m\"");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) throw FormatError("edge list truncated at edge " + std::to_string(i));
    if (u < 0 || v < 0) throw FormatError("negative vertex in edge list");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph(n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  const auto e = g.edges();
  os << g.order() << ' ' << e.size() << '\n';
  for (const auto& [u, v] : e) os << u << ' ' << v << '\n';
  return os.str();
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

}  // namespace oddcycle
