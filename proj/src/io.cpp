#include "deltacvx/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace deltacvx {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line, std::size_t offset) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw FormatError("line " + std::to_string(line) + ": expected a nonnegative integer, got '" +
                          std::string(tok) + "'",
                      line, offset);
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0, pos = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    const std::size_t line_offset = pos;
    pos = end + 1;
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto tok = tokens(body);
    if (!have_header) {
      if (tok.size() != 2)
        throw FormatError("line " + std::to_string(line_no) + ": malformed header, expected 'n m'",
                          line_no, line_offset);
      n = parse_count(tok[0], line_no, line_offset);
      m = parse_count(tok[1], line_no, line_offset);
      have_header = true;
      continue;
    }
    if (tok.size() != 2)
      throw FormatError("line " + std::to_string(line_no) + ": expected an edge 'u v'", line_no,
                        line_offset);
    std::size_t u = parse_count(tok[0], line_no, line_offset);
    std::size_t v = parse_count(tok[1], line_no, line_offset);
    if (u >= n || v >= n)
      throw FormatError("line " + std::to_string(line_no) + ": vertex id out of range (n=" +
                            std::to_string(n) + ")",
                        line_no, line_offset);
    if (u == v)
      throw FormatError("line " + std::to_string(line_no) + ": self-loop at vertex " +
                            std::to_string(u),
                        line_no, line_offset);
    if (edges.size() == m)
      throw FormatError("line " + std::to_string(line_no) + ": more edge lines than declared m=" +
                            std::to_string(m),
                        line_no, line_offset);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!have_header) throw FormatError("missing header line 'n m'", line_no, text.size());
  if (edges.size() != m)
    throw FormatError("declared m=" + std::to_string(m) + " edges but found " +
                          std::to_string(edges.size()),
                      line_no, text.size());
  return Graph::from_edges(n, edges);
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  std::size_t base = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  std::size_t i = 0;
  auto next = [&]() -> unsigned {
    if (i >= text.size()) throw FormatError("graph6: unexpected end of data", 1, base + i);
    auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw FormatError("graph6: invalid character at offset " + std::to_string(base + i), 1,
                        base + i);
    ++i;
    return c - 63U;
  };
  std::size_t n = next();
  if (n == 63) {
    if (i < text.size() && text[i] == '~')
      throw FormatError("graph6: graphs with more than 258047 vertices are not supported", 1,
                        base + i);
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | next();
  }
  std::vector<Edge> edges;
  unsigned word = 0;
  int bits_left = 0;
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u) {
      if (bits_left == 0) {
        word = next();
        bits_left = 6;
      }
      --bits_left;
      if ((word >> bits_left) & 1U) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  if (i != text.size())
    throw FormatError("graph6: trailing data at offset " + std::to_string(base + i), 1, base + i);
  return Graph::from_edges(n, edges);
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::EdgeList) return parse_edge_list(text);
  if (format == GraphFormat::Graph6) return parse_graph6(text);
  std::string_view body = trim(text);
  if (body.substr(0, 10) == ">>graph6<<") return parse_graph6(body);
  bool looks_g6 = !body.empty();
  for (char c : body) {
    auto u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126) {
      looks_g6 = false;
      break;
    }
  }
  return looks_g6 ? parse_graph6(body) : parse_edge_list(text);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 258047) throw CapacityError("graph6 encoding supports at most 258047 vertices");
  std::string out;
  if (n < 63) {
    out += static_cast<char>(63 + n);
  } else {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
  }
  unsigned word = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      word = (word << 1) | (g.neighbors(v).contains(u) ? 1U : 0U);
      if (++filled == 6) {
        out += static_cast<char>(63 + word);
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled) out += static_cast<char>(63 + (word << (6 - filled)));
  return out;
}

}  // namespace deltacvx
