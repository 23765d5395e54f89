#include "nearlyz/graph6.hpp"

#include <charconv>
#include <string>

namespace nearlyz {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

bool printable6(unsigned char c) { return c >= 63 && c <= 126; }

} // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader)
    pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);

  if (pos >= text.size())
    throw ParseError("graph6: missing length header", pos);
  auto head = static_cast<unsigned char>(text[pos]);
  if (head == 126)
    throw ParseError("graph6: long-form length header unsupported (n > 62)", pos);
  if (!printable6(head))
    throw ParseError("graph6: non-printable length byte", pos);
  const std::size_t n = head - 63;
  ++pos;

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes)
    throw ParseError("graph6: truncated adjacency data", text.size());

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t i = 0; i < bytes; ++i) {
    auto c = static_cast<unsigned char>(text[pos + i]);
    if (!printable6(c))
      throw ParseError("graph6: non-printable byte", pos + i);
    unsigned value = c - 63;
    for (int b = 5; b >= 0; --b, ++k) {
      if (k >= bits) {
        if ((value >> b) & 1U)
          throw ParseError("graph6: nonzero padding bit", pos + i);
        continue;
      }
      if ((value >> b) & 1U) {
        // column-major upper triangle: k enumerates (0,1),(0,2),(1,2),(0,3),...
        std::size_t j = 1;
        std::size_t start = 0;
        while (start + j <= k) {
          start += j;
          ++j;
        }
        edges.emplace_back(static_cast<VertexId>(k - start), static_cast<VertexId>(j));
      }
    }
  }
  if (pos + bytes != text.size())
    throw ParseError("graph6: trailing garbage", pos + bytes);
  return Graph(n, edges);
}

std::string to_graph6(const Graph &g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder)
    throw GraphError("graph6 short form supports n <= 62, got " + std::to_string(n));
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  unsigned acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(static_cast<VertexId>(i), static_cast<VertexId>(j)) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

std::vector<Graph> parse_graph6_stream(std::istream &in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty())
      continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

std::vector<Graph> parse_edge_list(std::string_view text) {
  std::vector<Graph> out;
  std::size_t pos = 0;

  auto skip_blank = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r'))
      ++pos;
  };
  auto read_number = [&](std::size_t &value) {
    skip_blank();
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc())
      throw ParseError("edge list: expected a nonnegative integer", pos);
    pos = static_cast<std::size_t>(ptr - text.data());
  };
  auto end_of_line = [&] {
    skip_blank();
    if (pos < text.size() && text[pos] != '\n')
      throw ParseError("edge list: unexpected character", pos);
    if (pos < text.size())
      ++pos;
  };
  auto line_is_blank = [&] {
    std::size_t p = pos;
    while (p < text.size() && (text[p] == ' ' || text[p] == '\t' || text[p] == '\r'))
      ++p;
    return p >= text.size() || text[p] == '\n';
  };

  while (pos < text.size()) {
    if (line_is_blank()) {
      while (pos < text.size() && text[pos] != '\n')
        ++pos;
      if (pos < text.size())
        ++pos;
      continue;
    }
    std::size_t n = 0;
    read_number(n);
    end_of_line();
    std::vector<Edge> edges;
    while (pos < text.size() && !line_is_blank()) {
      std::size_t line_start = pos;
      std::size_t a = 0;
      std::size_t b = 0;
      read_number(a);
      read_number(b);
      end_of_line();
      if (a >= n || b >= n)
        throw ParseError("edge list: vertex out of range", line_start);
      if (a == b)
        throw ParseError("edge list: loop", line_start);
      edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }
    try {
      out.emplace_back(n, edges);
    } catch (const GraphError &e) {
      throw ParseError(std::string("edge list: ") + e.what(), pos);
    }
  }
  return out;
}

} // namespace nearlyz
