#pragma once

#include <cstddef>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spantree/graph.hpp"

namespace spantree {

/// Error raised by the text parsers; carries the 1-based input line.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& message, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

namespace detail {

inline bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

inline bool parse_two_ints(const std::string& text, long long& a,
                           long long& b) {
  std::istringstream iss(text);
  if (!(iss >> a >> b))
    return false;
  std::string rest;
  if (iss >> rest)
    return false;
  return true;
}

}  // namespace detail

// Edge-list format: '#' comment lines anywhere, blank lines ignored,
// first content line "n m", then exactly m lines "u v" (0-indexed).

inline Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  long long n = -1, m = -1;
  std::size_t header_line = 0;

  while (std::getline(in, line)) {
    ++lineno;
    if (detail::is_blank(line) || line.starts_with('#'))
      continue;
    if (!detail::parse_two_ints(line, n, m) || n < 1 || m < 0)
      throw parse_error("malformed header, expected \"n m\"", lineno);
    header_line = lineno;
    break;
  }
  if (header_line == 0)
    throw parse_error("malformed header, expected \"n m\"", lineno + 1);

  std::vector<Graph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  long long seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::is_blank(line) || line.starts_with('#'))
      continue;
    if (seen == m)
      throw parse_error("edge count mismatch: more than " +
                            std::to_string(m) + " edge lines",
                        lineno);
    long long u, v;
    if (!detail::parse_two_ints(line, u, v))
      throw parse_error("malformed edge line, expected \"u v\"", lineno);
    if (u == v)
      throw parse_error("self-loop " + std::to_string(u) + "-" +
                            std::to_string(v),
                        lineno);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw parse_error("vertex index out of range [0, " + std::to_string(n) +
                            ")",
                        lineno);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    ++seen;
  }
  if (seen != m)
    throw parse_error("edge count mismatch: header declares " +
                          std::to_string(m) + " edges, found " +
                          std::to_string(seen),
                      lineno + 1);
  return Graph(static_cast<int>(n), std::move(edges));
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream iss{std::string(text)};
  return parse_edge_list(iss);
}

inline std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (const auto& [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

// graph6 format, single-byte size field only (n <= 62): byte 0 is n+63,
// then the upper-triangle adjacency bits in column order x(0,1), x(0,2),
// x(1,2), x(0,3), ... packed big-endian into 6-bit groups, zero-padded,
// each group emitted as value+63 in the printable range [63,126].

inline constexpr int kGraph6MaxVertices = 62;

inline Graph parse_graph6(std::string_view text) {
  while (text.ends_with('\n') || text.ends_with('\r'))
    text.remove_suffix(1);
  if (text.empty())
    throw parse_error("graph6: empty input", 1);

  const unsigned char size_byte = static_cast<unsigned char>(text[0]);
  if (size_byte == 126)
    throw parse_error("graph6: multi-byte size (n > 62) is unsupported", 1);
  if (size_byte < 63 || size_byte > 126)
    throw parse_error("graph6: byte outside printable range [63,126]", 1);
  const int n = size_byte - 63;
  if (n == 0)
    throw parse_error("graph6: empty graph (n = 0) is unsupported", 1);

  const std::size_t bits_needed = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t groups = (bits_needed + 5) / 6;
  const std::string_view body = text.substr(1);
  if (body.size() < groups)
    throw parse_error("graph6: truncated body", 1);
  if (body.size() > groups)
    throw parse_error("graph6: trailing garbage after body", 1);

  std::vector<Graph::Edge> edges;
  std::size_t bit = 0;
  int col = 1, row = 0;
  for (char c : body) {
    const unsigned char byte = static_cast<unsigned char>(c);
    if (byte < 63 || byte > 126)
      throw parse_error("graph6: byte outside printable range [63,126]", 1);
    const unsigned group = byte - 63;
    for (int k = 5; k >= 0; --k, ++bit) {
      const bool set = (group >> k) & 1u;
      if (bit >= bits_needed) {
        if (set)
          throw parse_error("graph6: nonzero padding bits", 1);
        continue;
      }
      if (set)
        edges.emplace_back(row, col);
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  return Graph(n, std::move(edges));
}

inline std::string write_graph6(const Graph& g) {
  if (g.n() > kGraph6MaxVertices)
    throw std::domain_error("graph6: only graphs with n <= 62 are supported");
  std::string out;
  out.push_back(static_cast<char>(g.n() + 63));

  unsigned group = 0;
  int filled = 0;
  for (int col = 1; col < g.n(); ++col) {
    for (int row = 0; row < col; ++row) {
      group = (group << 1) | (g.has_edge(row, col) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled != 0)
    out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

/// Input format selector for files and streams.
enum class GraphFormat { edge_list, graph6 };

inline Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::graph6 ? parse_graph6(text)
                                       : parse_edge_list(text);
}

}  // namespace spantree
