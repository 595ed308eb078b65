#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bookram/graph.hpp"

namespace bookram {

struct Graph6Error : std::runtime_error {
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        byte_offset(offset) {}
  std::size_t byte_offset;
};

// graph6: printable bytes 63..126, upper triangle column-major, MSB first.
inline Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  std::size_t base = 0;
  if (text.substr(0, header.size()) == header) {
    text.remove_prefix(header.size());
    base = header.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 string", base);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size())
      throw Graph6Error("truncated graph6 string", base + text.size());
    unsigned char c = text[i];
    if (c < 63 || c > 126)
      throw Graph6Error("byte out of printable graph6 range", base + i);
    return c - 63;
  };

  std::size_t pos = 0;
  long long n;
  if (text[0] != '~') {
    n = byte_at(0);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~')
      throw Graph6Error("8-byte order encoding not supported", base + 1);
    n = 0;
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | byte_at(i);
    pos = 4;
  }

  Graph g{int(n)};
  std::size_t need = std::size_t((n * (n - 1) / 2 + 5) / 6);
  if (text.size() - pos != need)
    throw Graph6Error("wrong graph6 length for order " + std::to_string(n),
                      base + text.size());

  int bits = 0, val = 0;
  std::size_t at = pos;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      if (bits == 0) {
        at = pos;
        val = byte_at(pos++);
        bits = 6;
      }
      if (val & (1 << (bits - 1))) g.add_edge(u, v);
      --bits;
    }
  if (bits > 0 && (val & ((1 << bits) - 1)))
    throw Graph6Error("nonzero padding bits", base + at);
  return g;
}

inline std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(char(n + 63));
  } else {
    out.push_back('~');
    out.push_back(char(((n >> 12) & 63) + 63));
    out.push_back(char(((n >> 6) & 63) + 63));
    out.push_back(char((n & 63) + 63));
  }
  int bits = 0, val = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      val = (val << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(char(val + 63));
        bits = val = 0;
      }
    }
  if (bits > 0) out.push_back(char((val << (6 - bits)) + 63));
  return out;
}

}  // namespace bookram
