// graph6 codec (byte-exact per the public format), edge-list text I/O and
// DOT export.
#pragma once

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "clawperf/graph.hpp"

namespace clawperf {

// Upper-triangle bits in column order: for j = 1..n-1, i = 0..j-1.
inline std::string graph6_encode(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    // 63 <= n <= 258047: '~' then 18 bits, high to low, 6 per byte.
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline Graph graph6_decode(const std::string& line) {
  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= line.size()) throw std::runtime_error("graph6: truncated input");
    unsigned char c = static_cast<unsigned char>(line[pos++]);
    if (c < 63 || c > 126) throw std::runtime_error("graph6: byte out of range");
    return c - 63;
  };
  if (line.empty()) throw std::runtime_error("graph6: empty line");
  long n;
  if (line[0] == '~') {
    ++pos;
    if (pos + 3 > line.size()) throw std::runtime_error("graph6: malformed header");
    if (line[pos] == '~') throw std::runtime_error("graph6: order exceeds supported range");
    long a = next(), b = next(), c = next();
    n = (a << 12) | (b << 6) | c;
  } else {
    n = next();
  }
  if (n > kMaxOrder) throw std::runtime_error("graph6: order exceeds 64");
  Graph g(static_cast<int>(n));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (nbits == 0) {
        acc = next();
        nbits = 6;
      }
      if ((acc >> (nbits - 1)) & 1) g.add_edge(i, j);
      --nbits;
    }
  if (nbits > 0 && (acc & ((1 << nbits) - 1)) != 0)
    throw std::runtime_error("graph6: nonzero padding bits");
  if (pos != line.size()) throw std::runtime_error("graph6: trailing garbage");
  return g;
}

// Plain edge-list text: "n m" header, then one "u v" pair per line.
inline Graph read_edge_list(std::istream& in) {
  int n, m;
  if (!(in >> n >> m)) throw std::runtime_error("edge list: missing 'n m' header");
  if (n < 0 || n > kMaxOrder) throw std::runtime_error("edge list: order out of range");
  Graph g(n);
  for (int i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw std::runtime_error("edge list: truncated");
    g.add_edge(u, v);
  }
  return g;
}

inline void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string to_dot(const Graph& g, const std::string& name = "G") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace clawperf
