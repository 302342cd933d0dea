#pragma once

#include <array>
#include <cassert>
#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "factorseq/degree_sequence.hpp"
#include "factorseq/errors.hpp"

namespace factorseq {

inline constexpr int kMaxVertices = 16;

// Vertex subset as a bitmask, bit i = vertex i (0-based).
using VertexSet = std::uint16_t;

inline VertexSet vbit(int v) noexcept { return static_cast<VertexSet>(1u << v); }

// Simple undirected graph on at most 16 vertices, adjacency kept as one
// bitmask row per vertex. Everything the oracles do reduces to popcounts
// and mask walks on this representation.
class SmallGraph {
 public:
  SmallGraph() = default;

  explicit SmallGraph(int n) : n_(n) {
    require(n >= 0, errc::range_error, "vertex count must be nonnegative");
    require(n <= kMaxVertices, errc::too_large,
            "graph too large: n=" + std::to_string(n) + " exceeds " +
                std::to_string(kMaxVertices));
  }

  int n() const noexcept { return n_; }

  VertexSet full_set() const noexcept {
    return static_cast<VertexSet>(n_ == 16 ? 0xffffu : ((1u << n_) - 1u));
  }

  bool has_edge(int u, int v) const noexcept {
    assert(u >= 0 && u < n_ && v >= 0 && v < n_);
    return adj_[u] & vbit(v);
  }

  void add_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] |= vbit(v);
    adj_[v] |= vbit(u);
  }

  void remove_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] &= static_cast<VertexSet>(~vbit(v));
    adj_[v] &= static_cast<VertexSet>(~vbit(u));
  }

  VertexSet neighbors(int v) const noexcept { return adj_[v]; }

  int degree(int v) const noexcept { return std::popcount(adj_[v]); }

  int edge_count() const noexcept {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
  }

  std::vector<int> degree_assignment() const {
    std::vector<int> out(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) out[static_cast<std::size_t>(v)] = degree(v);
    return out;
  }

  DegreeSequence degree_sequence() const { return DegreeSequence(degree_assignment()); }

  static SmallGraph complete(int n) {
    SmallGraph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
  }

  friend bool operator==(const SmallGraph&, const SmallGraph&) = default;

 private:
  void check_pair(int u, int v) const {
    require(u >= 0 && u < n_ && v >= 0 && v < n_, errc::range_error,
            "vertex out of range");
    require(u != v, errc::range_error, "loops are not allowed");
  }

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

// Vertices of the component of `v` inside the induced subgraph on `mask`.
inline VertexSet component_containing(const SmallGraph& g, VertexSet mask, int v) {
  VertexSet comp = vbit(v) & mask;
  VertexSet frontier = comp;
  while (frontier) {
    VertexSet next = 0;
    VertexSet f = frontier;
    while (f) {
      int u = std::countr_zero(f);
      f &= static_cast<VertexSet>(f - 1);
      next |= static_cast<VertexSet>(g.neighbors(u) & mask & ~comp);
    }
    comp |= next;
    frontier = next;
  }
  return comp;
}

inline int component_count(const SmallGraph& g, VertexSet mask) {
  int count = 0;
  VertexSet rest = mask;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= static_cast<VertexSet>(~component_containing(g, mask, v));
    ++count;
  }
  return count;
}

inline bool is_connected(const SmallGraph& g) {
  if (g.n() == 0) return true;
  return component_containing(g, g.full_set(), 0) == g.full_set();
}

// Havel-Hakimi: repeatedly connect a highest-degree vertex to the next
// highest ones. Vertex i of the result receives target degree pi.d(i+1).
inline SmallGraph realize(const DegreeSequence& pi) {
  require(pi.n() <= kMaxVertices, errc::too_large,
          "realize supports at most " + std::to_string(kMaxVertices) + " vertices");
  require(is_graphical(pi), errc::not_graphical,
          "sequence " + render(pi) + " is not graphical");

  const int n = pi.n();
  SmallGraph g(n);
  // (remaining degree, vertex id)
  std::vector<std::pair<int, int>> rem(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rem[static_cast<std::size_t>(i)] = {pi.d(i + 1), i};

  for (int round = 0; round < n; ++round) {
    std::sort(rem.begin(), rem.end());
    auto [dv, v] = rem.back();
    if (dv == 0) break;
    // connect v to the dv largest remaining others
    for (int j = 0; j < dv; ++j) {
      auto& [du, u] = rem[rem.size() - 2 - static_cast<std::size_t>(j)];
      g.add_edge(v, u);
      --du;
    }
    rem.back().first = 0;
  }
  return g;
}

// Text format: first line the vertex count, then one "u v" edge per line,
// 1-based endpoints. Blank lines and '#' comment lines are ignored.
inline SmallGraph read_graph_text(std::istream& in) {
  std::string line;
  int n = -1;
  SmallGraph g;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string extra;
    if (n < 0) {
      require(static_cast<bool>(ls >> n), errc::parse_error,
              "line " + std::to_string(line_no) + ": expected vertex count");
      require(n >= 0, errc::parse_error, "negative vertex count");
      require(n <= kMaxVertices, errc::too_large,
              "graph too large: n=" + std::to_string(n));
      g = SmallGraph(n);
      require(!(ls >> extra), errc::parse_error,
              "line " + std::to_string(line_no) + ": expected vertex count only");
      continue;
    }
    int u, v;
    require(static_cast<bool>(ls >> u) && static_cast<bool>(ls >> v), errc::parse_error,
            "line " + std::to_string(line_no) + ": expected two endpoints");
    require(!(ls >> extra), errc::parse_error,
            "line " + std::to_string(line_no) + ": expected two endpoints only");
    require(u >= 1 && u <= n && v >= 1 && v <= n, errc::range_error,
            "line " + std::to_string(line_no) + ": endpoint out of range");
    require(u != v, errc::range_error,
            "line " + std::to_string(line_no) + ": loops are not allowed");
    g.add_edge(u - 1, v - 1);
  }
  require(n >= 0, errc::parse_error, "missing vertex count line");
  return g;
}

inline void write_graph_text(std::ostream& out, const SmallGraph& g) {
  out << g.n() << '\n';
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.has_edge(u, v)) out << (u + 1) << ' ' << (v + 1) << '\n';
}

inline SmallGraph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_graph_text(in);
}

inline std::string graph_text(const SmallGraph& g) {
  std::ostringstream out;
  write_graph_text(out, g);
  return out.str();
}

// graph6: byte n+63, then the upper triangle read column by column
// (pairs (0,1),(0,2),(1,2),(0,3),...), packed big-endian six bits per
// byte, each byte offset by 63, zero-padded to a whole byte.
inline std::string to_graph6(const SmallGraph& g) {
  std::string out;
  out += static_cast<char>(g.n() + 63);
  int acc = 0, nbits = 0;
  for (int v = 1; v < g.n(); ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out += static_cast<char>((acc << (6 - nbits)) + 63);
  return out;
}

inline SmallGraph from_graph6(std::string_view text) {
  require(!text.empty(), errc::parse_error, "empty graph6 string");
  int n = static_cast<unsigned char>(text[0]) - 63;
  require(n >= 0, errc::parse_error, "bad graph6 size byte");
  require(n <= kMaxVertices, errc::too_large, "graph too large: n=" + std::to_string(n));
  SmallGraph g(n);
  int bits_needed = n * (n - 1) / 2;
  int bytes_needed = (bits_needed + 5) / 6;
  require(static_cast<int>(text.size()) == 1 + bytes_needed, errc::parse_error,
          "graph6 length mismatch: expected " + std::to_string(1 + bytes_needed) +
              " bytes, got " + std::to_string(text.size()));
  int bit_index = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      int byte = static_cast<unsigned char>(text[1 + static_cast<std::size_t>(bit_index / 6)]) - 63;
      require(byte >= 0 && byte < 64, errc::parse_error, "bad graph6 data byte");
      int bit = (byte >> (5 - bit_index % 6)) & 1;
      if (bit) g.add_edge(u, v);
      ++bit_index;
    }
  }
  // padding bits must be zero
  if (bits_needed % 6 != 0) {
    int last = static_cast<unsigned char>(text.back()) - 63;
    int pad = 6 - bits_needed % 6;
    require((last & ((1 << pad) - 1)) == 0, errc::parse_error,
            "nonzero padding bits in graph6 string");
  }
  return g;
}

}  // namespace factorseq
