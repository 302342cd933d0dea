// Isomorphism-free graph machinery for the acceptance sweeps. Independent
// of the library on purpose: graphs are raw adjacency rows (bit v of
// adj[u] set iff uv is an edge), and nothing here shares code with the
// oracles it helps validate.
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_set>
#include <vector>

namespace isofree {

// Edge code of a vertex ordering: block p holds the adjacency bits of
// position p toward positions 0..p-1 (bit for position 0 is the most
// significant of the block), blocks concatenated in position order. Codes
// fit 64 bits through n = 11; the census stays well below that.
inline constexpr int kMaxCode = 11;

// Minimum edge code over all vertex orderings. Depth-first placement,
// restricted at each position to the rows attaining the minimal block
// (exact for a lexicographic minimum), with two cuts: candidates that are
// twins of an already-tried candidate, and branches whose placed prefix
// already exceeds the best code found. The prefix is re-compared at every
// node because `best` can shrink while a subtree is in progress.
struct MinCodeSearch {
  int n = 0;
  const std::uint16_t* adj = nullptr;
  std::array<std::uint16_t, 16> best{}, rows{};
  std::array<int, 16> perm{};
  bool have_best = false;

  void dfs(int p, std::uint16_t placed) {
    if (have_best) {
      bool less = false, equal = true;
      for (int q = 1; q < p; ++q) {
        if (rows[q] == best[q]) continue;
        equal = false;
        less = rows[q] < best[q];
        break;
      }
      if (!equal && !less) return;
      if (p == n) {
        if (less) best = rows;
        return;
      }
      std::uint16_t row_min = 0xffff;
      std::array<std::uint16_t, 16> row{};
      collect(p, placed, row, row_min);
      if (equal && row_min > best[p]) return;
      descend(p, placed, row, row_min);
      return;
    }
    if (p == n) {
      best = rows;
      have_best = true;
      return;
    }
    std::uint16_t row_min = 0xffff;
    std::array<std::uint16_t, 16> row{};
    collect(p, placed, row, row_min);
    descend(p, placed, row, row_min);
  }

  void collect(int p, std::uint16_t placed, std::array<std::uint16_t, 16>& row,
               std::uint16_t& row_min) const {
    for (int v = 0; v < n; ++v) {
      if (placed & (1u << v)) continue;
      std::uint16_t bits = 0;
      for (int q = 0; q < p; ++q)
        bits = static_cast<std::uint16_t>((bits << 1) | ((adj[v] >> perm[q]) & 1u));
      row[static_cast<std::size_t>(v)] = bits;
      row_min = std::min(row_min, bits);
    }
  }

  void descend(int p, std::uint16_t placed, const std::array<std::uint16_t, 16>& row,
               std::uint16_t row_min) {
    std::array<int, 16> cands{};
    int nc = 0;
    for (int v = 0; v < n; ++v) {
      if (placed & (1u << v)) continue;
      if (row[static_cast<std::size_t>(v)] != row_min) continue;
      bool twin = false;
      for (int j = 0; j < nc && !twin; ++j) {
        int u = cands[static_cast<std::size_t>(j)];
        auto mask = static_cast<std::uint16_t>(~placed & ~(1u << u) & ~(1u << v) &
                                               ((1u << n) - 1));
        twin = (adj[u] & mask) == (adj[v] & mask);
      }
      if (!twin) cands[static_cast<std::size_t>(nc++)] = v;
    }
    rows[static_cast<std::size_t>(p)] = row_min;
    for (int j = 0; j < nc; ++j) {
      int v = cands[static_cast<std::size_t>(j)];
      perm[static_cast<std::size_t>(p)] = v;
      dfs(p + 1, static_cast<std::uint16_t>(placed | (1u << v)));
    }
  }

  std::uint64_t run(const std::uint16_t* rows_in, int nn) {
    n = nn;
    adj = rows_in;
    have_best = false;
    rows[0] = 0;
    dfs(0, 0);
    std::uint64_t code = 0;
    for (int p = 1; p < n; ++p) code = (code << p) | best[static_cast<std::size_t>(p)];
    return code;
  }
};

inline std::uint64_t min_code(const std::uint16_t* adj, int n) {
  MinCodeSearch search;
  return search.run(adj, n);
}

// Same minimum by trying every permutation. Factorial cost, so a
// cross-check for small n only.
inline std::uint64_t brute_code(const std::uint16_t* adj, int n) {
  std::array<int, 16> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (int p = 1; p < n; ++p)
      for (int q = 0; q < p; ++q)
        code = (code << 1) |
               ((adj[perm[static_cast<std::size_t>(p)]] >>
                 perm[static_cast<std::size_t>(q)]) &
                1u);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return best;
}

// Rebuilds adjacency rows from a code. Consumes bits from the low end,
// which walks the blocks backwards: block n-1 sits in the low bits and a
// block's least significant bit is its adjacency toward position p-1.
inline void decode(std::uint64_t code, int n, std::uint16_t* adj) {
  std::fill(adj, adj + n, std::uint16_t{0});
  for (int i = n - 1; i >= 1; --i)
    for (int q = i - 1; q >= 0; --q) {
      if (code & 1) {
        adj[i] = static_cast<std::uint16_t>(adj[i] | (1u << q));
        adj[q] = static_cast<std::uint16_t>(adj[q] | (1u << i));
      }
      code >>= 1;
    }
}

// levels[n] = sorted canonical codes of every n-vertex graph up to
// isomorphism. Level n comes from level n-1 by attaching one new vertex
// with each of the 2^(n-1) possible neighborhoods and deduplicating on
// the canonical code; complete because any graph on n vertices arises
// that way from deleting a vertex.
inline std::vector<std::vector<std::uint64_t>> graph_census(int n_max) {
  std::vector<std::vector<std::uint64_t>> levels(static_cast<std::size_t>(n_max) + 1);
  if (n_max >= 1) levels[1] = {0};
  std::array<std::uint16_t, 16> parent{}, rows{};
  for (int n = 2; n <= n_max && n <= kMaxCode; ++n) {
    std::unordered_set<std::uint64_t> seen;
    const auto high = static_cast<std::uint16_t>(1u << (n - 1));
    for (std::uint64_t code : levels[static_cast<std::size_t>(n) - 1]) {
      decode(code, n - 1, parent.data());
      for (std::uint32_t x = 0; x < (1u << (n - 1)); ++x) {
        for (int v = 0; v < n - 1; ++v)
          rows[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(
              parent[static_cast<std::size_t>(v)] | (((x >> v) & 1u) ? high : 0u));
        rows[static_cast<std::size_t>(n) - 1] = static_cast<std::uint16_t>(x);
        seen.insert(min_code(rows.data(), n));
      }
    }
    levels[static_cast<std::size_t>(n)].assign(seen.begin(), seen.end());
    std::sort(levels[static_cast<std::size_t>(n)].begin(),
              levels[static_cast<std::size_t>(n)].end());
  }
  return levels;
}

// Greedy matching: repeatedly pair the lowest free vertex with its lowest
// free neighbor. A lower bound on the maximum matching, good enough to
// settle most instances without the exact search.
inline int greedy_matching(const std::uint16_t* adj, int n) {
  auto free_set = static_cast<std::uint32_t>((1u << n) - 1);
  int size = 0;
  while (free_set) {
    int v = std::countr_zero(free_set);
    free_set &= free_set - 1;
    std::uint32_t cand = adj[v] & free_set;
    if (cand) {
      free_set &= ~(1u << std::countr_zero(cand));
      ++size;
    }
  }
  return size;
}

// Exact maximum matching by subset DP: the lowest vertex of the mask is
// either skipped or matched to one of its neighbors. The memo is indexed
// by the mask, so this is only for n where 2^n stays small.
inline int max_matching(const std::uint16_t* adj, int n) {
  static thread_local std::vector<std::int8_t> memo;
  memo.assign(std::size_t{1} << n, -1);
  auto rec = [&](auto&& self, std::uint32_t mask) -> int {
    if (!mask) return 0;
    std::int8_t& m = memo[mask];
    if (m >= 0) return m;
    int v = std::countr_zero(mask);
    std::uint32_t rest = mask & (mask - 1);
    int best = self(self, rest);
    std::uint32_t cand = adj[v] & rest;
    while (cand) {
      int u = std::countr_zero(cand);
      cand &= cand - 1;
      best = std::max(best, 1 + self(self, rest & ~(1u << u)));
    }
    return m = static_cast<std::int8_t>(best);
  };
  return rec(rec, static_cast<std::uint32_t>((std::uint32_t{1} << n) - 1));
}

}  // namespace isofree
