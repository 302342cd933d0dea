#pragma once

#include <array>
#include <bit>
#include <optional>
#include <vector>

#include "factorseq/errors.hpp"
#include "factorseq/rational.hpp"
#include "factorseq/small_graph.hpp"

namespace factorseq {

// Exhaustive small-graph oracles. These are the ground truth the sequence
// conditions are tested against, so they favor obviously-correct search
// over cleverness.

struct TutteCertificate {
  VertexSet A = 0;
  VertexSet B = 0;
  int k = 0;
  long long theta = 0;
  int odd_count = 0;

  friend bool operator==(const TutteCertificate&, const TutteCertificate&) = default;
};

namespace detail {

inline void check_disjoint(const SmallGraph& g, VertexSet A, VertexSet B) {
  require((A & B) == 0, errc::overlapping_sets, "A and B must be disjoint");
  require((A | B) <= g.full_set() && ((A | B) & ~g.full_set()) == 0, errc::range_error,
          "vertex set outside graph");
}

}  // namespace detail

// Components H of the subgraph induced on V - A - B with k|H| + e(H,B) odd.
inline int odd_components(const SmallGraph& g, VertexSet A, VertexSet B, int k) {
  require(k >= 1, errc::bad_k, "k must be >= 1");
  detail::check_disjoint(g, A, B);
  VertexSet rest = static_cast<VertexSet>(g.full_set() & ~A & ~B);
  int count = 0;
  while (rest) {
    int v = std::countr_zero(rest);
    VertexSet comp = component_containing(g, rest, v);
    rest &= static_cast<VertexSet>(~comp);
    int size = std::popcount(comp);
    int edges_to_b = 0;
    VertexSet c = comp;
    while (c) {
      int u = std::countr_zero(c);
      c &= static_cast<VertexSet>(c - 1);
      edges_to_b += std::popcount(static_cast<VertexSet>(g.neighbors(u) & B));
    }
    if ((k * size + edges_to_b) % 2 != 0) ++count;
  }
  return count;
}

// Theta_k(A,B) = k|A| + sum over B of deg in G-A, minus k|B| and the odd
// component count.
inline long long theta(const SmallGraph& g, VertexSet A, VertexSet B, int k) {
  require(k >= 1, errc::bad_k, "k must be >= 1");
  detail::check_disjoint(g, A, B);
  long long value = static_cast<long long>(k) * std::popcount(A) -
                    static_cast<long long>(k) * std::popcount(B);
  VertexSet b = B;
  while (b) {
    int u = std::countr_zero(b);
    b &= static_cast<VertexSet>(b - 1);
    value += std::popcount(static_cast<VertexSet>(g.neighbors(u) & ~A));
  }
  value -= odd_components(g, A, B, k);
  return value;
}

// Minimum theta over all disjoint (A,B), ties broken by lexicographically
// least (A,B) mask pair. 3^n pairs, so strictly a small-n tool.
inline TutteCertificate tutte_minimum(const SmallGraph& g, int k) {
  require(k >= 1, errc::bad_k, "k must be >= 1");
  const int n = g.n();
  TutteCertificate best;
  bool have = false;
  std::array<int, kMaxVertices> deg_ga{};
  const VertexSet all = g.full_set();
  for (VertexSet A = 0;; ++A) {
    for (int v = 0; v < n; ++v)
      deg_ga[static_cast<std::size_t>(v)] =
          std::popcount(static_cast<VertexSet>(g.neighbors(v) & ~A));
    const VertexSet rest = static_cast<VertexSet>(all & ~A);
    VertexSet B = 0;
    while (true) {
      long long th = static_cast<long long>(k) * std::popcount(A) -
                     static_cast<long long>(k) * std::popcount(B);
      VertexSet bb = B;
      while (bb) {
        int u = std::countr_zero(bb);
        bb &= static_cast<VertexSet>(bb - 1);
        th += deg_ga[static_cast<std::size_t>(u)];
      }
      int odd = odd_components(g, A, B, k);
      th -= odd;
      if (!have || th < best.theta) {
        best = TutteCertificate{A, B, k, th, odd};
        have = true;
      }
      if (B == rest) break;
      B = static_cast<VertexSet>((B - rest) & rest);  // next subset, ascending
    }
    if (A == all) break;
  }
  return best;
}

// A negative-theta certificate if one exists; absent means every pair has
// theta >= 0 (equivalently, per the consistency tests, a k-factor exists
// when k*n is even).
inline std::optional<TutteCertificate> find_tutte_pair(const SmallGraph& g, int k) {
  TutteCertificate best = tutte_minimum(g, k);
  if (best.theta < 0) return best;
  return std::nullopt;
}

// Spanning subgraph with all degrees exactly k, by edge backtracking with
// residual-degree pruning. k = 0 is the empty factor.
inline bool has_k_factor(const SmallGraph& g, int k) {
  require(k >= 0, errc::bad_k, "k must be >= 0");
  const int n = g.n();
  if (k == 0) return true;
  if (static_cast<long long>(k) * n % 2 != 0) return false;
  if (k > n - 1) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < k) return false;

  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.has_edge(u, v)) edges.emplace_back(u, v);

  std::array<int, kMaxVertices> need{}, avail{};
  for (int v = 0; v < n; ++v) {
    need[static_cast<std::size_t>(v)] = k;
    avail[static_cast<std::size_t>(v)] = g.degree(v);
  }

  auto rec = [&](auto&& self, std::size_t idx) -> bool {
    if (idx == edges.size()) {
      for (int v = 0; v < n; ++v)
        if (need[static_cast<std::size_t>(v)] != 0) return false;
      return true;
    }
    auto [u, v] = edges[idx];
    auto& nu = need[static_cast<std::size_t>(u)];
    auto& nv = need[static_cast<std::size_t>(v)];
    auto& au = avail[static_cast<std::size_t>(u)];
    auto& av = avail[static_cast<std::size_t>(v)];
    --au;
    --av;
    // take the edge
    if (nu > 0 && nv > 0) {
      --nu;
      --nv;
      if (self(self, idx + 1)) return true;
      ++nu;
      ++nv;
    }
    // leave it out; both endpoints must still be satisfiable
    if (nu <= au && nv <= av) {
      if (self(self, idx + 1)) return true;
    }
    ++au;
    ++av;
    return false;
  };
  return rec(rec, 0);
}

namespace detail {

// Exhaustive search for an augmenting path from free vertex v: either an
// edge to a free vertex, or an edge into a matched pair continued from the
// partner. Backtracking over `on_path` makes the search complete (Berge).
inline bool augment_from(const SmallGraph& g, std::array<int, kMaxVertices>& match,
                         int v, VertexSet on_path) {
  on_path |= vbit(v);
  VertexSet cand = static_cast<VertexSet>(g.neighbors(v) & ~on_path);
  VertexSet c = cand;
  while (c) {
    int u = std::countr_zero(c);
    c &= static_cast<VertexSet>(c - 1);
    if (match[u] < 0) {
      match[u] = v;
      match[v] = u;
      return true;
    }
  }
  c = cand;
  while (c) {
    int u = std::countr_zero(c);
    c &= static_cast<VertexSet>(c - 1);
    int w = match[u];
    if (w < 0 || (on_path & vbit(u)) || (on_path & vbit(w))) continue;
    if (augment_from(g, match, w, static_cast<VertexSet>(on_path | vbit(u)))) {
      match[u] = v;
      match[v] = u;
      return true;
    }
  }
  return false;
}

}  // namespace detail

inline int max_matching_size(const SmallGraph& g) {
  const int n = g.n();
  std::array<int, kMaxVertices> match;
  match.fill(-1);
  int size = 0;
  // greedy seed, then one exhaustive augmentation pass per free vertex
  for (int v = 0; v < n; ++v) {
    if (match[v] >= 0) continue;
    VertexSet c = g.neighbors(v);
    while (c) {
      int u = std::countr_zero(c);
      c &= static_cast<VertexSet>(c - 1);
      if (match[u] < 0) {
        match[u] = v;
        match[v] = u;
        ++size;
        break;
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (match[v] < 0 && detail::augment_from(g, match, v, 0)) ++size;
  return size;
}

// Vertices left uncovered by a maximum matching.
inline int deficiency(const SmallGraph& g) { return g.n() - 2 * max_matching_size(g); }

inline bool is_hamiltonian(const SmallGraph& g) {
  const int n = g.n();
  require(n >= 3, errc::too_few_vertices, "hamiltonicity needs n >= 3");
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < 2) return false;
  if (!is_connected(g)) return false;
  const VertexSet all = g.full_set();
  auto rec = [&](auto&& self, int v, VertexSet visited) -> bool {
    if (visited == all) return g.has_edge(v, 0);
    VertexSet c = static_cast<VertexSet>(g.neighbors(v) & ~visited);
    while (c) {
      int u = std::countr_zero(c);
      c &= static_cast<VertexSet>(c - 1);
      if (self(self, u, static_cast<VertexSet>(visited | vbit(u)))) return true;
    }
    return false;
  };
  return rec(rec, 0, vbit(0));
}

// t * omega(G - X) <= |X| for every cut set X that actually disconnects.
// Exact rational comparison; complete graphs pass vacuously.
inline bool toughness_at_least(const SmallGraph& g, const Rational& t) {
  const int n = g.n();
  const long long p = t.numerator(), q = t.denominator();
  const VertexSet all = g.full_set();
  // iterate over the kept set C = V - X; only |C| >= 2 can split
  for (VertexSet C = 0;; ++C) {
    if (std::popcount(C) >= 2) {
      int omega = component_count(g, C);
      if (omega > 1) {
        int x_size = n - std::popcount(C);
        if (p * omega > q * x_size) return false;
      }
    }
    if (C == all) break;
  }
  return true;
}

// Exact toughness value as a rational: min |X| / omega(G-X) over
// disconnecting X. Complete graphs have no disconnecting set; by the usual
// convention K_n reports (n-1)/2 here so callers can still compare.
inline Rational toughness(const SmallGraph& g) {
  const int n = g.n();
  require(n >= 1, errc::too_few_vertices, "toughness needs n >= 1");
  const VertexSet all = g.full_set();
  std::optional<Rational> best;
  for (VertexSet C = 0;; ++C) {
    if (std::popcount(C) >= 2) {
      int omega = component_count(g, C);
      if (omega > 1) {
        Rational ratio(n - std::popcount(C), omega);
        if (!best || ratio < *best) best = ratio;
      }
    }
    if (C == all) break;
  }
  if (best) return *best;
  return Rational(n - 1, 2);
}

}  // namespace factorseq
