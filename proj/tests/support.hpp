// Shared brute-force references for the test suite. These are deliberately
// independent reimplementations: plain loops, no pruning, no shared helpers
// with the library code they validate.
#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "factorseq/factorseq.hpp"

namespace testsupport {

inline std::vector<std::pair<int, int>> edge_slots(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  return slots;
}

// Visits every labeled graph on n vertices, 2^(n choose 2) of them.
template <typename F>
void for_all_graphs(int n, F&& visit) {
  const auto slots = edge_slots(n);
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    factorseq::SmallGraph g(n);
    for (std::size_t e = 0; e < slots.size(); ++e)
      if (mask >> e & 1) g.add_edge(slots[e].first, slots[e].second);
    visit(g);
  }
}

// Max matching by subset DP: f(S) considers the lowest vertex of S either
// unmatched or matched to each neighbor in S.
inline int dp_max_matching(const factorseq::SmallGraph& g) {
  const int n = g.n();
  std::vector<int> memo(std::size_t{1} << n, -1);
  memo[0] = 0;
  auto rec = [&](auto&& self, factorseq::VertexSet s) -> int {
    int& m = memo[s];
    if (m >= 0) return m;
    int v = 0;
    while (!(s & factorseq::vbit(v))) ++v;
    int best = self(self, static_cast<factorseq::VertexSet>(s & ~factorseq::vbit(v)));
    for (int u = v + 1; u < n; ++u)
      if ((s & factorseq::vbit(u)) && g.has_edge(u, v))
        best = std::max(
            best, 1 + self(self, static_cast<factorseq::VertexSet>(
                                     s & ~factorseq::vbit(v) & ~factorseq::vbit(u))));
    return m = best;
  };
  return rec(rec, g.full_set());
}

// Component split of G - A - B by flood fill over an explicit adjacency copy.
inline std::vector<factorseq::VertexSet> ref_components(const factorseq::SmallGraph& g,
                                                        factorseq::VertexSet removed) {
  std::vector<factorseq::VertexSet> comps;
  factorseq::VertexSet left =
      static_cast<factorseq::VertexSet>(g.full_set() & ~removed);
  std::vector<bool> seen(static_cast<std::size_t>(g.n()), false);
  for (int v = 0; v < g.n(); ++v) {
    if (!(left & factorseq::vbit(v)) || seen[static_cast<std::size_t>(v)]) continue;
    factorseq::VertexSet comp = 0;
    std::vector<int> stack{v};
    seen[static_cast<std::size_t>(v)] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp = static_cast<factorseq::VertexSet>(comp | factorseq::vbit(u));
      for (int w = 0; w < g.n(); ++w)
        if ((left & factorseq::vbit(w)) && !seen[static_cast<std::size_t>(w)] &&
            g.has_edge(u, w)) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
    }
    comps.push_back(comp);
  }
  return comps;
}

inline long long ref_theta(const factorseq::SmallGraph& g, factorseq::VertexSet A,
                           factorseq::VertexSet B, int k) {
  long long theta = 0;
  int size_a = 0, size_b = 0;
  for (int v = 0; v < g.n(); ++v) {
    if (A & factorseq::vbit(v)) ++size_a;
    if (B & factorseq::vbit(v)) {
      ++size_b;
      for (int u = 0; u < g.n(); ++u)
        if (!(A & factorseq::vbit(u)) && g.has_edge(u, v)) ++theta;
    }
  }
  theta += static_cast<long long>(k) * size_a - static_cast<long long>(k) * size_b;
  for (factorseq::VertexSet comp :
       ref_components(g, static_cast<factorseq::VertexSet>(A | B))) {
    long long sum = 0;
    int size_h = 0;
    for (int v = 0; v < g.n(); ++v)
      if (comp & factorseq::vbit(v)) {
        ++size_h;
        for (int u = 0; u < g.n(); ++u)
          if ((B & factorseq::vbit(u)) && g.has_edge(u, v)) ++sum;
      }
    if ((static_cast<long long>(k) * size_h + sum) % 2 != 0) theta -= 1;
  }
  return theta;
}

struct RefTutteBest {
  long long theta = 0;
  factorseq::VertexSet A = 0;
  factorseq::VertexSet B = 0;
};

// Plain double scan in (A, B) numeric order; the strict < keeps the first
// attaining pair, which pins the tie-break the library promises.
inline RefTutteBest ref_tutte_best(const factorseq::SmallGraph& g, int k) {
  const factorseq::VertexSet all = g.full_set();
  RefTutteBest best;
  bool first = true;
  for (factorseq::VertexSet A = 0;; ++A) {
    if ((A & all) == A) {
      for (factorseq::VertexSet B = 0;; ++B) {
        if ((B & all) == B && !(A & B)) {
          long long t = ref_theta(g, A, B, k);
          if (first || t < best.theta) best = {t, A, B}, first = false;
        }
        if (B == all) break;
      }
    }
    if (A == all) break;
  }
  return best;
}

inline long long ref_tutte_min(const factorseq::SmallGraph& g, int k) {
  return ref_tutte_best(g, k).theta;
}

inline factorseq::SmallGraph random_graph(std::mt19937& rng, int n, double p = 0.5) {
  factorseq::SmallGraph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// Degrees of a random graph: graphical by construction.
inline factorseq::DegreeSequence random_graphical(std::mt19937& rng, int n,
                                                  double p = 0.5) {
  return random_graph(rng, n, p).degree_sequence();
}

}  // namespace testsupport
