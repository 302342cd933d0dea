#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "factorseq/conditions.hpp"
#include "factorseq/degree_sequence.hpp"
#include "factorseq/enumerate.hpp"
#include "factorseq/errors.hpp"
#include "factorseq/oracle.hpp"
#include "factorseq/small_graph.hpp"

namespace factorseq {

// Extremal family instances: the sequence, and the defining construction as
// a labeled graph when it fits the graph type. Vertex numbering follows the
// written expression with clique blocks first, then the remaining blocks in
// written order; extra join edges use the lowest-numbered vertices of the
// blocks they connect.
struct FamilyInstance {
  std::string name;
  DegreeSequence sequence;
  std::optional<SmallGraph> realization;
};

namespace detail {

inline void add_clique(SmallGraph& g, int lo, int size) {
  for (int u = lo; u < lo + size; ++u)
    for (int v = u + 1; v < lo + size; ++v) g.add_edge(u, v);
}

inline void join_blocks(SmallGraph& g, int lo1, int size1, int lo2, int size2) {
  for (int u = lo1; u < lo1 + size1; ++u)
    for (int v = lo2; v < lo2 + size2; ++v) g.add_edge(u, v);
}

inline void add_matching(SmallGraph& g, int lo, int size) {
  for (int u = lo; u + 1 < lo + size; u += 2) g.add_edge(u, u + 1);
}

}  // namespace detail

// Construction K_{i-beta} + (complement of K_{i+1}, union, K_{n-2i+beta-1});
// its sequence majorizes everything of deficiency > beta, and the graph
// itself has deficiency exactly beta + 2.
inline FamilyInstance family_deficiency(int n, int i, int beta) {
  require(beta >= 0, errc::range_error, "beta must be >= 0");
  require(i >= beta, errc::range_error, "family needs i >= beta");
  require(n - 2 * i + beta - 1 >= 1, errc::range_error,
          "family needs n - 2i + beta - 1 >= 1");
  require((beta % 2) == (n % 2), errc::parity_error, "beta must have the parity of n");

  const int a_sz = i - beta;          // join clique, degree n-1
  const int c_sz = n - 2 * i + beta - 1;  // inner clique, degree n-i-2
  const int i_sz = i + 1;             // independent block, degree i-beta
  std::vector<int> degs;
  degs.insert(degs.end(), static_cast<std::size_t>(i_sz), i - beta);
  degs.insert(degs.end(), static_cast<std::size_t>(c_sz), n - i - 2);
  degs.insert(degs.end(), static_cast<std::size_t>(a_sz), n - 1);

  FamilyInstance out;
  out.name = "deficiency(n=" + std::to_string(n) + ", i=" + std::to_string(i) +
             ", beta=" + std::to_string(beta) + ")";
  out.sequence = DegreeSequence(std::move(degs));
  if (n <= kMaxVertices) {
    SmallGraph g(n);
    detail::add_clique(g, 0, a_sz);
    detail::add_clique(g, a_sz, c_sz);
    detail::join_blocks(g, 0, a_sz, a_sz, c_sz + i_sz);
    out.realization = g;
  }
  return out;
}

// The majorizing sequence for one failed 2-factor clause, with a realization
// witnessing the failure. Clause (iii) additionally requires n - 2i - 2 >= 1:
// at the even-n boundary the formula collapses to the clause (ii) family and
// no longer violates (iii) itself.
inline FamilyInstance family_two_factor(int n, TwoFactorClause clause,
                                        std::optional<int> index = {}) {
  FamilyInstance out;
  std::vector<int> degs;
  SmallGraph g;
  switch (clause) {
    case TwoFactorClause::i: {
      require(!index.has_value(), errc::range_error, "clause (i) takes no index");
      require(n >= 3 && n % 2 == 1, errc::range_error, "clause (i) family needs odd n >= 3");
      const int half = (n - 1) / 2;
      degs.insert(degs.end(), static_cast<std::size_t>(half + 1), half);
      degs.insert(degs.end(), static_cast<std::size_t>(half), n - 1);
      g = SmallGraph(n);
      detail::add_clique(g, 0, half);
      detail::join_blocks(g, 0, half, half, half + 1);
      break;
    }
    case TwoFactorClause::ii: {
      require(!index.has_value(), errc::range_error, "clause (ii) takes no index");
      require(n >= 4 && n % 2 == 0, errc::range_error, "clause (ii) family needs even n >= 4");
      const int half = (n - 2) / 2;
      degs.insert(degs.end(), static_cast<std::size_t>(half), half);
      degs.insert(degs.end(), 2, n / 2);
      degs.insert(degs.end(), static_cast<std::size_t>(half), n - 1);
      g = SmallGraph(n);
      detail::add_clique(g, 0, half);       // join clique
      detail::add_clique(g, half, 2);       // K_2
      detail::join_blocks(g, 0, half, half, 2 + half);
      break;
    }
    case TwoFactorClause::iii: {
      require(index.has_value(), errc::range_error, "clause (iii) needs an index");
      const int i = *index;
      require(i >= 0 && 2 * i <= n - 2, errc::range_error,
              "clause (iii) index out of range");
      require(n - 2 * i - 2 >= 1, errc::range_error,
              "clause (iii) family needs n - 2i - 2 >= 1");
      // K_i + (complement K_{i+1} union K_{n-2i-1}), one edge across the union
      degs.insert(degs.end(), static_cast<std::size_t>(i), i);
      degs.push_back(i + 1);
      degs.insert(degs.end(), static_cast<std::size_t>(n - 2 * i - 2), n - i - 2);
      degs.push_back(n - i - 1);
      degs.insert(degs.end(), static_cast<std::size_t>(i), n - 1);
      g = SmallGraph(n);
      const int c_lo = i, c_sz = n - 2 * i - 1;
      const int ind_lo = c_lo + c_sz, ind_sz = i + 1;
      detail::add_clique(g, 0, i);
      detail::add_clique(g, c_lo, c_sz);
      detail::join_blocks(g, 0, i, c_lo, c_sz + ind_sz);
      g.add_edge(c_lo, ind_lo);
      break;
    }
    case TwoFactorClause::iv: {
      require(index.has_value(), errc::range_error, "clause (iv) needs an index");
      const int i = *index;
      require(i >= 1 && 2 * i <= n - 5, errc::range_error,
              "clause (iv) index out of range");
      // K_i + (complement K_{i+2} union K_{n-2i-2}), three independent
      // edges across the union
      degs.insert(degs.end(), static_cast<std::size_t>(i - 1), i);
      degs.insert(degs.end(), 3, i + 1);
      degs.insert(degs.end(), static_cast<std::size_t>(n - 2 * i - 5), n - i - 3);
      degs.insert(degs.end(), 3, n - i - 2);
      degs.insert(degs.end(), static_cast<std::size_t>(i), n - 1);
      g = SmallGraph(n);
      const int c_lo = i, c_sz = n - 2 * i - 2;
      const int ind_lo = c_lo + c_sz, ind_sz = i + 2;
      detail::add_clique(g, 0, i);
      detail::add_clique(g, c_lo, c_sz);
      detail::join_blocks(g, 0, i, c_lo, c_sz + ind_sz);
      for (int e = 0; e < 3; ++e) g.add_edge(c_lo + e, ind_lo + e);
      break;
    }
  }
  std::string label = "two-factor(";
  label += clause_name(clause);
  label += ") n=" + std::to_string(n);
  if (index) label += " i=" + std::to_string(*index);
  out.name = label;
  out.sequence = DegreeSequence(std::move(degs));
  if (n <= kMaxVertices) out.realization = g;
  return out;
}

struct PiFamily {
  FamilyInstance pi;        // satisfies the k-factor condition
  FamilyInstance pi_prime;  // majorized by pi, no realization has a k-factor
  int k = 0;
};

// The tightness pair around the k-factor condition at k = (n+2)/4:
// pi_n = (n/2)^{n/2+1} (n-1)^{n/2-1} and pi'_n with degree sum two less.
inline PiFamily family_pi_n(int n) {
  require(n >= 6 && n % 4 == 2, errc::range_error,
          "pi_n family needs n = 2 (mod 4), n >= 6");
  const int half = n / 2;
  PiFamily out;
  out.k = (n + 2) / 4;

  std::vector<int> degs;
  degs.insert(degs.end(), static_cast<std::size_t>(half + 1), half);
  degs.insert(degs.end(), static_cast<std::size_t>(half - 1), n - 1);
  out.pi.name = "pi-n(n=" + std::to_string(n) + ")";
  out.pi.sequence = DegreeSequence(std::move(degs));

  degs.clear();
  degs.insert(degs.end(), 2, half - 1);
  degs.insert(degs.end(), static_cast<std::size_t>(half - 1), half);
  degs.insert(degs.end(), static_cast<std::size_t>(half - 1), n - 1);
  out.pi_prime.name = "pi-n-prime(n=" + std::to_string(n) + ")";
  out.pi_prime.sequence = DegreeSequence(std::move(degs));

  if (n <= kMaxVertices) {
    // K_{n/2-1} joined to a perfect matching on the other n/2+1 vertices
    SmallGraph g(n);
    detail::add_clique(g, 0, half - 1);
    detail::join_blocks(g, 0, half - 1, half - 1, half + 1);
    detail::add_matching(g, half - 1, half + 1);
    out.pi.realization = g;

    // K_{n/2-1} joined to (two isolated vertices union a matching)
    SmallGraph h(n);
    detail::add_clique(h, 0, half - 1);
    detail::join_blocks(h, 0, half - 1, half - 1, half + 1);
    detail::add_matching(h, half + 1, half - 1);
    out.pi_prime.realization = h;
  }
  return out;
}

struct PiScanEntry {
  int n = 0;
  int k = 0;
  bool holds = false;
  std::optional<Witness> witness;
};

struct PiScanReport {
  int n_min = 0, n_max = 0;
  std::uint64_t checked = 0;
  std::vector<PiScanEntry> failures;
};

namespace detail {

// Deterministic parallel map over [0, count): results land by index, the
// emit callback runs in index order on the calling thread.
template <typename Work, typename Emit>
void indexed_parallel(std::uint64_t count, int jobs, Work&& work, Emit&& emit) {
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || count <= 1) {
    for (std::uint64_t idx = 0; idx < count; ++idx) emit(idx, work(idx));
    return;
  }
  using Result = decltype(work(std::uint64_t{0}));
  const std::uint64_t block = 256;
  for (std::uint64_t base = 0; base < count; base += block) {
    const std::uint64_t hi = std::min(count, base + block);
    std::vector<Result> results(static_cast<std::size_t>(hi - base));
    std::atomic<std::uint64_t> cursor{base};
    auto worker = [&] {
      while (true) {
        std::uint64_t idx = cursor.fetch_add(1);
        if (idx >= hi) break;
        results[static_cast<std::size_t>(idx - base)] = work(idx);
      }
    };
    std::vector<std::thread> pool;
    int spawn = static_cast<int>(std::min<std::uint64_t>(jobs, hi - base));
    pool.reserve(static_cast<std::size_t>(spawn));
    for (int w = 1; w < spawn; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (std::uint64_t idx = base; idx < hi; ++idx)
      emit(idx, std::move(results[static_cast<std::size_t>(idx - base)]));
  }
}

}  // namespace detail

// Checks the k-factor condition on pi_n for every qualifying n up to n_max
// (n = 2 mod 4, starting at n_min). The per-n entries stream through
// `progress` in ascending order regardless of the worker count.
inline PiScanReport scan_pi_n(int n_max, int n_min = 6,
                              const std::function<void(const PiScanEntry&)>& progress = {},
                              int jobs = 1) {
  PiScanReport report;
  report.n_min = std::max(n_min, 6);
  report.n_max = n_max;
  std::vector<int> ns;
  for (int n = report.n_min; n <= n_max; ++n)
    if (n % 4 == 2) ns.push_back(n);
  detail::indexed_parallel(
      ns.size(), jobs,
      [&](std::uint64_t idx) {
        const int n = ns[static_cast<std::size_t>(idx)];
        const int half = n / 2;
        std::vector<int> degs;
        degs.insert(degs.end(), static_cast<std::size_t>(half + 1), half);
        degs.insert(degs.end(), static_cast<std::size_t>(half - 1), n - 1);
        DegreeSequence pi(std::move(degs));
        Verdict v = forcibly_k_factor(pi, (n + 2) / 4);
        PiScanEntry entry;
        entry.n = n;
        entry.k = (n + 2) / 4;
        entry.holds = v.holds();
        entry.witness = v.witness;
        return entry;
      },
      [&](std::uint64_t, PiScanEntry entry) {
        ++report.checked;
        if (!entry.holds) report.failures.push_back(entry);
        if (progress) progress(entry);
      });
  return report;
}

struct ToughFactorCandidate {
  DegreeSequence pi;
  Witness k_factor_witness;
  // realization-level confirmation: true means every realization does have
  // a k-factor, so the gap is purely between the two conditions
  std::optional<bool> all_realizations_have_factor;
};

struct ToughFactorReport {
  int n_max = 0;
  int k = 0;
  std::uint64_t sequences_checked = 0;
  std::vector<ToughFactorCandidate> candidates;
};

// Sweep for predicate-level gaps between the toughness condition at t = k
// and the k-factor condition: sequences where the former holds and the
// latter fails. Graph-level truth is cross-checked by the realization
// oracle when n is within cap.
inline ToughFactorReport scan_tough_implies_factor(
    int n_max, int k, bool oracle_check = true, int jobs = 1,
    const std::function<void(const DegreeSequence&, bool)>& progress = {}) {
  require(k >= 2, errc::bad_k, "sweep needs k >= 2");
  require(n_max <= kEnumerationCap, errc::too_large,
          "sweep limited to n_max <= " + std::to_string(kEnumerationCap));
  ToughFactorReport report;
  report.n_max = n_max;
  report.k = k;
  const Rational t(k, 1);
  for (int n = k + 2; n <= n_max; ++n) {
    if ((static_cast<long long>(k) * n) % 2 != 0) continue;
    std::vector<DegreeSequence> seqs =
        all_graphical_sequences(n, std::max(n, kSequenceEnumCap));
    detail::indexed_parallel(
        seqs.size(), jobs,
        [&](std::uint64_t idx) -> std::optional<ToughFactorCandidate> {
          const DegreeSequence& pi = seqs[static_cast<std::size_t>(idx)];
          if (!forcibly_t_tough(pi, t).holds()) return std::nullopt;
          Verdict kf = forcibly_k_factor(pi, k);
          if (kf.holds()) return std::nullopt;
          ToughFactorCandidate cand;
          cand.pi = pi;
          cand.k_factor_witness = *kf.witness;
          if (oracle_check && pi.n() <= kEnumerationCap)
            cand.all_realizations_have_factor =
                forcibly_oracle(pi, KFactorProperty{k}).value;
          return cand;
        },
        [&](std::uint64_t idx, std::optional<ToughFactorCandidate> cand) {
          ++report.sequences_checked;
          if (progress) progress(seqs[static_cast<std::size_t>(idx)], cand.has_value());
          if (cand) report.candidates.push_back(std::move(*cand));
        });
  }
  return report;
}

}  // namespace factorseq
