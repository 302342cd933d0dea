#pragma once

#include <algorithm>
#include <vector>

#include "factorseq/degree_sequence.hpp"
#include "factorseq/errors.hpp"
#include "factorseq/rational.hpp"
#include "factorseq/verdict.hpp"

namespace factorseq {

namespace detail {

inline void require_graphical(const DegreeSequence& pi) {
  require(is_graphical(pi), errc::not_graphical,
          "sequence " + render(pi) + " is not graphical");
}

inline std::vector<long long> prefix_sums(const DegreeSequence& pi) {
  std::vector<long long> p(static_cast<std::size_t>(pi.n()) + 1, 0);
  for (int i = 1; i <= pi.n(); ++i)
    p[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i) - 1] + pi.d(i);
  return p;
}

}  // namespace detail

// Hamiltonicity: whenever d(i) <= i for some i below n/2, the top end must
// compensate with d(n-i) >= n-i.
inline Verdict chvatal_hamiltonian(const DegreeSequence& pi) {
  require(pi.n() >= 3, errc::too_few_vertices,
          "hamiltonicity needs n >= 3, got n=" + std::to_string(pi.n()));
  detail::require_graphical(pi);
  const int n = pi.n();
  for (int i = 1; 2 * i < n; ++i)
    if (pi.d(i) <= i && pi.d(n - i) < n - i)
      return Verdict::fail_with(ChvatalWitness{i});
  return Verdict::pass();
}

// Deficiency at most beta (beta and n must agree mod 2). beta = 0 is the
// 1-factor condition.
inline Verdict deficiency_at_most(const DegreeSequence& pi, int beta) {
  const int n = pi.n();
  require(beta >= 0 && beta <= n, errc::range_error,
          "beta must lie in [0, n], got " + std::to_string(beta));
  require((beta % 2) == (n % 2), errc::parity_error,
          "beta must have the parity of n");
  detail::require_graphical(pi);
  for (int i = beta; i <= n - 1; ++i) {
    if (pi.d(i + 1) <= i - beta && 2 * (i - beta) < n - beta - 1 &&
        pi.d(n + beta - i) < n - i - 1)
      return Verdict::fail_with(DeficiencyWitness{i});
  }
  return Verdict::pass();
}

inline Verdict forcibly_one_factor(const DegreeSequence& pi) {
  require(pi.n() >= 2, errc::too_few_vertices,
          "1-factor needs n >= 2, got n=" + std::to_string(pi.n()));
  require(pi.n() % 2 == 0, errc::odd_order, "1-factor needs even n");
  return deficiency_at_most(pi, 0);
}

// Evaluates one 2-factor clause in isolation. For the indexed clauses (iii)
// and (iv), `at` restricts the check to that single index; otherwise their
// whole range is scanned and the least violating index is reported. The
// fixed clauses (i) and (ii) ignore `at`. Outer optional empty means the
// clause is satisfied; the inner optional carries the index when the
// clause has one.
inline std::optional<std::optional<int>> two_factor_clause_violation(
    const DegreeSequence& pi, TwoFactorClause clause, std::optional<int> at = {}) {
  const int n = pi.n();
  auto d = [&](int i) { return pi.d(i); };
  switch (clause) {
    case TwoFactorClause::i: {
      if (n % 2 == 1 && !(d((n + 1) / 2) >= (n + 1) / 2))
        return std::optional<int>{};
      return std::nullopt;
    }
    case TwoFactorClause::ii: {
      if (n % 2 == 0 && !(d((n - 2) / 2) >= n / 2 || d((n + 2) / 2) >= (n + 2) / 2))
        return std::optional<int>{};
      return std::nullopt;
    }
    case TwoFactorClause::iii: {
      int lo = at.value_or(0), hi = at.value_or((n - 2) / 2);
      lo = std::max(lo, 0);
      hi = std::min(hi, (n - 2) / 2);
      for (int i = lo; i <= hi; ++i)
        if (d(i) <= i && d(i + 1) <= i + 1 &&
            !(d(n - i - 1) >= n - i - 1 || d(n - i) >= n - i))
          return std::optional<int>{i};
      return std::nullopt;
    }
    case TwoFactorClause::iv: {
      int lo = at.value_or(1), hi = at.value_or((n - 5) / 2);
      lo = std::max(lo, 1);
      hi = std::min(hi, (n - 5) / 2);
      for (int i = lo; i <= hi; ++i)
        if (d(i - 1) <= i && d(i + 2) <= i + 1 &&
            !(d(n - i - 3) >= n - i - 2 || d(n - i) >= n - i - 1))
          return std::optional<int>{i};
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// All four 2-factor clauses, reported in textual order (i), (ii), (iii) by
// ascending index, (iv) by ascending index.
inline Verdict forcibly_two_factor(const DegreeSequence& pi) {
  require(pi.n() >= 3, errc::too_few_vertices,
          "2-factor condition needs n >= 3, got n=" + std::to_string(pi.n()));
  detail::require_graphical(pi);
  for (auto clause : {TwoFactorClause::i, TwoFactorClause::ii, TwoFactorClause::iii,
                      TwoFactorClause::iv}) {
    if (auto v = two_factor_clause_violation(pi, clause))
      return Verdict::fail_with(TwoFactorWitness{clause, *v});
  }
  return Verdict::pass();
}

enum class KFactorScan { pruned, naive };

namespace detail {

// r and s for a triple; q >= 1 collapses max(0, q-1) to q-1.
inline std::pair<int, int> k_factor_rs(int n, int k, int a, int b, int q) {
  int r = a + k + q - 2;
  int s = n - std::max(0, b - k + 1) - std::max(0, q - 1) - 1;
  return {r, s};
}

// The starred clause evaluated at one triple: true when the premise holds
// but the top degree misses max(r,s)+1.
inline bool k_factor_star_violated(const DegreeSequence& pi, int k, int a, int b, int q) {
  const int n = pi.n();
  auto [r, s] = k_factor_rs(n, k, a, b, q);
  bool premise = r <= s ? pi.d(b) <= r : pi.d(n - a - b) <= s;
  return premise && pi.d(n - a) < std::max(r, s) + 1;
}

// Is (a,b,q) inside the scanned triple set for pi, k (range + gate)?
inline bool k_factor_triple_admissible(const DegreeSequence& pi, int k, int a, int b,
                                       int q, const std::vector<long long>& P) {
  const int n = pi.n();
  if (!(0 <= a && 2 * a < n)) return false;
  if (!(0 <= b && b <= n - a)) return false;
  long long qlo = std::max(0LL, static_cast<long long>(a) * (k - b) + 2);
  if (!(qlo <= q && q <= n - a - b)) return false;
  long long gate = static_cast<long long>(k) * b + static_cast<long long>(a) * b -
                   static_cast<long long>(k) * a + q - 2;
  return P[static_cast<std::size_t>(b)] <= gate;
}

inline Verdict k_factor_naive(const DegreeSequence& pi, int k) {
  const int n = pi.n();
  const auto P = prefix_sums(pi);
  for (int a = 0; 2 * a < n; ++a) {
    for (int b = n - a; b >= 0; --b) {
      long long qlo = std::max(0LL, static_cast<long long>(a) * (k - b) + 2);
      for (long long q = qlo; q <= n - a - b; ++q) {
        if (!k_factor_triple_admissible(pi, k, a, b, static_cast<int>(q), P)) continue;
        if (k_factor_star_violated(pi, k, a, b, static_cast<int>(q))) {
          auto [r, s] = k_factor_rs(n, k, a, b, static_cast<int>(q));
          return Verdict::fail_with(KFactorWitness{a, b, static_cast<int>(q), r, s});
        }
      }
    }
  }
  return Verdict::pass();
}

// Same scan, but the q-loop is replaced by interval arithmetic: for fixed
// (a,b), r grows with q and s shrinks, so each regime of (*) is a contiguous
// q-interval and the first violating q is the lower end of the first
// nonempty one. Keeps the witness identical to the naive loop.
inline Verdict k_factor_pruned(const DegreeSequence& pi, int k) {
  const int n = pi.n();
  const auto P = prefix_sums(pi);
  for (int a = 0; 2 * a < n; ++a) {
    const int Dna = pi.d(n - a);
    for (int b = n - a; b >= 0; --b) {
      const long long q_hi = n - a - b;
      long long q_lo = std::max(0LL, static_cast<long long>(a) * (k - b) + 2);
      if (q_lo > q_hi) continue;
      // gate needs q >= P[b] - (kb + ab - ka - 2)
      long long gate_min = P[static_cast<std::size_t>(b)] -
                           (static_cast<long long>(k) * b +
                            static_cast<long long>(a) * b -
                            static_cast<long long>(k) * a - 2);
      long long q_start = std::max(q_lo, gate_min);
      if (q_start > q_hi) continue;

      const int M = std::max(0, b - k + 1);
      const int Db = pi.d(b);
      const int Dc = pi.d(n - a - b);
      long long found = -1;

      if (q_start <= 0) {
        // q = 0 stands alone: s = n - M - 1 rather than n - M - q
        int r0 = a + k - 2, s0 = n - M - 1;
        bool premise = r0 <= s0 ? Db <= r0 : Dc <= s0;
        if (premise && Dna < std::max(r0, s0) + 1) found = 0;
      }
      if (found < 0) {
        long long qa = std::max(q_start, 1LL);
        if (qa <= q_hi) {
          // q >= 1: r = a+k+q-2 rises, s = n-M-q falls; r <= s iff q <= q_x
          long long q_x = (static_cast<long long>(n) - M - a - k + 2) / 2;
          // regime r <= s: premise Db <= r, conclusion misses iff Dna <= s
          long long lo1 = std::max(qa, static_cast<long long>(Db) - (a + k - 2));
          long long hi1 = std::min({q_x, q_hi, static_cast<long long>(n) - M - Dna});
          if (lo1 <= hi1) {
            found = lo1;
          } else {
            // regime r > s: premise Dc <= s, conclusion misses iff Dna <= r
            long long lo2 = std::max({qa, q_x + 1,
                                      static_cast<long long>(Dna) - (a + k - 2)});
            long long hi2 = std::min(q_hi, static_cast<long long>(n) - M - Dc);
            if (lo2 <= hi2) found = lo2;
          }
        }
      }
      if (found >= 0) {
        int q = static_cast<int>(found);
        auto [r, s] = k_factor_rs(n, k, a, b, q);
        return Verdict::fail_with(KFactorWitness{a, b, q, r, s});
      }
    }
  }
  return Verdict::pass();
}

}  // namespace detail

// k-factor condition: the degree floor d(1) >= k plus the starred clause
// over all admissible (a,b,q). Scan order is a ascending, b descending,
// q ascending; the witness is the first violation in that order.
inline Verdict forcibly_k_factor(const DegreeSequence& pi, int k,
                                 KFactorScan scan = KFactorScan::pruned) {
  require(k >= 2, errc::bad_k, "k-factor condition needs k >= 2, got k=" + std::to_string(k));
  require((static_cast<long long>(k) * pi.n()) % 2 == 0, errc::parity_error,
          "k*n must be even");
  detail::require_graphical(pi);
  if (pi.n() == 0) return Verdict::pass();
  if (pi.d(1) < k) return Verdict::fail_with(KFactorDegreeWitness{pi.d(1)});
  return scan == KFactorScan::naive ? detail::k_factor_naive(pi, k)
                                    : detail::k_factor_pruned(pi, k);
}

// Toughness condition for rational t >= 1, exact arithmetic throughout.
inline Verdict forcibly_t_tough(const DegreeSequence& pi, const Rational& t) {
  require(t >= 1, errc::bad_t, "toughness condition needs t >= 1, got t=" + to_string(t));
  const long long n = pi.n();
  const long long p = t.numerator(), q = t.denominator();
  const long long c = ceil_of(t);
  // n > (t+1)*ceil(t)/t, kept in integers; c > n settles it without the
  // products (the bound exceeds ceil(t)).
  require(c <= n && n * p > c * (p + q), errc::too_few_vertices,
          "toughness condition needs n > (t+1)*ceil(t)/t");
  detail::require_graphical(pi);
  // integer i with t <= i < t*n/(t+1)
  for (long long i = c; i * (p + q) < p * n; ++i) {
    long long fl = (i * q) / p;  // floor(i/t)
    if (pi.d(static_cast<int>(fl)) <= i &&
        pi.d(static_cast<int>(n - i)) < n - fl)
      return Verdict::fail_with(ToughnessWitness{static_cast<int>(i)});
  }
  return Verdict::pass();
}

// Potential (rather than forcible) k-factor: pi graphical and the termwise
// k-reduced sequence graphical. This one is an exact characterization.
inline Verdict potentially_k_factor(const DegreeSequence& pi, int k) {
  require(k >= 0, errc::bad_k, "k must be nonnegative");
  if (!is_graphical(pi)) return Verdict::fail_with(KunduWitness{1});
  std::vector<int> reduced = pi.values();
  for (int& v : reduced) v -= k;  // negatives make the next check fail
  if (!is_graphical_sorted(reduced)) return Verdict::fail_with(KunduWitness{2});
  return Verdict::pass();
}

// Witness re-evaluation: confirms that a reported witness certifies the
// violation on its own, without rerunning the scan that produced it.

inline bool witness_certifies(const DegreeSequence& pi, const ChvatalWitness& w) {
  const int n = pi.n();
  return w.i >= 1 && 2 * w.i < n && pi.d(w.i) <= w.i && pi.d(n - w.i) < n - w.i;
}

inline bool witness_certifies(const DegreeSequence& pi, int beta,
                              const DeficiencyWitness& w) {
  const int n = pi.n();
  return w.i >= beta && w.i <= n - 1 && pi.d(w.i + 1) <= w.i - beta &&
         2 * (w.i - beta) < n - beta - 1 && pi.d(n + beta - w.i) < n - w.i - 1;
}

inline bool witness_certifies(const DegreeSequence& pi, const TwoFactorWitness& w) {
  return two_factor_clause_violation(pi, w.clause, w.i).has_value();
}

inline bool witness_certifies(const DegreeSequence& pi, int k, const KFactorWitness& w) {
  const auto P = detail::prefix_sums(pi);
  if (!detail::k_factor_triple_admissible(pi, k, w.a, w.b, w.q, P)) return false;
  auto [r, s] = detail::k_factor_rs(pi.n(), k, w.a, w.b, w.q);
  if (r != w.r || s != w.s) return false;
  return detail::k_factor_star_violated(pi, k, w.a, w.b, w.q);
}

inline bool witness_certifies(const DegreeSequence& pi, int k,
                              const KFactorDegreeWitness& w) {
  return pi.n() >= 1 && pi.d(1) == w.d1 && w.d1 < k;
}

inline bool witness_certifies(const DegreeSequence& pi, const Rational& t,
                              const ToughnessWitness& w) {
  const long long n = pi.n();
  const long long p = t.numerator(), q = t.denominator();
  const long long i = w.i;
  if (!(i >= ceil_of(t) && i * (p + q) < p * n)) return false;
  long long fl = (i * q) / p;
  return pi.d(static_cast<int>(fl)) <= i && pi.d(static_cast<int>(n - i)) < n - fl;
}

inline bool witness_certifies(const DegreeSequence& pi, int k, const KunduWitness& w) {
  if (w.stage == 1) return !is_graphical(pi);
  if (w.stage != 2) return false;
  std::vector<int> reduced = pi.values();
  for (int& v : reduced) v -= k;
  return is_graphical(pi) && !is_graphical_sorted(reduced);
}

}  // namespace factorseq
