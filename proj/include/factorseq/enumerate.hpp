#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "factorseq/degree_sequence.hpp"
#include "factorseq/errors.hpp"
#include "factorseq/oracle.hpp"
#include "factorseq/rational.hpp"
#include "factorseq/small_graph.hpp"

namespace factorseq {

// Default cap on exhaustive labeled enumeration; callers may override up to
// the graph type's limit, at their own cost.
inline constexpr int kEnumerationCap = 12;
inline constexpr int kSequenceEnumCap = 10;

// Streams every labeled simple graph in which vertex i has degree exactly
// pi.values()[i]. Backtracking over vertex pairs (i,j), i < j, in
// lexicographic order, edge-present branch first; prunes on residual
// degrees, remaining capacity, and residual graphicality at each row
// completion. A non-graphical sequence yields an empty stream.
class RealizationStream {
 public:
  explicit RealizationStream(const DegreeSequence& pi, int cap = kEnumerationCap)
      : n_(pi.n()) {
    require(cap >= 0 && cap <= kMaxVertices, errc::range_error,
            "enumeration cap must lie in [0, 16]");
    require(n_ <= cap, errc::too_large,
            "enumeration limited to n <= " + std::to_string(cap) + ", got n=" +
                std::to_string(n_));
    if (!is_graphical(pi)) {
      done_ = true;
      return;
    }
    g_ = SmallGraph(n_);
    rem_ = pi.values();
    pairs_.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) pairs_.emplace_back(i, j);
    dec_.assign(pairs_.size(), -1);
  }

  // Next realization, or nullopt once exhausted.
  std::optional<SmallGraph> next() {
    if (done_) return std::nullopt;
    bool descending = !started_;
    started_ = true;
    while (true) {
      if (descending) {
        if (depth_ == pairs_.size()) {
          ++emitted_;
          return g_;
        }
        if (apply(depth_, 1) || apply(depth_, 0)) {
          ++depth_;
          continue;
        }
        descending = false;
        continue;
      }
      if (depth_ == 0) {
        done_ = true;
        return std::nullopt;
      }
      --depth_;
      int prev = dec_[depth_];
      undo(depth_);
      if (prev == 1 && apply(depth_, 0)) {
        ++depth_;
        descending = true;
      }
    }
  }

  std::uint64_t emitted() const noexcept { return emitted_; }

 private:
  // Try to fix pair p to choice c (1 = edge, 0 = no edge); true on success.
  bool apply(std::size_t p, int c) {
    auto [i, j] = pairs_[p];
    auto& ri = rem_[static_cast<std::size_t>(i)];
    auto& rj = rem_[static_cast<std::size_t>(j)];
    if (c == 1) {
      if (ri == 0 || rj == 0) return false;
      --ri;
      --rj;
      g_.add_edge(i, j);
    } else {
      // skipping must leave both endpoints enough undecided pairs:
      // i has n-1-j left, j has n-i-2 left
      if (ri > n_ - 1 - j || rj > n_ - i - 2) return false;
    }
    if (j == n_ - 1 && !row_complete_ok(i)) {
      if (c == 1) {
        ++ri;
        ++rj;
        g_.remove_edge(i, j);
      }
      return false;
    }
    dec_[p] = static_cast<signed char>(c);
    return true;
  }

  void undo(std::size_t p) {
    if (dec_[p] == 1) {
      auto [i, j] = pairs_[p];
      ++rem_[static_cast<std::size_t>(i)];
      ++rem_[static_cast<std::size_t>(j)];
      g_.remove_edge(i, j);
    }
    dec_[p] = -1;
  }

  // All pairs touching row i are decided: its residual must be spent, and
  // the residual degrees of the later vertices must stay realizable among
  // themselves (exact feasibility via the graphicality test).
  bool row_complete_ok(int i) {
    if (rem_[static_cast<std::size_t>(i)] != 0) return false;
    scratch_.assign(rem_.begin() + i + 1, rem_.end());
    std::sort(scratch_.begin(), scratch_.end());
    return is_graphical_sorted(scratch_);
  }

  int n_;
  SmallGraph g_;
  std::vector<int> rem_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<signed char> dec_;
  std::vector<int> scratch_;
  std::size_t depth_ = 0;
  std::uint64_t emitted_ = 0;
  bool started_ = false;
  bool done_ = false;
};

// Visits realizations in stream order until the visitor returns false.
// Returns true when enumeration ran to completion.
template <typename Visitor>
bool for_each_realization(const DegreeSequence& pi, Visitor&& visit,
                          int cap = kEnumerationCap) {
  RealizationStream stream(pi, cap);
  while (auto g = stream.next())
    if (!visit(*g)) return false;
  return true;
}

inline std::uint64_t count_realizations(const DegreeSequence& pi,
                                        int cap = kEnumerationCap) {
  RealizationStream stream(pi, cap);
  while (stream.next()) {
  }
  return stream.emitted();
}

// Graph properties the quantifier oracles understand.
struct KFactorProperty {
  int k;
};
struct HamiltonianProperty {};
struct DeficiencyAtMostProperty {
  int beta;
};
struct ToughnessProperty {
  Rational t;
};

using PropertyId = std::variant<KFactorProperty, HamiltonianProperty,
                                DeficiencyAtMostProperty, ToughnessProperty>;

inline bool graph_has_property(const SmallGraph& g, const PropertyId& prop) {
  if (const auto* kf = std::get_if<KFactorProperty>(&prop))
    return has_k_factor(g, kf->k);
  if (std::holds_alternative<HamiltonianProperty>(prop)) return is_hamiltonian(g);
  if (const auto* df = std::get_if<DeficiencyAtMostProperty>(&prop))
    return deficiency(g) <= df->beta;
  return toughness_at_least(g, std::get<ToughnessProperty>(prop).t);
}

inline std::string property_name(const PropertyId& prop) {
  if (const auto* kf = std::get_if<KFactorProperty>(&prop))
    return "k-factor(k=" + std::to_string(kf->k) + ")";
  if (std::holds_alternative<HamiltonianProperty>(prop)) return "hamiltonian";
  if (const auto* df = std::get_if<DeficiencyAtMostProperty>(&prop))
    return "deficiency<=" + std::to_string(df->beta);
  return "toughness>=" + to_string(std::get<ToughnessProperty>(prop).t);
}

struct OracleResult {
  bool value = false;
  std::uint64_t realizations_checked = 0;
  // forcibly: first realization lacking the property (present iff !value);
  // potentially: first realization having it (present iff value)
  std::optional<SmallGraph> witness_graph;
};

namespace detail {

inline void require_enumerable(const DegreeSequence& pi, int cap) {
  require(is_graphical(pi), errc::not_graphical,
          "sequence " + render(pi) + " is not graphical");
  require(pi.n() <= cap, errc::too_large,
          "oracle limited to n <= " + std::to_string(cap));
}

}  // namespace detail

// Every realization has the property? Short-circuits on the first failure.
inline OracleResult forcibly_oracle(const DegreeSequence& pi, const PropertyId& prop,
                                    int cap = kEnumerationCap) {
  detail::require_enumerable(pi, cap);
  OracleResult res;
  res.value = true;
  for_each_realization(
      pi,
      [&](const SmallGraph& g) {
        ++res.realizations_checked;
        if (!graph_has_property(g, prop)) {
          res.value = false;
          res.witness_graph = g;
          return false;
        }
        return true;
      },
      cap);
  return res;
}

// Some realization has the property?
inline OracleResult potentially_oracle(const DegreeSequence& pi, const PropertyId& prop,
                                       int cap = kEnumerationCap) {
  detail::require_enumerable(pi, cap);
  OracleResult res;
  res.value = false;
  for_each_realization(
      pi,
      [&](const SmallGraph& g) {
        ++res.realizations_checked;
        if (graph_has_property(g, prop)) {
          res.value = true;
          res.witness_graph = g;
          return false;
        }
        return true;
      },
      cap);
  return res;
}

// All graphical nondecreasing sequences of length n, lexicographic order.
class GraphicalSequenceStream {
 public:
  explicit GraphicalSequenceStream(int n, int cap = kSequenceEnumCap)
      : n_(n) {
    require(n >= 1, errc::range_error, "sequence length must be >= 1");
    require(cap <= kEnumerationCap, errc::range_error,
            "sequence enumeration cap must be <= " + std::to_string(kEnumerationCap));
    require(n <= cap, errc::too_large,
            "sequence enumeration limited to n <= " + std::to_string(cap));
    current_.assign(static_cast<std::size_t>(n), 0);
  }

  std::optional<DegreeSequence> next() {
    while (!done_) {
      bool ok = is_graphical_sorted(current_);
      DegreeSequence out;
      if (ok) out = DegreeSequence(current_);
      advance();
      if (ok) return out;
    }
    return std::nullopt;
  }

 private:
  // next nondecreasing tuple over [0, n-1], lexicographic
  void advance() {
    for (int pos = n_ - 1; pos >= 0; --pos) {
      if (current_[static_cast<std::size_t>(pos)] < n_ - 1) {
        int v = ++current_[static_cast<std::size_t>(pos)];
        for (int rest = pos + 1; rest < n_; ++rest)
          current_[static_cast<std::size_t>(rest)] = v;
        return;
      }
    }
    done_ = true;
  }

  int n_;
  std::vector<int> current_;
  bool done_ = false;
};

inline std::vector<DegreeSequence> all_graphical_sequences(int n,
                                                           int cap = kSequenceEnumCap) {
  GraphicalSequenceStream stream(n, cap);
  std::vector<DegreeSequence> out;
  while (auto pi = stream.next()) out.push_back(std::move(*pi));
  return out;
}

}  // namespace factorseq
