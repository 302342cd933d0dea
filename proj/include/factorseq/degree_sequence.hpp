#pragma once

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "factorseq/errors.hpp"

namespace factorseq {

// A degree sequence stored nondecreasing. Indexing follows the usual
// convention for these conditions: d(1) <= ... <= d(n), with d(0) == 0.
class DegreeSequence {
 public:
  DegreeSequence() = default;

  explicit DegreeSequence(std::vector<int> degrees) : vals_(std::move(degrees)) {
    std::sort(vals_.begin(), vals_.end());
    validate();
  }

  int n() const noexcept { return static_cast<int>(vals_.size()); }
  bool empty() const noexcept { return vals_.empty(); }

  // 1-based access with the d(0) = 0 convention.
  int d(int i) const noexcept {
    assert(i >= 0 && i <= n());
    return i == 0 ? 0 : vals_[static_cast<std::size_t>(i) - 1];
  }

  const std::vector<int>& values() const noexcept { return vals_; }

  long long sum() const noexcept {
    return std::accumulate(vals_.begin(), vals_.end(), 0LL);
  }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  void validate() const {
    for (int v : vals_) {
      if (v < 0) fail(errc::domain_error, "negative degree " + std::to_string(v));
      if (v >= n())
        fail(errc::domain_error, "degree " + std::to_string(v) + " too large for n=" +
                                     std::to_string(n()));
    }
  }

  std::vector<int> vals_;
};

// One term of the compressed notation, value^multiplicity.
struct SequenceTerm {
  int value = 0;
  int multiplicity = 1;

  friend bool operator==(const SequenceTerm&, const SequenceTerm&) = default;
};

struct SequenceExpr {
  std::vector<SequenceTerm> terms;

  int total_length() const noexcept {
    int len = 0;
    for (const auto& t : terms) len += t.multiplicity;
    return len;
  }

  std::vector<int> expand_raw() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(total_length()));
    for (const auto& t : terms)
      out.insert(out.end(), static_cast<std::size_t>(t.multiplicity), t.value);
    return out;
  }

  DegreeSequence expand() const { return DegreeSequence(expand_raw()); }
};

// Grammar: expr := term (sep term)* ; term := INT | INT '^' POSINT ;
// sep := ',' | whitespace. "4^4 6^3 10^4" and "4,4,4,4,6,6,6,10,10,10,10"
// denote the same sequence.
inline SequenceExpr parse_sequence_expr(std::string_view text) {
  SequenceExpr expr;
  std::size_t pos = 0;
  auto skip_sep = [&] {
    while (pos < text.size() &&
           (text[pos] == ',' || std::isspace(static_cast<unsigned char>(text[pos]))))
      ++pos;
  };
  auto read_int = [&](const char* what) -> long long {
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
      fail(errc::parse_error, std::string("expected ") + what + " at offset " +
                                  std::to_string(pos) + " in sequence");
    long long value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000'000) fail(errc::parse_error, "integer too large in sequence");
      ++pos;
    }
    return value;
  };

  skip_sep();
  while (pos < text.size()) {
    SequenceTerm term;
    term.value = static_cast<int>(read_int("degree"));
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      long long mult = read_int("multiplicity");
      if (mult < 1) fail(errc::parse_error, "multiplicity must be >= 1");
      if (mult > 1'000'000) fail(errc::parse_error, "multiplicity too large");
      term.multiplicity = static_cast<int>(mult);
    }
    expr.terms.push_back(term);
    std::size_t before = pos;
    skip_sep();
    if (pos < text.size() && pos == before)
      fail(errc::parse_error, "expected separator at offset " + std::to_string(pos));
  }
  if (expr.terms.empty()) fail(errc::parse_error, "empty sequence");
  return expr;
}

inline DegreeSequence parse_sequence(std::string_view text) {
  return parse_sequence_expr(text).expand();
}

// Compressed rendering of the sorted sequence: runs of length >= 2 print as
// v^m, singletons as v. render(parse(s)) is stable once sorted.
inline std::string render(const DegreeSequence& pi) {
  std::string out;
  const auto& v = pi.values();
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if (!out.empty()) out += ' ';
    out += std::to_string(v[i]);
    if (j - i >= 2) {
      out += '^';
      out += std::to_string(j - i);
    }
    i = j;
  }
  return out;
}

// Erdos-Gallai on an already nondecreasing nonnegative span, O(n) after the
// suffix-count pass. Returns false rather than throwing on out-of-range
// values so enumeration loops can call it on candidates.
inline bool is_graphical_sorted(std::span<const int> d) noexcept {
  const int n = static_cast<int>(d.size());
  if (n == 0) return true;
  long long sum = 0;
  for (int v : d) {
    if (v < 0 || v >= n) return false;
    sum += v;
  }
  if (sum % 2 != 0) return false;

  // big[j] = #{i : d_i >= j}, so the min(d_i, j) tail splits into a counted
  // part and a prefix-sum part.
  std::vector<long long> prefix(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> ge(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) prefix[static_cast<std::size_t>(i) + 1] = prefix[i] + d[i];
  for (int v : d) ++ge[v];
  for (int j = n - 1; j >= 0; --j) ge[j] += ge[j + 1];

  // Check the Erdos-Gallai inequality for each k over the k largest terms.
  for (int k = 1; k <= n; ++k) {
    // largest k degrees are d[n-k..n-1]
    long long lhs = prefix[n] - prefix[n - k];
    int m = n - k;  // number of remaining (smaller) terms, d[0..m-1]
    // sum over remaining of min(d_i, k): terms >= k contribute k each. The
    // >=k terms form a suffix of length ge[k]; its overlap with d[0..m-1]
    // has size ge[k] - k when positive.
    int cnt_ge = std::max(0, ge[k] - k);
    long long small_part = prefix[m - cnt_ge];
    long long rhs = static_cast<long long>(k) * (k - 1) +
                    static_cast<long long>(cnt_ge) * k + small_part;
    if (lhs > rhs) return false;
  }
  return true;
}

inline bool is_graphical(const DegreeSequence& pi) noexcept {
  return is_graphical_sorted(pi.values());
}

// hi majorizes lo when hi.d(i) >= lo.d(i) for every i; lengths must agree.
inline bool majorizes(const DegreeSequence& hi, const DegreeSequence& lo) {
  require(hi.n() == lo.n(), errc::length_mismatch,
          "majorizes needs equal lengths, got " + std::to_string(hi.n()) + " and " +
              std::to_string(lo.n()));
  for (int i = 1; i <= hi.n(); ++i)
    if (hi.d(i) < lo.d(i)) return false;
  return true;
}

}  // namespace factorseq
