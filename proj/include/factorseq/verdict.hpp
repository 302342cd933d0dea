#pragma once

#include <optional>
#include <string>
#include <variant>

namespace factorseq {

// Each witness pins down the concrete inequality the sequence violates, so a
// failing verdict can be rechecked without rerunning the scan.

struct ChvatalWitness {
  int i;  // d(i) <= i < n/2 held but d(n-i) < n-i
  friend bool operator==(const ChvatalWitness&, const ChvatalWitness&) = default;
};

struct DeficiencyWitness {
  int i;  // premise d(i+1) <= i-beta held but d(n+beta-i) < n-i-1
  friend bool operator==(const DeficiencyWitness&, const DeficiencyWitness&) = default;
};

enum class TwoFactorClause { i, ii, iii, iv };

inline const char* clause_name(TwoFactorClause c) noexcept {
  switch (c) {
    case TwoFactorClause::i: return "i";
    case TwoFactorClause::ii: return "ii";
    case TwoFactorClause::iii: return "iii";
    case TwoFactorClause::iv: return "iv";
  }
  return "?";
}

struct TwoFactorWitness {
  TwoFactorClause clause;
  std::optional<int> i;  // indexed clauses (iii) and (iv) carry their index
  friend bool operator==(const TwoFactorWitness&, const TwoFactorWitness&) = default;
};

struct KFactorWitness {
  int a, b, q;
  int r, s;  // r = a+k+q-2, s = n - max(0,b-k+1) - max(0,q-1) - 1
  friend bool operator==(const KFactorWitness&, const KFactorWitness&) = default;
};

struct KFactorDegreeWitness {
  int d1;  // smallest degree, below k
  friend bool operator==(const KFactorDegreeWitness&, const KFactorDegreeWitness&) = default;
};

struct ToughnessWitness {
  int i;  // d(floor(i/t)) <= i held but d(n-i) < n - floor(i/t)
  friend bool operator==(const ToughnessWitness&, const ToughnessWitness&) = default;
};

struct KunduWitness {
  int stage;  // 1: pi itself not graphical, 2: pi - k not graphical
  friend bool operator==(const KunduWitness&, const KunduWitness&) = default;
};

using Witness = std::variant<ChvatalWitness, DeficiencyWitness, TwoFactorWitness,
                             KFactorWitness, KFactorDegreeWitness, ToughnessWitness,
                             KunduWitness>;

struct Verdict {
  // empty means the condition holds; otherwise the reason it fails
  std::optional<Witness> witness;

  bool holds() const noexcept { return !witness.has_value(); }
  bool fails() const noexcept { return witness.has_value(); }

  static Verdict pass() { return Verdict{}; }
  static Verdict fail_with(Witness w) { return Verdict{std::move(w)}; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

}  // namespace factorseq
