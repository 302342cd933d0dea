#pragma once

#include <stdexcept>
#include <string>

namespace factorseq {

enum class errc {
  parse_error,
  domain_error,
  length_mismatch,
  not_graphical,
  too_large,
  too_few_vertices,
  parity_error,
  range_error,
  bad_k,
  bad_t,
  odd_order,
  overlapping_sets,
};

// Stable token per code; the CLI prints these and the JSON output embeds them,
// so they are part of the external interface.
inline const char* errc_name(errc c) noexcept {
  switch (c) {
    case errc::parse_error: return "ParseError";
    case errc::domain_error: return "DomainError";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::not_graphical: return "NotGraphical";
    case errc::too_large: return "TooLarge";
    case errc::too_few_vertices: return "TooFewVertices";
    case errc::parity_error: return "ParityError";
    case errc::range_error: return "RangeError";
    case errc::bad_k: return "BadK";
    case errc::bad_t: return "BadT";
    case errc::odd_order: return "OddOrder";
    case errc::overlapping_sets: return "OverlappingSets";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what_arg)
      : std::runtime_error(what_arg), code_(code) {}

  errc code() const noexcept { return code_; }
  const char* code_name() const noexcept { return errc_name(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw error(code, msg);
}

inline void require(bool cond, errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace factorseq
