#pragma once

#include <chrono>
#include <cstdlib>
#include <istream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "factorseq/conditions.hpp"
#include "factorseq/degree_sequence.hpp"
#include "factorseq/enumerate.hpp"
#include "factorseq/errors.hpp"
#include "factorseq/explorer.hpp"
#include "factorseq/rational.hpp"
#include "factorseq/verdict.hpp"

namespace factorseq::cli {

using json = nlohmann::json;

inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitError = 2;
inline constexpr int kSchemaVersion = 1;

enum class Condition {
  chvatal,
  one_factor,
  two_factor,
  k_factor,
  deficiency,
  tough,
  kundu,
};

inline const char* condition_name(Condition c) noexcept {
  switch (c) {
    case Condition::chvatal: return "chvatal";
    case Condition::one_factor: return "one-factor";
    case Condition::two_factor: return "two-factor";
    case Condition::k_factor: return "k-factor";
    case Condition::deficiency: return "deficiency";
    case Condition::tough: return "tough";
    case Condition::kundu: return "kundu";
  }
  return "?";
}

inline Condition condition_from_name(const std::string& name) {
  for (Condition c : {Condition::chvatal, Condition::one_factor, Condition::two_factor,
                      Condition::k_factor, Condition::deficiency, Condition::tough,
                      Condition::kundu})
    if (name == condition_name(c)) return c;
  fail(errc::parse_error, "unknown condition '" + name +
                              "' (expected chvatal, one-factor, two-factor, k-factor, "
                              "deficiency, tough, or kundu)");
}

struct CheckRequest {
  Condition condition = Condition::chvatal;
  DegreeSequence pi;
  std::optional<int> k;
  std::optional<int> beta;
  std::optional<Rational> t;
  bool naive = false;  // k-factor only: force the unpruned triple loop
};

namespace detail_cli {

inline void forbid(const CheckRequest& req, bool has, const char* flag) {
  require(!has, errc::domain_error,
          std::string("condition ") + condition_name(req.condition) + " does not take " +
              flag);
}

inline int need_k(const CheckRequest& req) {
  require(req.k.has_value(), errc::domain_error,
          std::string("condition ") + condition_name(req.condition) + " needs -k");
  return *req.k;
}

}  // namespace detail_cli

// Parameter policy: each condition takes exactly the parameters it needs.
inline void validate_request(const CheckRequest& req) {
  switch (req.condition) {
    case Condition::chvatal:
    case Condition::one_factor:
    case Condition::two_factor:
      detail_cli::forbid(req, req.k.has_value(), "-k");
      detail_cli::forbid(req, req.beta.has_value(), "--beta");
      detail_cli::forbid(req, req.t.has_value(), "-t");
      break;
    case Condition::k_factor:
    case Condition::kundu:
      detail_cli::forbid(req, req.beta.has_value(), "--beta");
      detail_cli::forbid(req, req.t.has_value(), "-t");
      break;
    case Condition::deficiency:
      detail_cli::forbid(req, req.k.has_value(), "-k");
      detail_cli::forbid(req, req.t.has_value(), "-t");
      break;
    case Condition::tough:
      detail_cli::forbid(req, req.k.has_value(), "-k");
      detail_cli::forbid(req, req.beta.has_value(), "--beta");
      break;
  }
}

inline Verdict run_check(const CheckRequest& req) {
  validate_request(req);
  switch (req.condition) {
    case Condition::chvatal:
      return chvatal_hamiltonian(req.pi);
    case Condition::one_factor:
      return forcibly_one_factor(req.pi);
    case Condition::two_factor:
      return forcibly_two_factor(req.pi);
    case Condition::k_factor:
      return forcibly_k_factor(req.pi, detail_cli::need_k(req),
                               req.naive ? KFactorScan::naive : KFactorScan::pruned);
    case Condition::deficiency:
      require(req.beta.has_value(), errc::domain_error, "condition deficiency needs --beta");
      return deficiency_at_most(req.pi, *req.beta);
    case Condition::tough:
      require(req.t.has_value(), errc::domain_error, "condition tough needs -t");
      return forcibly_t_tough(req.pi, *req.t);
    case Condition::kundu:
      return potentially_k_factor(req.pi, detail_cli::need_k(req));
  }
  fail(errc::domain_error, "unreachable condition");
}

struct CheckOutcome {
  Verdict verdict;
  double elapsed_ms = 0.0;
};

inline CheckOutcome run_check_timed(const CheckRequest& req) {
  auto start = std::chrono::steady_clock::now();
  Verdict v = run_check(req);
  auto stop = std::chrono::steady_clock::now();
  return CheckOutcome{std::move(v),
                      std::chrono::duration<double, std::milli>(stop - start).count()};
}

// Witnesses in the symbols the conditions are stated in.
inline std::string witness_text(const Witness& w) {
  if (const auto* c = std::get_if<ChvatalWitness>(&w))
    return "at i=" + std::to_string(c->i);
  if (const auto* d = std::get_if<DeficiencyWitness>(&w))
    return "at i=" + std::to_string(d->i);
  if (const auto* tf = std::get_if<TwoFactorWitness>(&w)) {
    std::string out = std::string("clause (") + clause_name(tf->clause) + ")";
    if (tf->i) out += " at i=" + std::to_string(*tf->i);
    return out;
  }
  if (const auto* kf = std::get_if<KFactorWitness>(&w))
    return "(*) at a=" + std::to_string(kf->a) + " b=" + std::to_string(kf->b) +
           " q=" + std::to_string(kf->q) + " r=" + std::to_string(kf->r) +
           " s=" + std::to_string(kf->s);
  if (const auto* kd = std::get_if<KFactorDegreeWitness>(&w))
    return "degree floor: d_1=" + std::to_string(kd->d1) + " below k";
  if (const auto* t = std::get_if<ToughnessWitness>(&w))
    return "at i=" + std::to_string(t->i);
  if (const auto* ku = std::get_if<KunduWitness>(&w))
    return "at stage " + std::to_string(ku->stage);
  return "?";
}

inline json witness_json(const Witness& w) {
  if (const auto* c = std::get_if<ChvatalWitness>(&w))
    return json{{"kind", "chvatal-index"}, {"i", c->i}};
  if (const auto* d = std::get_if<DeficiencyWitness>(&w))
    return json{{"kind", "deficiency-index"}, {"i", d->i}};
  if (const auto* tf = std::get_if<TwoFactorWitness>(&w)) {
    json out{{"kind", "two-factor-clause"}, {"clause", clause_name(tf->clause)}};
    if (tf->i) out["i"] = *tf->i;
    return out;
  }
  if (const auto* kf = std::get_if<KFactorWitness>(&w))
    return json{{"kind", "k-factor-triple"}, {"a", kf->a}, {"b", kf->b},
                {"q", kf->q},                {"r", kf->r}, {"s", kf->s}};
  if (const auto* kd = std::get_if<KFactorDegreeWitness>(&w))
    return json{{"kind", "k-factor-degree"}, {"d1", kd->d1}};
  if (const auto* t = std::get_if<ToughnessWitness>(&w))
    return json{{"kind", "tough-index"}, {"i", t->i}};
  const auto& ku = std::get<KunduWitness>(w);
  return json{{"kind", "kundu-stage"}, {"stage", ku.stage}};
}

inline Witness witness_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "chvatal-index") return ChvatalWitness{j.at("i").get<int>()};
  if (kind == "deficiency-index") return DeficiencyWitness{j.at("i").get<int>()};
  if (kind == "two-factor-clause") {
    const std::string name = j.at("clause").get<std::string>();
    TwoFactorClause clause;
    if (name == "i") clause = TwoFactorClause::i;
    else if (name == "ii") clause = TwoFactorClause::ii;
    else if (name == "iii") clause = TwoFactorClause::iii;
    else if (name == "iv") clause = TwoFactorClause::iv;
    else fail(errc::parse_error, "bad clause name '" + name + "'");
    std::optional<int> i;
    if (j.contains("i")) i = j.at("i").get<int>();
    return TwoFactorWitness{clause, i};
  }
  if (kind == "k-factor-triple")
    return KFactorWitness{j.at("a").get<int>(), j.at("b").get<int>(), j.at("q").get<int>(),
                          j.at("r").get<int>(), j.at("s").get<int>()};
  if (kind == "k-factor-degree") return KFactorDegreeWitness{j.at("d1").get<int>()};
  if (kind == "tough-index") return ToughnessWitness{j.at("i").get<int>()};
  if (kind == "kundu-stage") return KunduWitness{j.at("stage").get<int>()};
  fail(errc::parse_error, "unknown witness kind '" + kind + "'");
}

inline json params_json(const CheckRequest& req) {
  json params = json::object();
  if (req.k) params["k"] = *req.k;
  if (req.beta) params["beta"] = *req.beta;
  if (req.t) params["t"] = to_string(*req.t);
  return params;
}

inline json check_json(const CheckRequest& req, const CheckOutcome& outcome) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["sequence"] = req.pi.values();
  j["n"] = req.pi.n();
  j["condition"] = condition_name(req.condition);
  j["params"] = params_json(req);
  j["verdict"] = outcome.verdict.holds() ? "holds" : "fails";
  j["witness"] = outcome.verdict.witness ? witness_json(*outcome.verdict.witness)
                                         : json(nullptr);
  j["elapsed_ms"] = outcome.elapsed_ms;
  return j;
}

inline CheckRequest request_from_json(const json& j) {
  CheckRequest req;
  req.condition = condition_from_name(j.at("condition").get<std::string>());
  req.pi = DegreeSequence(j.at("sequence").get<std::vector<int>>());
  if (j.contains("n"))
    require(j.at("n").get<int>() == req.pi.n(), errc::parse_error,
            "n does not match sequence length");
  if (j.contains("params")) {
    const json& params = j.at("params");
    if (params.contains("k")) req.k = params.at("k").get<int>();
    if (params.contains("beta")) req.beta = params.at("beta").get<int>();
    if (params.contains("t")) req.t = parse_rational(params.at("t").get<std::string>());
  }
  return req;
}

inline std::string verdict_text(const Verdict& v) {
  if (v.holds()) return "HOLDS";
  return "FAILS " + witness_text(*v.witness);
}

// --jobs flag, FACTORSEQ_JOBS, hardware parallelism, in that order.
inline int resolve_jobs(std::optional<int> flag) {
  if (flag) {
    require(*flag >= 1, errc::range_error, "--jobs must be >= 1");
    return *flag;
  }
  if (const char* env = std::getenv("FACTORSEQ_JOBS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct BatchLine {
  int line_no = 0;
  std::string text;  // the sequence expression as it appeared
  std::optional<CheckOutcome> outcome;
  std::optional<std::string> error;
  std::optional<std::string> error_code;
};

// One request per non-comment line, all sharing the base request's
// condition and parameters. A malformed line becomes an error record.
inline std::vector<BatchLine> run_batch(std::istream& in, const CheckRequest& base,
                                        int jobs = 1) {
  std::vector<BatchLine> lines;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    if (raw.find_first_not_of(" \t\r\n,") == std::string::npos) continue;
    BatchLine entry;
    entry.line_no = line_no;
    entry.text = raw;
    lines.push_back(std::move(entry));
  }
  factorseq::detail::indexed_parallel(
      lines.size(), jobs,
      [&](std::uint64_t idx) -> BatchLine {
        BatchLine entry = lines[static_cast<std::size_t>(idx)];
        try {
          CheckRequest req = base;
          req.pi = parse_sequence(entry.text);
          entry.outcome = run_check_timed(req);
        } catch (const error& e) {
          entry.error = e.what();
          entry.error_code = e.code_name();
        }
        return entry;
      },
      [&](std::uint64_t idx, BatchLine entry) {
        lines[static_cast<std::size_t>(idx)] = std::move(entry);
      });
  return lines;
}

inline int batch_exit_code(const std::vector<BatchLine>& lines) {
  bool any_error = false, any_fails = false;
  for (const auto& line : lines) {
    if (line.error) any_error = true;
    else if (line.outcome && line.outcome->verdict.fails()) any_fails = true;
  }
  if (any_error) return kExitError;
  if (any_fails) return kExitFails;
  return kExitHolds;
}

inline json batch_line_json(const CheckRequest& base, const BatchLine& line) {
  if (line.error) {
    return json{{"schema_version", kSchemaVersion},
                {"line", line.line_no},
                {"input", line.text},
                {"error", *line.error},
                {"error_code", *line.error_code}};
  }
  CheckRequest req = base;
  req.pi = parse_sequence(line.text);
  json j = check_json(req, *line.outcome);
  j["line"] = line.line_no;
  return j;
}

// Graph rendering shared by oracle/family commands.
inline json graph_json(const SmallGraph& g) {
  json edges = json::array();
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.has_edge(u, v)) edges.push_back(json::array({u + 1, v + 1}));
  return json{{"n", g.n()}, {"edges", edges}, {"graph6", to_graph6(g)}};
}

inline std::string graph_edge_text(const SmallGraph& g) {
  std::string out;
  bool first = true;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.has_edge(u, v)) {
        if (!first) out += ' ';
        out += std::to_string(u + 1) + "-" + std::to_string(v + 1);
        first = false;
      }
  if (first) out = "(no edges)";
  return out;
}

}  // namespace factorseq::cli
