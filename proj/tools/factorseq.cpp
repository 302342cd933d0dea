// factorseq: degree-sequence condition checker and graph oracle CLI.
//
// Subcommands:
//   check   evaluate a sufficiency condition on a degree sequence
//   oracle  quantify a graph property over all labeled realizations
//   family  print an extremal family instance
//   scan    batch sweeps (pi-n condition check, tough-vs-factor gap search)
//   graph   inspect an explicit graph (text or graph6)
//
// Exit codes: 0 = holds/true, 1 = fails/false, 2 = usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "factorseq/factorseq.hpp"

namespace fs = factorseq;
namespace fc = factorseq::cli;
using nlohmann::json;

namespace {

struct CheckOpts {
  std::string sequence;
  std::string condition;
  std::optional<int> k;
  std::optional<int> beta;
  std::optional<std::string> t;
  std::string batch;
  std::optional<int> jobs;
  bool naive = false;
  bool json_out = false;
};

fc::CheckRequest build_request(const CheckOpts& o, const fs::DegreeSequence& pi) {
  fc::CheckRequest req;
  req.condition = fc::condition_from_name(o.condition);
  req.pi = pi;
  req.k = o.k;
  req.beta = o.beta;
  if (o.t) req.t = fs::parse_rational(*o.t);
  req.naive = o.naive;
  fc::validate_request(req);
  return req;
}

int run_check_cmd(const CheckOpts& o) {
  if (!o.batch.empty()) {
    fs::require(o.sequence.empty(), fs::errc::parse_error,
                "--batch and a sequence argument are mutually exclusive");
    std::ifstream in(o.batch);
    fs::require(static_cast<bool>(in), fs::errc::parse_error,
                "cannot open batch file " + o.batch);
    // parameter validation wants a graphical placeholder; the real sequences
    // come from the file
    fc::CheckRequest base = build_request(o, fs::DegreeSequence{});
    auto lines = fc::run_batch(in, base, fc::resolve_jobs(o.jobs));
    if (o.json_out) {
      json arr = json::array();
      for (const auto& line : lines) arr.push_back(fc::batch_line_json(base, line));
      std::cout << arr.dump(2) << "\n";
    } else {
      for (const auto& line : lines) {
        std::cout << "line " << line.line_no << ": " << line.text << " -> ";
        if (line.error)
          std::cout << "error: " << *line.error << " [" << *line.error_code << "]\n";
        else
          std::cout << fc::verdict_text(line.outcome->verdict) << "\n";
      }
    }
    return fc::batch_exit_code(lines);
  }

  fs::require(!o.sequence.empty(), fs::errc::parse_error,
              "expected a degree sequence argument (or --batch FILE)");
  fc::CheckRequest req = build_request(o, fs::parse_sequence(o.sequence));
  fc::CheckOutcome outcome = fc::run_check_timed(req);
  if (o.json_out)
    std::cout << fc::check_json(req, outcome).dump(2) << "\n";
  else
    std::cout << fc::verdict_text(outcome.verdict) << "\n";
  return outcome.verdict.holds() ? fc::kExitHolds : fc::kExitFails;
}

struct OracleOpts {
  std::string sequence;
  std::string forcibly;
  std::string potentially;
  std::optional<int> k;
  std::optional<int> beta;
  std::optional<std::string> t;
  int cap = fs::kEnumerationCap;
  bool json_out = false;
};

fs::PropertyId parse_property(const OracleOpts& o, const std::string& name) {
  if (name == "k-factor") {
    fs::require(o.k.has_value(), fs::errc::bad_k, "k-factor property needs -k");
    return fs::KFactorProperty{*o.k};
  }
  if (name == "hamiltonian") return fs::HamiltonianProperty{};
  if (name == "deficiency") {
    fs::require(o.beta.has_value(), fs::errc::range_error,
                "deficiency property needs --beta");
    return fs::DeficiencyAtMostProperty{*o.beta};
  }
  if (name == "tough") {
    fs::require(o.t.has_value(), fs::errc::bad_t, "tough property needs -t");
    return fs::ToughnessProperty{fs::parse_rational(*o.t)};
  }
  fs::fail(fs::errc::parse_error,
           "unknown property '" + name +
               "' (expected k-factor, hamiltonian, deficiency, tough)");
}

int run_oracle_cmd(const OracleOpts& o) {
  fs::require(o.forcibly.empty() != o.potentially.empty(), fs::errc::parse_error,
              "exactly one of --forcibly / --potentially is required");
  const bool forall = !o.forcibly.empty();
  fs::PropertyId prop = parse_property(o, forall ? o.forcibly : o.potentially);
  fs::DegreeSequence pi = fs::parse_sequence(o.sequence);
  fs::OracleResult res = forall ? fs::forcibly_oracle(pi, prop, o.cap)
                                : fs::potentially_oracle(pi, prop, o.cap);

  if (o.json_out) {
    json j{{"schema_version", fc::kSchemaVersion},
           {"mode", forall ? "forcibly" : "potentially"},
           {"property", fs::property_name(prop)},
           {"sequence", pi.values()},
           {"n", pi.n()},
           {"value", res.value},
           {"realizations_checked", res.realizations_checked}};
    j["witness"] = res.witness_graph ? fc::graph_json(*res.witness_graph) : json();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (res.value ? "TRUE" : "FALSE") << " (checked "
              << res.realizations_checked << " realization"
              << (res.realizations_checked == 1 ? "" : "s") << ")\n";
    if (res.witness_graph) {
      std::cout << (forall ? "counterexample: " : "witness: ")
                << fc::graph_edge_text(*res.witness_graph)
                << "\ngraph6: " << fs::to_graph6(*res.witness_graph) << "\n";
    }
  }
  return res.value ? fc::kExitHolds : fc::kExitFails;
}

struct FamilyOpts {
  std::string name;
  int n = 0;
  std::optional<int> i;
  int beta = 0;
  std::string clause;
  bool json_out = false;
};

json instance_json(const fs::FamilyInstance& inst) {
  json j{{"name", inst.name},
         {"sequence", inst.sequence.values()},
         {"rendered", fs::render(inst.sequence)}};
  j["realization"] = inst.realization ? fc::graph_json(*inst.realization) : json();
  return j;
}

void print_instance(const fs::FamilyInstance& inst) {
  std::cout << inst.name << ": " << fs::render(inst.sequence) << "\n";
  if (inst.realization) {
    std::cout << "  realization: " << fc::graph_edge_text(*inst.realization)
              << "\n  graph6: " << fs::to_graph6(*inst.realization) << "\n";
  }
}

fs::TwoFactorClause clause_from_name(const std::string& name) {
  if (name == "i") return fs::TwoFactorClause::i;
  if (name == "ii") return fs::TwoFactorClause::ii;
  if (name == "iii") return fs::TwoFactorClause::iii;
  if (name == "iv") return fs::TwoFactorClause::iv;
  fs::fail(fs::errc::parse_error,
           "unknown clause '" + name + "' (expected i, ii, iii, iv)");
}

int run_family_cmd(const FamilyOpts& o) {
  std::vector<fs::FamilyInstance> instances;
  std::optional<int> pi_k;
  if (o.name == "deficiency") {
    fs::require(o.i.has_value(), fs::errc::parse_error, "deficiency family needs -i");
    instances.push_back(fs::family_deficiency(o.n, *o.i, o.beta));
  } else if (o.name == "two-factor") {
    fs::require(!o.clause.empty(), fs::errc::parse_error,
                "two-factor family needs --clause");
    instances.push_back(fs::family_two_factor(o.n, clause_from_name(o.clause), o.i));
  } else if (o.name == "pi-n") {
    fs::PiFamily fam = fs::family_pi_n(o.n);
    pi_k = fam.k;
    instances.push_back(std::move(fam.pi));
    instances.push_back(std::move(fam.pi_prime));
  } else {
    fs::fail(fs::errc::parse_error,
             "unknown family '" + o.name +
                 "' (expected deficiency, two-factor, pi-n)");
  }

  if (o.json_out) {
    json j{{"schema_version", fc::kSchemaVersion}, {"family", o.name}, {"n", o.n}};
    json arr = json::array();
    for (const auto& inst : instances) arr.push_back(instance_json(inst));
    j["instances"] = arr;
    if (pi_k) j["k"] = *pi_k;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& inst : instances) print_instance(inst);
    if (pi_k) std::cout << "k=" << *pi_k << "\n";
  }
  return fc::kExitHolds;
}

struct ScanOpts {
  std::string name;
  int max = 0;
  int from = 6;
  std::optional<int> k;
  std::optional<int> jobs;
  bool progress = false;
  bool no_oracle_check = false;
  bool json_out = false;
};

int run_scan_pi_n(const ScanOpts& o) {
  std::uint64_t seen = 0;
  auto progress = [&](const fs::PiScanEntry& e) {
    ++seen;
    if (o.progress)
      std::cout << "n=" << e.n << " k=" << e.k << " "
                << (e.holds ? "HOLDS" : "FAILS") << "\n";
    else if (seen % 100 == 0)
      std::cerr << "checked " << seen << " (n=" << e.n << ")\n";
  };
  fs::PiScanReport report =
      fs::scan_pi_n(o.max, o.from, progress, fc::resolve_jobs(o.jobs));

  if (o.json_out) {
    json fails = json::array();
    for (const auto& f : report.failures) {
      json entry{{"n", f.n}, {"k", f.k}};
      entry["witness"] = f.witness ? fc::witness_json(*f.witness) : json();
      fails.push_back(entry);
    }
    json j{{"schema_version", fc::kSchemaVersion},
           {"scan", "pi-n"},
           {"n_min", report.n_min},
           {"n_max", report.n_max},
           {"checked", report.checked},
           {"failures", fails}};
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& f : report.failures)
      std::cout << "n=" << f.n << " k=" << f.k << " FAILS "
                << (f.witness ? fc::witness_text(*f.witness) : std::string()) << "\n";
    std::cout << report.checked << " checked, " << report.failures.size()
              << " failure" << (report.failures.size() == 1 ? "" : "s") << "\n";
  }
  return report.failures.empty() ? fc::kExitHolds : fc::kExitFails;
}

int run_scan_tough_factor(const ScanOpts& o) {
  fs::require(o.k.has_value(), fs::errc::bad_k, "tough-factor scan needs -k");
  std::uint64_t seen = 0;
  auto progress = [&](const fs::DegreeSequence&, bool) {
    if (++seen % 1000 == 0 && !o.json_out)
      std::cerr << "checked " << seen << " sequences\n";
  };
  fs::ToughFactorReport report = fs::scan_tough_implies_factor(
      o.max, *o.k, !o.no_oracle_check, fc::resolve_jobs(o.jobs), progress);

  if (o.json_out) {
    json cands = json::array();
    for (const auto& c : report.candidates) {
      json entry{{"sequence", c.pi.values()},
                 {"rendered", fs::render(c.pi)},
                 {"k_factor_witness", fc::witness_json(c.k_factor_witness)}};
      entry["all_realizations_have_factor"] =
          c.all_realizations_have_factor ? json(*c.all_realizations_have_factor)
                                         : json();
      cands.push_back(entry);
    }
    json j{{"schema_version", fc::kSchemaVersion},
           {"scan", "tough-factor"},
           {"k", report.k},
           {"n_max", report.n_max},
           {"sequences_checked", report.sequences_checked},
           {"candidates", cands}};
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& c : report.candidates) {
      std::cout << "candidate: " << fs::render(c.pi) << " | k-factor fails "
                << fc::witness_text(c.k_factor_witness)
                << " | all realizations have k-factor: ";
      if (c.all_realizations_have_factor)
        std::cout << (*c.all_realizations_have_factor ? "yes" : "NO");
      else
        std::cout << "unchecked";
      std::cout << "\n";
    }
    std::cout << report.sequences_checked << " sequences checked, "
              << report.candidates.size() << " condition-level candidate"
              << (report.candidates.size() == 1 ? "" : "s") << "\n";
  }
  // candidates are findings about the conditions, not failures
  return fc::kExitHolds;
}

int run_scan_cmd(const ScanOpts& o) {
  if (o.name == "pi-n") return run_scan_pi_n(o);
  if (o.name == "tough-factor") return run_scan_tough_factor(o);
  fs::fail(fs::errc::parse_error,
           "unknown scan '" + o.name + "' (expected pi-n, tough-factor)");
}

struct GraphOpts {
  std::string file;
  std::string g6;
  std::optional<int> k;
  std::optional<int> tutte_k;
  std::optional<int> beta;
  std::optional<std::string> t;
  bool ham = false;
  bool json_out = false;
};

fs::SmallGraph load_graph(const GraphOpts& o) {
  fs::require(o.file.empty() != o.g6.empty(), fs::errc::parse_error,
              "expected exactly one of FILE (or -) and --graph6");
  if (!o.g6.empty()) return fs::from_graph6(o.g6);
  if (o.file == "-") return fs::read_graph_text(std::cin);
  std::ifstream in(o.file);
  fs::require(static_cast<bool>(in), fs::errc::parse_error,
              "cannot open graph file " + o.file);
  return fs::read_graph_text(in);
}

int run_graph_cmd(const GraphOpts& o) {
  fs::SmallGraph g = load_graph(o);
  fs::DegreeSequence pi = g.degree_sequence();

  json queries = json::object();
  std::ostringstream text;
  if (o.k) {
    bool has = fs::has_k_factor(g, *o.k);
    queries["k_factor"] = json{{"k", *o.k}, {"value", has}};
    text << "k-factor (k=" << *o.k << "): " << (has ? "yes" : "no") << "\n";
  }
  if (o.tutte_k) {
    fs::TutteCertificate cert = fs::tutte_minimum(g, *o.tutte_k);
    json a = json::array(), b = json::array();
    for (int v = 0; v < g.n(); ++v) {
      if (cert.A & fs::vbit(v)) a.push_back(v + 1);
      if (cert.B & fs::vbit(v)) b.push_back(v + 1);
    }
    queries["tutte"] = json{{"k", cert.k},
                            {"theta", cert.theta},
                            {"A", a},
                            {"B", b},
                            {"odd_components", cert.odd_count}};
    text << "tutte (k=" << cert.k << "): theta=" << cert.theta << " A={";
    for (std::size_t i = 0; i < a.size(); ++i) text << (i ? "," : "") << a[i].get<int>();
    text << "} B={";
    for (std::size_t i = 0; i < b.size(); ++i) text << (i ? "," : "") << b[i].get<int>();
    text << "} odd=" << cert.odd_count << "\n";
  }
  if (o.beta) {
    int def = fs::deficiency(g);
    queries["deficiency"] = json{{"beta", *o.beta}, {"value", def},
                                 {"at_most_beta", def <= *o.beta}};
    text << "deficiency: " << def << " (<= " << *o.beta << ": "
         << (def <= *o.beta ? "yes" : "no") << ")\n";
  }
  if (o.ham) {
    bool h = fs::is_hamiltonian(g);
    queries["hamiltonian"] = h;
    text << "hamiltonian: " << (h ? "yes" : "no") << "\n";
  }
  if (o.t) {
    fs::Rational t = fs::parse_rational(*o.t);
    bool tough = fs::toughness_at_least(g, t);
    fs::Rational exact = fs::toughness(g);
    queries["toughness"] = json{{"t", fs::to_string(t)},
                                {"at_least_t", tough},
                                {"exact", fs::to_string(exact)}};
    text << "toughness: " << fs::to_string(exact) << " (>= " << fs::to_string(t)
         << ": " << (tough ? "yes" : "no") << ")\n";
  }

  if (o.json_out) {
    json j = fc::graph_json(g);
    j["schema_version"] = fc::kSchemaVersion;
    j["degrees"] = pi.values();
    j["degrees_rendered"] = fs::render(pi);
    j["queries"] = queries;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "n=" << g.n() << " m=" << g.edge_count() << "\n"
              << "degrees: " << fs::render(pi) << "\n"
              << "graph6: " << fs::to_graph6(g) << "\n"
              << text.str();
  }
  return fc::kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degree-sequence sufficiency conditions for k-factors,\n"
               "matchings, hamiltonicity, and toughness"};
  app.require_subcommand(1);

  CheckOpts check;
  auto* c = app.add_subcommand("check", "evaluate a condition on a sequence");
  c->add_option("sequence", check.sequence,
                "degree sequence, e.g. \"4^4 6^3 10^4\" or 1,1,2,2");
  c->add_option("-c,--condition", check.condition,
                "chvatal | one-factor | two-factor | k-factor | deficiency | "
                "tough | kundu")
      ->required();
  c->add_option("-k", check.k, "factor degree k");
  c->add_option("--beta", check.beta, "deficiency bound");
  c->add_option("-t", check.t, "toughness level, integer or p/q");
  c->add_option("--batch", check.batch, "file of sequences, one per line");
  c->add_option("--jobs", check.jobs, "worker threads for --batch");
  c->add_flag("--naive", check.naive, "k-factor: unpruned triple scan");
  c->add_flag("--json", check.json_out, "machine-readable output");

  OracleOpts oracle;
  auto* r = app.add_subcommand("oracle",
                               "quantify a property over all realizations");
  r->add_option("sequence", oracle.sequence, "degree sequence")->required();
  r->add_option("--forcibly", oracle.forcibly,
                "property that every realization must have");
  r->add_option("--potentially", oracle.potentially,
                "property that some realization must have");
  r->add_option("-k", oracle.k, "k for the k-factor property");
  r->add_option("--beta", oracle.beta, "bound for the deficiency property");
  r->add_option("-t", oracle.t, "level for the tough property");
  r->add_option("--cap", oracle.cap, "max n the enumeration accepts");
  r->add_flag("--json", oracle.json_out, "machine-readable output");

  FamilyOpts family;
  auto* f = app.add_subcommand("family", "print an extremal family instance");
  f->add_option("name", family.name, "deficiency | two-factor | pi-n")->required();
  f->add_option("-n", family.n, "number of vertices")->required();
  f->add_option("-i", family.i, "family index");
  f->add_option("--beta", family.beta, "deficiency bound (default 0)");
  f->add_option("--clause", family.clause, "two-factor clause: i | ii | iii | iv");
  f->add_flag("--json", family.json_out, "machine-readable output");

  ScanOpts scan;
  auto* s = app.add_subcommand("scan", "sweep a condition over a range");
  s->add_option("name", scan.name, "pi-n | tough-factor")->required();
  s->add_option("--max", scan.max, "largest n to check")->required();
  s->add_option("--from", scan.from, "smallest n to check (pi-n, default 6)");
  s->add_option("-k", scan.k, "factor degree (tough-factor)");
  s->add_option("--jobs", scan.jobs, "worker threads");
  s->add_flag("--progress", scan.progress, "print every instance");
  s->add_flag("--no-oracle-check", scan.no_oracle_check,
              "tough-factor: skip realization-level confirmation");
  s->add_flag("--json", scan.json_out, "machine-readable output");

  GraphOpts graph;
  auto* g = app.add_subcommand("graph", "inspect an explicit graph");
  g->add_option("file", graph.file, "graph text file, or - for stdin");
  g->add_option("--graph6", graph.g6, "graph6 string instead of a file");
  g->add_option("-k", graph.k, "report whether a k-factor exists");
  g->add_option("--tutte", graph.tutte_k, "report the minimizing Tutte pair");
  g->add_option("--beta", graph.beta, "report deficiency against a bound");
  g->add_option("-t", graph.t, "report toughness against a level");
  g->add_flag("--hamiltonian", graph.ham, "report hamiltonicity");
  g->add_flag("--json", graph.json_out, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : factorseq::cli::kExitError;
  }

  try {
    if (*c) return run_check_cmd(check);
    if (*r) return run_oracle_cmd(oracle);
    if (*f) return run_family_cmd(family);
    if (*s) return run_scan_cmd(scan);
    if (*g) return run_graph_cmd(graph);
  } catch (const factorseq::error& e) {
    std::cerr << "error: " << e.what() << " [" << e.code_name() << "]\n";
    return factorseq::cli::kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return factorseq::cli::kExitError;
  }
  return factorseq::cli::kExitError;
}
