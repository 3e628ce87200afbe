// lborder: command-line front end for the graph-energy workbench.
//
//   lborder family   --id <kkodot|kkdot|mjc|mje> --n N [--a A --b B] --emit <g6|edges>
//   lborder spectrum --matrix <A|L|NL> --mode <float|exact> (--input F.g6 | --id ...)
//   lborder energy   --matrix <A|L|NL> --mode <float|exact> (--input F.g6 | --id ...)
//   lborder verify   --max-n N --max-ab M [--json PATH]
//   lborder scan     (--n 1..7 | --corpus F.g6) [--strict] [--json PATH]
//
// Results go to stdout as JSON lines, diagnostics to stderr. Exit codes:
// 0 success, 1 check failure, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lborder/closed_form.hpp"
#include "lborder/energy.hpp"
#include "lborder/graph.hpp"
#include "lborder/graph6.hpp"
#include "lborder/spectral.hpp"
#include "lborder/workbench.hpp"

namespace {

using lborder::FamilyId;
using lborder::FamilyKind;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes each JSON line to stdout and, when requested, to a report file.
class Emitter {
 public:
  explicit Emitter(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw UsageError("cannot open '" + path + "' for writing");
  }

  void emit(const json& j) {
    const auto line = j.dump();
    std::cout << line << '\n';
    if (file_.is_open()) file_ << line << '\n';
  }

 private:
  std::ofstream file_;
};

struct FamilyArgs {
  std::string id;
  long n = 0;
  long a = 0;
  long b = 0;
};

void add_family_options(CLI::App* cmd, FamilyArgs& args, bool required) {
  auto* opt = cmd->add_option("--id", args.id, "Graph family")
                  ->check(CLI::IsMember({"kkodot", "kkdot", "mjc", "mje", "complete",
                                         "empty", "matching"}));
  if (required) opt->required();
  cmd->add_option("--n", args.n, "Family parameter n (kkodot, kkdot, complete)");
  cmd->add_option("--a", args.a, "Matching size a (mjc, mje, matching)");
  cmd->add_option("--b", args.b, "Second join operand order b (mjc, mje, empty)");
}

FamilyId to_family_id(const FamilyArgs& args) {
  FamilyId id;
  if (args.id == "kkodot") id = FamilyId::kk_odot(args.n);
  else if (args.id == "kkdot") id = FamilyId::kk_dot(args.n);
  else if (args.id == "mjc") id = FamilyId::match_join_complete(args.a, args.b);
  else if (args.id == "mje") id = FamilyId::match_join_empty(args.a, args.b);
  else if (args.id == "complete") id = FamilyId::complete(args.n);
  else if (args.id == "empty") id = FamilyId::empty(args.b);
  else if (args.id == "matching") id = FamilyId::matching(args.a);
  else throw UsageError("unknown family '" + args.id + "'");
  try {
    id.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return id;
}

json params_json(const FamilyId& id) {
  json p = json::object();
  switch (id.kind) {
    case FamilyKind::complete:
    case FamilyKind::kk_odot:
    case FamilyKind::kk_dot:
      p["n"] = id.n;
      break;
    case FamilyKind::empty:
      p["b"] = id.b;
      break;
    case FamilyKind::matching:
      p["a"] = id.a;
      break;
    case FamilyKind::match_join_complete:
    case FamilyKind::match_join_empty:
      p["a"] = id.a;
      p["b"] = id.b;
      break;
  }
  return p;
}

json source_json(const FamilyId& id) {
  return {{"family", lborder::family_name(id.kind)}, {"params", params_json(id)}};
}

// Graphs named by --input, one per graph6 record; parse errors abort.
template <typename Fn>
void for_each_input_graph(const std::string& path, Fn&& fn) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  lborder::Graph6Reader reader(in);
  while (auto rec = reader.next()) {
    if (!rec->graph) {
      throw UsageError(path + ":" + std::to_string(rec->line_number) + ": " + rec->error);
    }
    fn(*rec->graph, json{{"input", path}, {"line", rec->line_number}, {"graph6", rec->text}});
  }
}

json exact_values_json(const lborder::RationalSpectrum& s) {
  json values = json::array();
  for (const auto& e : s.entries()) {
    values.push_back({{"value", lborder::to_string(e.value)},
                      {"approx", lborder::to_double(e.value)},
                      {"multiplicity", e.multiplicity}});
  }
  return values;
}

json energy_json(const lborder::EnergyReport& r) {
  json j;
  j["type"] = "energy";
  j["matrix"] = lborder::matrix_symbol(r.kind);
  j["order"] = r.order;
  j["center"] = r.center;
  if (r.exact_center) j["center_exact"] = lborder::to_string(*r.exact_center);
  j["energy"] = r.energy;
  if (r.exact_energy) j["energy_exact"] = lborder::to_string(*r.exact_energy);
  if (r.borderenergetic) j["borderenergetic"] = *r.borderenergetic;
  if (r.l_borderenergetic) j["l_borderenergetic"] = *r.l_borderenergetic;
  if (r.cospectral_with_complete) j["cospectral_with_complete"] = *r.cospectral_with_complete;
  return j;
}

void merge_into(json& target, const json& extra) {
  for (const auto& [k, v] : extra.items()) target[k] = v;
}

int run_family(const FamilyArgs& args, const std::string& emit) {
  const auto id = to_family_id(args);
  const auto g = lborder::family(id);
  json j{{"type", "graph"}};
  merge_into(j, source_json(id));
  j["order"] = g.order();
  j["edge_count"] = g.edge_count();
  if (emit == "edges") {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = edges;
  } else {
    j["graph6"] = lborder::write_graph6(g);
  }
  std::cout << j.dump() << '\n';
  return kExitOk;
}

struct QueryArgs {
  std::string matrix;
  std::string mode = "float";
  std::string input;
  FamilyArgs family;
};

void require_one_source(const QueryArgs& q) {
  if (q.input.empty() == q.family.id.empty())
    throw UsageError("give exactly one of --input or --id");
  if (q.mode == "exact" && !q.input.empty())
    throw UsageError("exact mode needs a family (--id); graph6 input supports --mode float");
}

int run_spectrum(const QueryArgs& q) {
  require_one_source(q);
  const auto kind = lborder::parse_matrix_symbol(q.matrix);
  auto emit_float = [&](const lborder::Graph& g, json source) {
    const auto s = lborder::graph_spectrum(g, kind);
    json j{{"type", "spectrum"}, {"matrix", q.matrix}, {"mode", "float"}};
    merge_into(j, source);
    j["order"] = g.order();
    j["eigenvalues"] = std::vector<double>(s.values().begin(), s.values().end());
    std::cout << j.dump() << '\n';
  };
  if (!q.input.empty()) {
    for_each_input_graph(q.input, emit_float);
    return kExitOk;
  }
  const auto id = to_family_id(q.family);
  if (q.mode == "float") {
    emit_float(lborder::family(id), source_json(id));
    return kExitOk;
  }
  lborder::RationalSpectrum s;
  try {
    s = lborder::family_spectrum(id, kind);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  json j{{"type", "spectrum"}, {"matrix", q.matrix}, {"mode", "exact"}};
  merge_into(j, source_json(id));
  j["order"] = s.order();
  j["eigenvalues"] = exact_values_json(s);
  std::cout << j.dump() << '\n';
  return kExitOk;
}

int run_energy(const QueryArgs& q) {
  require_one_source(q);
  const auto kind = lborder::parse_matrix_symbol(q.matrix);
  if (!q.input.empty()) {
    for_each_input_graph(q.input, [&](const lborder::Graph& g, json source) {
      auto j = energy_json(lborder::energy_report(g, kind));
      j["mode"] = "float";
      merge_into(j, source);
      std::cout << j.dump() << '\n';
    });
    return kExitOk;
  }
  const auto id = to_family_id(q.family);
  lborder::EnergyReport r;
  if (q.mode == "float") {
    r = lborder::energy_report(lborder::family(id), kind);
  } else {
    try {
      r = lborder::family_energy_report(id, kind);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  auto j = energy_json(r);
  j["mode"] = q.mode;
  merge_into(j, source_json(id));
  std::cout << j.dump() << '\n';
  return kExitOk;
}

int run_verify(long max_n, long max_ab, const std::string& json_path) {
  if (max_n < 3) throw UsageError("--max-n must be at least 3");
  if (max_ab < 2) throw UsageError("--max-ab must be at least 2");
  Emitter out(json_path);
  const auto report = lborder::verify_families(max_n, max_ab);
  for (const auto& c : report.checks) {
    out.emit(lborder::to_json(c));
    if (!c.pass) {
      std::cerr << "FAIL " << c.family << " " << lborder::to_string(c.id) << " " << c.check
                << ": " << c.detail << '\n';
    }
  }
  out.emit(lborder::summary_json(report));
  return report.all_passed() ? kExitOk : kExitCheckFailure;
}

struct ScanArgs {
  std::size_t n = 0;
  std::string corpus;
  bool strict = false;
  std::string json_path;
  unsigned threads = 0;
};

int run_scan(const ScanArgs& args) {
  Emitter out(args.json_path);
  json summary{{"type", "summary"}};
  std::vector<lborder::ScanFinding> findings;
  if (!args.corpus.empty()) {
    std::ifstream in(args.corpus);
    if (!in) throw UsageError("cannot open '" + args.corpus + "'");
    lborder::Graph6Options opts;
    opts.strict = args.strict;
    auto result = lborder::scan_corpus(in, opts);
    for (const auto& issue : result.issues) {
      std::cerr << args.corpus << ":" << issue.line_number << ": "
                << (issue.fatal ? "error: " : "warning: ") << issue.message << '\n';
    }
    if (result.aborted) return kExitUsage;
    findings = std::move(result.findings);
    summary["corpus"] = args.corpus;
    summary["graphs"] = result.graphs_read;
    summary["skipped_lines"] = result.malformed_lines;
  } else {
    if (args.n < 1 || args.n > lborder::kMaxLabeledScanOrder) {
      throw UsageError("--n must be in 1..7; scan larger orders with --corpus <file.g6>");
    }
    findings = lborder::scan_labeled(args.n, {args.threads});
    summary["n"] = args.n;
    summary["graphs"] = std::uint64_t{1} << (args.n * (args.n - 1) / 2);
  }
  for (const auto& f : findings) out.emit(lborder::to_json(f));
  summary["findings"] = findings.size();
  out.emit(summary);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplacian and normalized-Laplacian energy workbench"};
  app.require_subcommand(1);

  FamilyArgs family_args;
  std::string emit = "g6";
  auto* family_cmd = app.add_subcommand("family", "Construct a family graph");
  add_family_options(family_cmd, family_args, true);
  family_cmd->add_option("--emit", emit, "Output encoding")
      ->check(CLI::IsMember({"g6", "edges"}));

  QueryArgs spectrum_args;
  QueryArgs energy_args;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues of A, L or NL");
  auto* energy_cmd = app.add_subcommand("energy", "Graph energy for A, L or NL");
  for (auto [cmd, q] : {std::pair{spectrum_cmd, &spectrum_args}, std::pair{energy_cmd, &energy_args}}) {
    cmd->add_option("--matrix", q->matrix, "Matrix kind")
        ->required()
        ->check(CLI::IsMember({"A", "L", "NL"}));
    cmd->add_option("--mode", q->mode, "float (Jacobi) or exact (closed form)")
        ->check(CLI::IsMember({"float", "exact"}));
    cmd->add_option("--input", q->input, "graph6 file");
    add_family_options(cmd, q->family, false);
  }

  long max_n = 0;
  long max_ab = 0;
  std::string verify_json;
  auto* verify_cmd = app.add_subcommand("verify", "Check the family identities over a sweep");
  verify_cmd->add_option("--max-n", max_n, "Largest n for kkodot/kkdot")->required();
  verify_cmd->add_option("--max-ab", max_ab, "Largest a and b for mjc/mje")->required();
  verify_cmd->add_option("--json", verify_json, "Also write the report to this file");

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand("scan", "Search for L-borderenergetic graphs");
  auto* scan_n = scan_cmd->add_option("--n", scan_args.n, "Enumerate all labeled graphs of this order");
  auto* scan_corpus = scan_cmd->add_option("--corpus", scan_args.corpus, "graph6 file to scan");
  scan_n->excludes(scan_corpus);
  scan_cmd->add_flag("--strict", scan_args.strict, "Abort on the first malformed corpus line");
  scan_cmd->add_option("--json", scan_args.json_path, "Also write the findings to this file");
  scan_cmd->add_option("--threads", scan_args.threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
    if (*scan_cmd && scan_n->count() == 0 && scan_corpus->count() == 0)
      throw UsageError("scan needs --n or --corpus");

    if (*family_cmd) return run_family(family_args, emit);
    if (*spectrum_cmd) return run_spectrum(spectrum_args);
    if (*energy_cmd) return run_energy(energy_args);
    if (*verify_cmd) return run_verify(max_n, max_ab, verify_json);
    if (*scan_cmd) return run_scan(scan_args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailure;
  }
  return kExitUsage;
}
