// Acceptance suite: one pass/fail line per criterion.
//
//   acceptance <path-to-lborder-cli> [scratch-dir]
//
// Criteria 6 and 8 run the command-line tool; the rest call the library.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "graph6_oracle.hpp"
#include "lborder/closed_form.hpp"
#include "lborder/energy.hpp"
#include "lborder/graph.hpp"
#include "lborder/graph6.hpp"
#include "lborder/spectral.hpp"
#include "lborder/workbench.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace lborder;

namespace {

const auto L = MatrixKind::laplacian;
const auto NL = MatrixKind::normalized_laplacian;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

fs::path g_cli;
fs::path g_scratch;

// Runs the CLI with stdout sent to `out`; returns the exit code.
int run_cli(const std::string& args, const fs::path& out) {
  const std::string cmd = "\"" + g_cli.string() + "\" " + args + " > \"" + out.string() + "\"";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<nlohmann::json> read_json_lines(const fs::path& p) {
  std::vector<nlohmann::json> out;
  std::ifstream in(p);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  return out;
}

double max_dev(const std::vector<double>& a, std::span<const double> b) {
  return max_deviation(a, b);
}

// 1: kkodot(n) has E_L = 4n - 6 = E_L(K_{2n-2}) exactly; numeric within 1e-7.
Outcome kkodot_borderenergetic() {
  Outcome o;
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (long n = 3; n <= 40; ++n) {
    const auto id = FamilyId::kk_odot(n);
    const auto spectrum = family_spectrum(id, L);
    const Rational center = spectrum.sum() / static_cast<long long>(spectrum.order());
    const Rational exact = exact_energy(spectrum, center);
    const long order = 2 * n - 2;
    const Rational complete =
        exact_energy(base_spectrum(FamilyId::complete(order), L), order - 1);
    if (exact != 4 * n - 6 || exact != complete)
      o.fail("n=" + std::to_string(n) + ": exact " + to_string(exact));
    const auto numeric = laplacian_energy(family(id)).energy;
    worst = std::max(worst, std::abs(numeric - to_double(exact)));
  }
  if (worst > 1e-7) o.fail("numeric deviation " + fmt(worst));
  const double elapsed = seconds_since(t0);
  if (elapsed >= 10.0) o.fail("took " + fmt(elapsed) + " s");
  if (o.pass) o.detail = "n=3..40, max numeric dev " + fmt(worst) + ", " + fmt(elapsed) + " s";
  return o;
}

// 2: kkdot(n) has E_L = 4n - 2 exactly; direct construction matches the join.
Outcome kkdot_borderenergetic() {
  Outcome o;
  for (long n = 3; n <= 40; ++n) {
    const auto spectrum = family_spectrum(FamilyId::kk_dot(n), L);
    const Rational center = spectrum.sum() / static_cast<long long>(spectrum.order());
    const Rational exact = exact_energy(spectrum, center);
    if (exact != 4 * n - 2) o.fail("n=" + std::to_string(n) + ": exact " + to_string(exact));
  }
  double worst = 0.0;
  for (long n = 3; n <= 15; ++n) {
    const auto direct = graph_spectrum(kk_dot_direct(n), L);
    const auto joined = graph_spectrum(family(FamilyId::kk_dot(n)), L);
    worst = std::max(worst, max_deviation(direct.values(), joined.values()));
  }
  if (worst > 1e-8) o.fail("direct vs join deviation " + fmt(worst));
  if (o.pass) o.detail = "n=3..40 exact, direct-vs-join dev " + fmt(worst) + " (n<=15)";
  return o;
}

// 3: mjc(a,b) and mje(a,b) share E_NL = (2a+2b)/(b+1) with unequal spectra.
Outcome matching_joins_equal_energy() {
  Outcome o;
  const auto t0 = Clock::now();
  for (long a = 2; a <= 20; ++a) {
    for (long b = 2; b <= 20; ++b) {
      const auto x = family_spectrum(FamilyId::match_join_complete(a, b), NL);
      const auto y = family_spectrum(FamilyId::match_join_empty(a, b), NL);
      const Rational expected = make_rational(2 * a + 2 * b, b + 1);
      const auto tag = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      if (exact_energy(x, 1) != expected) o.fail("mjc" + tag + " energy " + to_string(exact_energy(x, 1)));
      if (exact_energy(y, 1) != expected) o.fail("mje" + tag + " energy " + to_string(exact_energy(y, 1)));
      if (cospectral(x, y)) o.fail(tag + " spectra coincide");
    }
  }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 10.0) o.fail("took " + fmt(elapsed) + " s");
  if (o.pass) o.detail = "361 pairs, " + fmt(elapsed) + " s";
  return o;
}

// 4: lemma spectrum == composition spectrum exactly, both within 1e-8 of
// the Jacobi spectrum, for every family instance of order <= 60.
Outcome three_way_oracle() {
  Outcome o;
  std::size_t instances = 0;
  double worst = 0.0;
  auto check = [&](const FamilyId& id, MatrixKind kind) {
    ++instances;
    const auto closed = family_spectrum(id, kind);
    const auto composed = composition_spectrum(id, kind);
    if (!(closed == composed)) o.fail(to_string(id) + " closed != composition");
    const auto numeric = graph_spectrum(family(id), kind);
    const double dev = std::max(max_dev(closed.to_doubles(), numeric.values()),
                                max_dev(composed.to_doubles(), numeric.values()));
    worst = std::max(worst, dev);
    if (dev > 1e-8) o.fail(to_string(id) + " numeric dev " + fmt(dev));
  };
  for (long n = 3; 2 * n - 2 <= 60; ++n) check(FamilyId::kk_odot(n), L);
  for (long n = 3; 2 * n <= 60; ++n) check(FamilyId::kk_dot(n), L);
  for (long a = 2; 2 * a + 2 <= 60; ++a) {
    for (long b = 2; 2 * a + b <= 60; ++b) {
      for (const auto& id : {FamilyId::match_join_complete(a, b), FamilyId::match_join_empty(a, b)}) {
        check(id, NL);
        check(id, L);
      }
    }
  }
  if (o.pass) o.detail = std::to_string(instances) + " instances, max dev " + fmt(worst);
  return o;
}

// Q^T diag(d) Q with Q a product of random plane rotations.
SymMatrix planted(const std::vector<double>& d, std::mt19937_64& rng) {
  const std::size_t n = d.size();
  std::vector<double> a(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = d[i];
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (std::size_t r = 0; r < 4 * n * n; ++r) {
    const std::size_t p = pick(rng), q = pick(rng);
    if (p == q) continue;
    const double t = angle(rng), c = std::cos(t), s = std::sin(t);
    for (std::size_t k = 0; k < n; ++k) {
      const double x = a[p * n + k], y = a[q * n + k];
      a[p * n + k] = c * x - s * y;
      a[q * n + k] = s * x + c * y;
    }
    for (std::size_t k = 0; k < n; ++k) {
      const double x = a[k * n + p], y = a[k * n + q];
      a[k * n + p] = c * x - s * y;
      a[k * n + q] = s * x + c * y;
    }
  }
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.set(i, j, 0.5 * (a[i * n + j] + a[j * n + i]));
  return m;
}

// 5: eigensolver invariants on random graphs and planted spectra.
Outcome eigensolver_properties() {
  Outcome o;
  std::mt19937_64 rng(20161104);
  std::uniform_int_distribution<std::size_t> order(1, 20);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto g = testing_support::random_graph(rng, order(rng), density(rng));
    const auto l = graph_spectrum(g, L);
    const auto nl = graph_spectrum(g, NL);
    const auto tag = "graph #" + std::to_string(trial);
    if (l.min() < -1e-9) o.fail(tag + ": L not PSD");
    if (std::abs(l.sum() - 2.0 * static_cast<double>(g.edge_count())) > 1e-8)
      o.fail(tag + ": trace(L) != 2m");
    if (nl.min() < -1e-9 || nl.max() > 2.0 + 1e-9) o.fail(tag + ": NL outside [0,2]");
    const auto zeros = static_cast<std::size_t>(
        std::count_if(l.values().begin(), l.values().end(), [](double v) { return v < 1e-6; }));
    if (zeros != component_count(g)) o.fail(tag + ": zero count != components");
  }
  std::uniform_real_distribution<double> value(-20.0, 20.0);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> d(order(rng) + 1);
    for (auto& v : d) v = value(rng);
    if (d.size() > 4 && trial % 2 == 0) d[0] = d[1] = d[2];
    const auto s = eigenvalues_sym(planted(d, rng));
    std::sort(d.begin(), d.end());
    worst = std::max(worst, max_dev(d, s.values()));
  }
  if (worst > 1e-8) o.fail("planted spectrum dev " + fmt(worst));
  if (o.pass) o.detail = "1000 random graphs, 200 planted spectra (max dev " + fmt(worst) + ")";
  return o;
}

// 6: exhaustive scans through the CLI.
Outcome exhaustive_scans() {
  Outcome o;
  const auto out6 = g_scratch / "scan6.jsonl";
  auto t0 = Clock::now();
  if (run_cli("scan --n 6 --threads 1", out6) != 0) o.fail("scan --n 6 exit code");
  const double t6 = seconds_since(t0);
  if (t6 >= 60.0) o.fail("scan --n 6 took " + fmt(t6) + " s");
  bool kk = false, k6 = false;
  for (const auto& j : read_json_lines(out6)) {
    if (j["type"] != "finding") continue;
    const auto fp = j["fingerprint"].get<std::vector<double>>();
    if (fp == std::vector<double>{0, 1, 3, 4, 4, 6}) kk = true;
    if (fp == std::vector<double>{0, 6, 6, 6, 6, 6} && j["cospectral_with_complete"] == true) k6 = true;
  }
  if (!kk) o.fail("scan --n 6 lacks {0,1,3,4,4,6}");
  if (!k6) o.fail("scan --n 6 lacks K6 flagged cospectral_with_complete");

  const auto out7 = g_scratch / "scan7.jsonl";
  t0 = Clock::now();
  if (run_cli("scan --n 7", out7) != 0) o.fail("scan --n 7 exit code");
  const double t7 = seconds_since(t0);
  if (t7 >= 15 * 60.0) o.fail("scan --n 7 took " + fmt(t7) + " s");
  std::size_t findings = 0;
  for (const auto& j : read_json_lines(out7)) {
    if (j["type"] != "finding") continue;
    ++findings;
    if (std::abs(j["energy"].get<double>() - 12.0) > 1e-6) o.fail("scan --n 7 finding off target");
  }
  if (findings == 0) o.fail("scan --n 7 found nothing");
  if (o.pass) {
    o.detail = "n=6 in " + fmt(t6) + " s, n=7 in " + fmt(t7) + " s (" +
               std::to_string(findings) + " fingerprints)";
  }
  return o;
}

// 7: graph6 codec against the independent decoder.
Outcome graph6_codec() {
  Outcome o;
  auto oracle_graph = [](const std::string& line) {
    const auto d = oracle::decode_graph6(line);
    std::vector<Edge> edges;
    for (auto [i, j] : d.edges) edges.emplace_back(i, j);
    return build_graph(static_cast<std::size_t>(d.n), edges, kGraph6MaxOrder);
  };
  std::size_t graphs = 0;
  std::size_t mismatches = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * (n - 1) / 2)); ++code) {
      const auto g = Graph::from_pair_code(n, code);
      const auto line = write_graph6(g);
      ++graphs;
      if (!(parse_graph6(line) == g) || !(oracle_graph(line) == g)) ++mismatches;
    }
  }
  if (mismatches) o.fail(std::to_string(mismatches) + " round-trip mismatches");
  const std::pair<const char*, Graph> known[] = {
      {"A_", complete_graph(2)}, {"Bw", complete_graph(3)}, {"D??", empty_graph(5)}};
  for (const auto& [line, g] : known) {
    if (!(oracle_graph(line) == g)) o.fail(std::string("oracle disagrees on ") + line);
    if (!(parse_graph6(line) == g)) o.fail(std::string("parse disagrees on ") + line);
    if (write_graph6(g) != line) o.fail(std::string("write disagrees on ") + line);
  }
  if (o.pass) o.detail = std::to_string(graphs) + " labeled graphs, 0 mismatches";
  return o;
}

// 8: verify --max-n 40 --max-ab 20 through the CLI.
Outcome cli_verify() {
  Outcome o;
  const auto report = g_scratch / "verify.jsonl";
  const auto stdout_copy = g_scratch / "verify.stdout";
  const int code = run_cli("verify --max-n 40 --max-ab 20 --json \"" + report.string() + "\"",
                           stdout_copy);
  if (code != 0) o.fail("exit code " + std::to_string(code));
  std::size_t checks = 0, failures = 0;
  bool summary_ok = false;
  for (const auto& j : read_json_lines(report)) {
    if (j["type"] == "check") {
      ++checks;
      if (j["status"] != "pass") ++failures;
    } else if (j["type"] == "summary") {
      summary_ok = j["failures"] == 0 && j["status"] == "pass";
    }
  }
  if (failures) o.fail(std::to_string(failures) + " failed checks");
  if (!summary_ok) o.fail("summary missing or failing");
  if (checks == 0) o.fail("empty report");
  if (o.pass) o.detail = std::to_string(checks) + " checks, 0 failures";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <lborder-cli> [scratch-dir]\n";
    return 2;
  }
  g_cli = fs::absolute(argv[1]);
  g_scratch = argc > 2 ? fs::path(argv[2]) : fs::temp_directory_path() / "lborder-acceptance";
  fs::create_directories(g_scratch);

  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"AC1 kkodot E_L = 4n-6 = E_L(K_2n-2), n=3..40", kkodot_borderenergetic},
      {"AC2 kkdot E_L = 4n-2, direct == join", kkdot_borderenergetic},
      {"AC3 mjc/mje equal E_NL, noncospectral, a,b=2..20", matching_joins_equal_energy},
      {"AC4 closed == composition == Jacobi, order <= 60", three_way_oracle},
      {"AC5 eigensolver properties", eigensolver_properties},
      {"AC6 exhaustive scans n=6, n=7", exhaustive_scans},
      {"AC7 graph6 codec", graph6_codec},
      {"AC8 verify --max-n 40 --max-ab 20", cli_verify},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << o.detail << std::endl;
    failed += o.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all acceptance criteria passed" : "acceptance FAILED") << '\n';
  return failed == 0 ? 0 : 1;
}
