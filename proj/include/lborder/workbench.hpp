#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lborder/closed_form.hpp"
#include "lborder/graph.hpp"
#include "lborder/graph6.hpp"

namespace lborder {

// ---- verification harness --------------------------------------------------

inline constexpr const char* kCheckClosedVsNumeric = "closed-vs-numeric";
inline constexpr const char* kCheckClosedVsComposition = "closed-vs-composition";
inline constexpr const char* kCheckEnergyFormula = "energy-formula";
inline constexpr const char* kCheckNoncospectrality = "noncospectrality";

// Numeric energy must match the exact energy this closely.
inline constexpr double kEnergyTolerance = 1e-7;

struct CheckRecord {
  // "kkodot", "kkdot", "mjc", "mje", or "mjc/mje" for the paired check.
  std::string family;
  FamilyId id;
  std::string check;
  bool pass = false;
  std::optional<double> max_deviation;
  std::optional<bool> exact_equal;
  double elapsed_ms = 0.0;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckRecord> checks;
  bool aborted = false;
  std::string abort_reason;

  std::size_t failures() const;
  bool all_passed() const { return !aborted && failures() == 0; }
  // Distinct family instances (or pairs, for family "mjc/mje") checked.
  std::size_t instance_count(const std::string& family) const;
};

struct VerifyOptions {
  // Replaceable so tests can confirm that a wrong formula is reported.
  std::function<Rational(const FamilyId&)> energy_formula = closed_energy_formula;
};

// Checks kkodot(n), kkdot(n) for 3 <= n <= max_n and mjc(a,b), mje(a,b)
// for 2 <= a,b <= max_ab. Failures are recorded, never thrown.
VerificationReport verify_families(long max_n, long max_ab, const VerifyOptions& opts = {});

nlohmann::ordered_json to_json(const CheckRecord& c);
nlohmann::ordered_json summary_json(const VerificationReport& r);

// ---- L-borderenergetic scans -----------------------------------------------

inline constexpr std::size_t kMaxLabeledScanOrder = 7;
// Eigenvalues are rounded to multiples of 1/kFingerprintScale (1e-6) to
// form dedupe keys.
inline constexpr double kFingerprintScale = 1e6;

struct ScanFinding {
  std::string graph6;
  std::size_t order = 0;
  double energy = 0.0;
  std::vector<double> fingerprint;  // sorted L eigenvalues, rounded
  bool cospectral_with_complete = false;
  bool connected = false;
  // Graphs that shared this fingerprint; the first one is kept as witness.
  std::size_t count = 1;
};

// Returns the finding for g when E_L(g) is within kBorderTolerance of
// 2n - 2, otherwise nothing.
std::optional<ScanFinding> evaluate_candidate(const Graph& g);

struct ScanOptions {
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

// Every labeled graph on n vertices (1 <= n <= 7), deduplicated by
// fingerprint in order of first appearance.
std::vector<ScanFinding> scan_labeled(std::size_t n, const ScanOptions& opts = {});

struct CorpusIssue {
  std::size_t line_number = 0;
  std::string message;
  bool fatal = false;
};

struct CorpusScan {
  std::vector<ScanFinding> findings;
  std::vector<CorpusIssue> issues;
  std::size_t graphs_read = 0;
  std::size_t malformed_lines = 0;
  bool aborted = false;
};

// Strict mode stops at the first malformed line; lenient mode records it
// and continues.
CorpusScan scan_corpus(std::istream& in, const Graph6Options& opts = {});

nlohmann::ordered_json to_json(const ScanFinding& f);

}  // namespace lborder
