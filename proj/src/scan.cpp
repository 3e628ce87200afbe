#include <algorithm>
#include <cmath>
#include <map>
#include <thread>

#include "lborder/energy.hpp"
#include "lborder/spectral.hpp"
#include "lborder/workbench.hpp"

namespace lborder {

namespace {

using FingerprintKey = std::vector<long long>;

FingerprintKey fingerprint_key(std::span<const double> values) {
  FingerprintKey key;
  key.reserve(values.size());
  for (double v : values) key.push_back(std::llround(v * kFingerprintScale));
  return key;
}

// Findings in order of first appearance, deduplicated by fingerprint.
class FindingSet {
 public:
  void add(ScanFinding f, FingerprintKey key) {
    auto [it, inserted] = index_.try_emplace(std::move(key), findings_.size());
    if (inserted) {
      findings_.push_back(std::move(f));
    } else {
      findings_[it->second].count += f.count;
    }
  }

  void merge(FindingSet&& other) {
    for (auto& f : other.findings_) {
      auto key = fingerprint_key(f.fingerprint);
      add(std::move(f), std::move(key));
    }
  }

  std::vector<ScanFinding> release() && { return std::move(findings_); }

 private:
  std::vector<ScanFinding> findings_;
  std::map<FingerprintKey, std::size_t> index_;
};

void scan_range(std::size_t n, std::uint64_t first, std::uint64_t last, FindingSet& out) {
  for (std::uint64_t code = first; code < last; ++code) {
    if (auto f = evaluate_candidate(Graph::from_pair_code(n, code))) {
      auto key = fingerprint_key(f->fingerprint);
      out.add(std::move(*f), std::move(key));
    }
  }
}

}  // namespace

std::optional<ScanFinding> evaluate_candidate(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return std::nullopt;
  const auto spectrum = eigenvalues_sym(graph_matrix(g, MatrixKind::laplacian));
  const double trace = 2.0 * static_cast<double>(g.edge_count());
  const double energy = m_energy(spectrum.values(), trace, n);
  if (std::abs(energy - (2.0 * static_cast<double>(n) - 2.0)) > kBorderTolerance) {
    return std::nullopt;
  }

  ScanFinding f;
  f.graph6 = write_graph6(g);
  f.order = n;
  f.energy = energy;
  f.fingerprint.reserve(n);
  for (double v : spectrum.values()) {
    f.fingerprint.push_back(static_cast<double>(std::llround(v * kFingerprintScale)) /
                            kFingerprintScale);
  }
  std::vector<double> complete(n, static_cast<double>(n));
  complete[0] = 0.0;
  f.cospectral_with_complete = cospectral(spectrum.values(), complete, kSpectrumTolerance);
  f.connected = is_connected(g);
  return f;
}

std::vector<ScanFinding> scan_labeled(std::size_t n, const ScanOptions& opts) {
  if (n < 1 || n > kMaxLabeledScanOrder) {
    throw std::invalid_argument("scan_labeled: order must be in 1.." +
                                std::to_string(kMaxLabeledScanOrder) +
                                "; use a graph6 corpus scan for larger orders");
  }
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  unsigned threads = opts.threads != 0 ? opts.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, total));

  std::vector<FindingSet> parts(threads);
  auto bounds = [&](unsigned t) { return total * t / threads; };
  if (threads == 1) {
    scan_range(n, 0, total, parts[0]);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] { scan_range(n, bounds(t), bounds(t + 1), parts[t]); });
    }
  }

  FindingSet merged;
  for (auto& part : parts) merged.merge(std::move(part));
  return std::move(merged).release();
}

CorpusScan scan_corpus(std::istream& in, const Graph6Options& opts) {
  CorpusScan result;
  FindingSet findings;
  Graph6Reader reader(in, opts);
  while (auto rec = reader.next()) {
    for (const auto& w : rec->warnings) result.issues.push_back({rec->line_number, w, false});
    if (!rec->graph) {
      ++result.malformed_lines;
      result.issues.push_back({rec->line_number, rec->error, opts.strict});
      if (opts.strict) {
        result.aborted = true;
        break;
      }
      continue;
    }
    ++result.graphs_read;
    if (auto f = evaluate_candidate(*rec->graph)) {
      auto key = fingerprint_key(f->fingerprint);
      findings.add(std::move(*f), std::move(key));
    }
  }
  result.findings = std::move(findings).release();
  return result;
}

nlohmann::ordered_json to_json(const ScanFinding& f) {
  nlohmann::ordered_json j;
  j["type"] = "finding";
  j["graph6"] = f.graph6;
  j["n"] = f.order;
  j["energy"] = f.energy;
  j["fingerprint"] = f.fingerprint;
  j["cospectral_with_complete"] = f.cospectral_with_complete;
  j["connected"] = f.connected;
  j["count"] = f.count;
  return j;
}

}  // namespace lborder
