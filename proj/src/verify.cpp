#include <chrono>
#include <cmath>
#include <new>
#include <set>

#include "lborder/energy.hpp"
#include "lborder/spectral.hpp"
#include "lborder/workbench.hpp"

namespace lborder {

std::size_t VerificationReport::failures() const {
  std::size_t f = 0;
  for (const auto& c : checks) f += c.pass ? 0 : 1;
  return f;
}

std::size_t VerificationReport::instance_count(const std::string& family) const {
  std::set<std::string> seen;
  for (const auto& c : checks)
    if (c.family == family) seen.insert(to_string(c.id));
  return seen.size();
}

namespace {

using Clock = std::chrono::steady_clock;

class Harness {
 public:
  Harness(VerificationReport& report, const VerifyOptions& opts)
      : report_(report), opts_(opts) {}

  // Runs `body`, which fills in pass/deviation/detail; exceptions become a
  // failed record.
  template <typename Body>
  void check(const std::string& family, const FamilyId& id, const char* name, Body&& body) {
    CheckRecord rec;
    rec.family = family;
    rec.id = id;
    rec.check = name;
    const auto start = Clock::now();
    try {
      body(rec);
    } catch (const std::bad_alloc&) {
      throw;
    } catch (const std::exception& e) {
      rec.pass = false;
      rec.detail = std::string("exception: ") + e.what();
    }
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    report_.checks.push_back(std::move(rec));
  }

  // Checks (i)-(iii) for one family instance. Returns the closed-form
  // spectrum and numeric spectrum for the pairing check.
  struct Spectra {
    std::optional<RationalSpectrum> exact;
    std::optional<FloatSpectrum> numeric;
    std::optional<Rational> energy;
  };

  Spectra instance(const FamilyId& id, MatrixKind kind) {
    const auto family_label = family_name(id.kind);
    Spectra out;
    check(family_label, id, kCheckClosedVsNumeric, [&](CheckRecord& rec) {
      out.exact = family_spectrum(id, kind);
      out.numeric = graph_spectrum(family(id), kind);
      const double dev = max_deviation(out.exact->to_doubles(), out.numeric->values());
      rec.max_deviation = dev;
      rec.pass = dev <= kSpectrumTolerance;
      if (!rec.pass) rec.detail = "closed form " + to_string(*out.exact);
    });
    check(family_label, id, kCheckClosedVsComposition, [&](CheckRecord& rec) {
      const auto closed = out.exact ? *out.exact : family_spectrum(id, kind);
      const auto composed = composition_spectrum(id, kind);
      rec.exact_equal = closed == composed;
      rec.pass = *rec.exact_equal;
      if (!rec.pass) rec.detail = to_string(closed) + " != " + to_string(composed);
    });
    check(family_label, id, kCheckEnergyFormula, [&](CheckRecord& rec) {
      const auto closed = out.exact ? *out.exact : family_spectrum(id, kind);
      const auto n = static_cast<long long>(closed.order());
      const Rational center =
          kind == MatrixKind::laplacian ? closed.sum() / n : Rational(1);
      const Rational exact = exact_energy(closed, center);
      const Rational formula = opts_.energy_formula(id);
      out.energy = exact;
      rec.exact_equal = exact == formula;
      rec.pass = *rec.exact_equal;
      rec.detail = "exact " + to_string(exact) + ", formula " + to_string(formula);

      if (kind == MatrixKind::laplacian) {
        // L-borderenergetic: same energy as K_n, namely 2n - 2.
        const Rational complete = exact_energy(
            base_spectrum(FamilyId::complete(static_cast<long>(n)), MatrixKind::laplacian),
            n - 1);
        const bool border = exact == complete && exact == 2 * n - 2;
        rec.pass = rec.pass && border;
        rec.detail += ", E_L(K_" + std::to_string(n) + ") " + to_string(complete);
      }
      if (out.numeric) {
        const auto values = out.numeric->values();
        const double trace = kind == MatrixKind::laplacian ? to_double(closed.sum())
                                                           : static_cast<double>(n);
        const double numeric = m_energy(values, trace, values.size());
        const double dev = std::abs(numeric - to_double(exact));
        rec.max_deviation = dev;
        rec.pass = rec.pass && dev <= kEnergyTolerance;
      }
    });
    return out;
  }

 private:
  VerificationReport& report_;
  const VerifyOptions& opts_;
};

}  // namespace

VerificationReport verify_families(long max_n, long max_ab, const VerifyOptions& opts) {
  if (max_n < 3) throw std::invalid_argument("verify_families: max_n must be >= 3");
  if (max_ab < 2) throw std::invalid_argument("verify_families: max_ab must be >= 2");

  VerificationReport report;
  Harness h(report, opts);
  try {
    for (const auto kind : {FamilyKind::kk_odot, FamilyKind::kk_dot}) {
      for (long n = 3; n <= max_n; ++n) {
        const FamilyId id{kind, n, 0, 0};
        const auto spectra = h.instance(id, MatrixKind::laplacian);
        h.check(family_name(kind), id, kCheckNoncospectrality, [&](CheckRecord& rec) {
          const auto order = static_cast<long>(id.order());
          const auto complete = base_spectrum(FamilyId::complete(order), MatrixKind::laplacian);
          const auto closed = spectra.exact ? *spectra.exact : family_spectrum(id, MatrixKind::laplacian);
          const bool exact_distinct = !cospectral(closed, complete);
          rec.exact_equal = !exact_distinct;
          rec.pass = exact_distinct;
          if (spectra.numeric) {
            const double gap = max_deviation(spectra.numeric->values(), complete.to_doubles());
            rec.max_deviation = gap;
            rec.pass = rec.pass && gap > kSpectrumTolerance;
          }
          rec.detail = "compared with K_" + std::to_string(order);
        });
      }
    }

    for (long a = 2; a <= max_ab; ++a) {
      for (long b = 2; b <= max_ab; ++b) {
        const auto with_complete = FamilyId::match_join_complete(a, b);
        const auto with_empty = FamilyId::match_join_empty(a, b);
        const auto s1 = h.instance(with_complete, MatrixKind::normalized_laplacian);
        const auto s2 = h.instance(with_empty, MatrixKind::normalized_laplacian);
        h.check("mjc/mje", with_complete, kCheckNoncospectrality, [&](CheckRecord& rec) {
          const auto x = s1.exact ? *s1.exact
                                  : family_spectrum(with_complete, MatrixKind::normalized_laplacian);
          const auto y = s2.exact ? *s2.exact
                                  : family_spectrum(with_empty, MatrixKind::normalized_laplacian);
          const bool exact_distinct = !cospectral(x, y);
          const auto ex = exact_energy(x, 1);
          const auto ey = exact_energy(y, 1);
          rec.exact_equal = !exact_distinct;
          rec.pass = exact_distinct && ex == ey;
          if (s1.numeric && s2.numeric) {
            const double gap = max_deviation(s1.numeric->values(), s2.numeric->values());
            rec.max_deviation = gap;
            rec.pass = rec.pass && gap > kSpectrumTolerance;
          }
          rec.detail = "E_NL " + to_string(ex) + " vs " + to_string(ey);
        });
      }
    }
  } catch (const std::bad_alloc&) {
    report.aborted = true;
    report.abort_reason = "out of memory";
  }
  return report;
}

nlohmann::ordered_json to_json(const CheckRecord& c) {
  nlohmann::ordered_json j;
  j["type"] = "check";
  j["family"] = c.family;
  nlohmann::ordered_json params;
  if (c.id.kind == FamilyKind::kk_odot || c.id.kind == FamilyKind::kk_dot) {
    params["n"] = c.id.n;
  } else {
    params["a"] = c.id.a;
    params["b"] = c.id.b;
  }
  j["params"] = params;
  j["check"] = c.check;
  j["status"] = c.pass ? "pass" : "fail";
  j["max_deviation"] = c.max_deviation ? nlohmann::ordered_json(*c.max_deviation)
                                       : nlohmann::ordered_json(nullptr);
  j["exact_equal"] = c.exact_equal ? nlohmann::ordered_json(*c.exact_equal)
                                   : nlohmann::ordered_json(nullptr);
  j["elapsed_ms"] = c.elapsed_ms;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

nlohmann::ordered_json summary_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["type"] = "summary";
  j["checks"] = r.checks.size();
  j["failures"] = r.failures();
  j["aborted"] = r.aborted;
  if (r.aborted) j["abort_reason"] = r.abort_reason;
  nlohmann::ordered_json counts;
  for (const char* f : {"kkodot", "kkdot", "mjc", "mje", "mjc/mje"})
    counts[f] = r.instance_count(f);
  j["instances"] = counts;
  j["status"] = r.all_passed() ? "pass" : "fail";
  return j;
}

}  // namespace lborder
