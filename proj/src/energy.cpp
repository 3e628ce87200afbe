#include "lborder/energy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lborder {

double m_energy(std::span<const double> spectrum, double trace, std::size_t n) {
  if (n == 0) throw std::invalid_argument("m_energy: order must be positive");
  if (spectrum.size() != n) {
    throw std::invalid_argument("m_energy: spectrum has " + std::to_string(spectrum.size()) +
                                " values for order " + std::to_string(n));
  }
  const double center = trace / static_cast<double>(n);
  double e = 0.0;
  for (double v : spectrum) e += std::abs(v - center);
  return e;
}

Rational exact_energy(const RationalSpectrum& spectrum, const Rational& center) {
  Rational e = 0;
  for (const auto& entry : spectrum.entries()) {
    e += abs(entry.value - center) * entry.multiplicity;
  }
  return e;
}

namespace {

bool near_border(double energy, std::size_t n) {
  return std::abs(energy - (2.0 * static_cast<double>(n) - 2.0)) <= kBorderTolerance;
}

std::vector<double> complete_laplacian(std::size_t n) {
  std::vector<double> s(n, static_cast<double>(n));
  s[0] = 0.0;
  return s;
}

void set_verdicts(EnergyReport& r, std::span<const double> spectrum) {
  if (r.kind == MatrixKind::adjacency) {
    r.borderenergetic = near_border(r.energy, r.order);
  } else if (r.kind == MatrixKind::laplacian) {
    r.l_borderenergetic = near_border(r.energy, r.order);
    r.cospectral_with_complete =
        cospectral(spectrum, complete_laplacian(r.order), kSpectrumTolerance);
  }
}

}  // namespace

EnergyReport energy_report(const Graph& g, MatrixKind kind) {
  const auto m = graph_matrix(g, kind);
  const auto spectrum = eigenvalues_sym(m);
  const std::size_t n = g.order();

  EnergyReport r;
  r.kind = kind;
  r.order = n;
  const double trace =
      kind == MatrixKind::normalized_laplacian ? static_cast<double>(n) : m.trace();
  r.center = trace / static_cast<double>(n);
  r.energy = m_energy(spectrum.values(), trace, n);
  if (kind == MatrixKind::laplacian) r.exact_center = degree_stats(g).average;
  if (kind == MatrixKind::normalized_laplacian) r.exact_center = Rational(1);
  if (kind == MatrixKind::adjacency) r.exact_center = Rational(0);
  set_verdicts(r, spectrum.values());
  return r;
}

EnergyReport adjacency_energy(const Graph& g) { return energy_report(g, MatrixKind::adjacency); }
EnergyReport laplacian_energy(const Graph& g) { return energy_report(g, MatrixKind::laplacian); }
EnergyReport normalized_laplacian_energy(const Graph& g) {
  return energy_report(g, MatrixKind::normalized_laplacian);
}

EnergyReport family_energy_report(const FamilyId& id, MatrixKind kind) {
  const auto spectrum = family_spectrum(id, kind);
  auto r = energy_report(family(id), kind);
  const Rational center = kind == MatrixKind::laplacian
                              ? spectrum.sum() / static_cast<long long>(spectrum.order())
                              : Rational(1);
  r.exact_center = center;
  r.exact_energy = exact_energy(spectrum, center);
  return r;
}

Rational closed_energy_formula(const FamilyId& id) {
  id.validate();
  switch (id.kind) {
    case FamilyKind::kk_odot: return 4 * id.n - 6;
    case FamilyKind::kk_dot: return 4 * id.n - 2;
    case FamilyKind::match_join_complete:
    case FamilyKind::match_join_empty:
      return make_rational(2 * id.a + 2 * id.b, id.b + 1);
    default:
      break;
  }
  throw std::invalid_argument("no closed energy formula for " + to_string(id));
}

bool cospectral(std::span<const double> s1, std::span<const double> s2, double tol) {
  return max_deviation(s1, s2) <= tol;
}

bool cospectral(const RationalSpectrum& s1, const RationalSpectrum& s2) { return s1 == s2; }

double max_deviation(std::span<const double> s1, std::span<const double> s2) {
  if (s1.size() != s2.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < s1.size(); ++i) worst = std::max(worst, std::abs(s1[i] - s2[i]));
  return worst;
}

}  // namespace lborder
