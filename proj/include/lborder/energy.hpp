#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "lborder/closed_form.hpp"
#include "lborder/graph.hpp"
#include "lborder/spectral.hpp"

namespace lborder {

// Absolute tolerance for the numeric energy == 2n - 2 verdicts.
inline constexpr double kBorderTolerance = 1e-6;
// Sorted-eigenvalue tolerance for numeric cospectrality.
inline constexpr double kSpectrumTolerance = 1e-8;

struct EnergyReport {
  MatrixKind kind = MatrixKind::laplacian;
  std::size_t order = 0;

  double center = 0.0;
  double energy = 0.0;
  std::optional<Rational> exact_center;
  std::optional<Rational> exact_energy;

  // Adjacency only: E(G) = 2n - 2.
  std::optional<bool> borderenergetic;
  // Laplacian only: E_L(G) = 2n - 2, and whether G is L-cospectral with K_n
  // (the trivial witness).
  std::optional<bool> l_borderenergetic;
  std::optional<bool> cospectral_with_complete;
};

// Sum of |lambda_i - trace/n|. Throws when n == 0 or n != spectrum size.
double m_energy(std::span<const double> spectrum, double trace, std::size_t n);

// Sum of multiplicity * |value - center|.
Rational exact_energy(const RationalSpectrum& spectrum, const Rational& center);

// Numeric reports from the Jacobi spectrum of the graph's matrix. The
// normalized Laplacian is centered at 1, the others at trace/n.
EnergyReport adjacency_energy(const Graph& g);
EnergyReport laplacian_energy(const Graph& g);
EnergyReport normalized_laplacian_energy(const Graph& g);
EnergyReport energy_report(const Graph& g, MatrixKind kind);

// Report for a family carrying both the exact closed-form energy and the
// numeric energy of the constructed graph.
EnergyReport family_energy_report(const FamilyId& id, MatrixKind kind);

// kkodot(n) -> 4n - 6, kkdot(n) -> 4n - 2, mjc/mje(a,b) -> (2a + 2b)/(b + 1).
Rational closed_energy_formula(const FamilyId& id);

// Same length and elementwise |a_i - b_i| <= tol on sorted inputs.
bool cospectral(std::span<const double> s1, std::span<const double> s2, double tol);
bool cospectral(const RationalSpectrum& s1, const RationalSpectrum& s2);

// Largest |a_i - b_i|; infinity when the lengths differ.
double max_deviation(std::span<const double> s1, std::span<const double> s2);

}  // namespace lborder
