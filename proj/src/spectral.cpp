#include "lborder/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace lborder {

std::string matrix_symbol(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::adjacency: return "A";
    case MatrixKind::laplacian: return "L";
    case MatrixKind::normalized_laplacian: return "NL";
  }
  return "?";
}

MatrixKind parse_matrix_symbol(const std::string& symbol) {
  if (symbol == "A") return MatrixKind::adjacency;
  if (symbol == "L") return MatrixKind::laplacian;
  if (symbol == "NL") return MatrixKind::normalized_laplacian;
  throw std::invalid_argument("unknown matrix kind '" + symbol +
                              "' (expected A, L or NL)");
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += a_[i * n_ + i];
  return t;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

double SymMatrix::off_diagonal_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) s += 2.0 * a_[i * n_ + j] * a_[i * n_ + j];
  return std::sqrt(s);
}

FloatSpectrum::FloatSpectrum(std::vector<double> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
}

double FloatSpectrum::sum() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0);
}

SymMatrix graph_matrix(const Graph& g, MatrixKind kind) {
  const std::size_t n = g.order();
  if (n == 0) throw std::invalid_argument("graph_matrix: graph has no vertices");
  SymMatrix m(n);
  const auto deg = g.degrees();
  switch (kind) {
    case MatrixKind::adjacency:
      for (const auto& [i, j] : g.edges()) m.set(i, j, 1.0);
      break;
    case MatrixKind::laplacian:
      for (std::size_t i = 0; i < n; ++i) m.set(i, i, static_cast<double>(deg[i]));
      for (const auto& [i, j] : g.edges()) m.set(i, j, -1.0);
      break;
    case MatrixKind::normalized_laplacian:
      for (std::size_t i = 0; i < n; ++i) m.set(i, i, deg[i] > 0 ? 1.0 : 0.0);
      for (const auto& [i, j] : g.edges()) {
        m.set(i, j, -1.0 / std::sqrt(static_cast<double>(deg[i]) *
                                     static_cast<double>(deg[j])));
      }
      break;
  }
  return m;
}

namespace {

std::string convergence_message(int sweeps, double residual) {
  std::ostringstream msg;
  msg << "Jacobi eigensolver did not converge after " << sweeps
      << " sweeps (off-diagonal norm " << residual << ")";
  return msg.str();
}

}  // namespace

ConvergenceError::ConvergenceError(int sweeps, double residual)
    : std::runtime_error(convergence_message(sweeps, residual)),
      sweeps_(sweeps),
      residual_(residual) {}

FloatSpectrum eigenvalues_sym(const SymMatrix& m, const JacobiOptions& opts) {
  const std::size_t n = m.dim();
  std::vector<double> a(m.data().begin(), m.data().end());
  auto at = [&a, n](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  const double target = opts.tolerance * m.frobenius_norm();
  auto off = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * at(i, j) * at(i, j);
    return std::sqrt(s);
  };

  double residual = off();
  int sweep = 0;
  while (residual > target) {
    if (sweep == opts.max_sweeps) throw ConvergenceError(sweep, residual);
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double app = at(p, p);
        const double aqq = at(q, q);
        // Skip rotations that cannot change either diagonal entry.
        if (sweep > 3 && std::abs(apq) < 1e-18 * (std::abs(app) + std::abs(aqq))) {
          at(p, q) = at(q, p) = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = at(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = at(k, p);
          const double akq = at(k, q);
          const double new_kp = akp - s * (akq + tau * akp);
          const double new_kq = akq + s * (akp - tau * akq);
          at(k, p) = at(p, k) = new_kp;
          at(k, q) = at(q, k) = new_kq;
        }
      }
    }
    residual = off();
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
  return FloatSpectrum(std::move(eig));
}

}  // namespace lborder
