#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lborder/graph.hpp"

namespace lborder {

enum class MatrixKind { adjacency, laplacian, normalized_laplacian };

// "A", "L", "NL"
std::string matrix_symbol(MatrixKind kind);
MatrixKind parse_matrix_symbol(const std::string& symbol);

// Dense real symmetric matrix. Writes go through set(), which updates both
// triangles so the stored entries stay exactly symmetric.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  std::size_t dim() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  void set(std::size_t i, std::size_t j, double v) {
    a_[i * n_ + j] = v;
    a_[j * n_ + i] = v;
  }

  double trace() const;
  double frobenius_norm() const;
  double off_diagonal_norm() const;

  // Row-major n*n entries.
  std::span<const double> data() const { return a_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

// Eigenvalues of a symmetric matrix, sorted ascending.
class FloatSpectrum {
 public:
  FloatSpectrum() = default;
  explicit FloatSpectrum(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  double min() const { return values_.front(); }
  double max() const { return values_.back(); }
  double sum() const;

 private:
  std::vector<double> values_;
};

// Adjacency: A(i,j) = 1 on edges. Laplacian: D - A. Normalized Laplacian:
// 1 on the diagonal for vertices of positive degree (0 for isolated
// vertices), -1/sqrt(d_i d_j) on edges.
SymMatrix graph_matrix(const Graph& g, MatrixKind kind);

struct JacobiOptions {
  // Stop once off(A) <= tolerance * ||A||_F.
  double tolerance = 1e-12;
  int max_sweeps = 100;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(int sweeps, double residual);
  int sweeps() const { return sweeps_; }
  // Off-diagonal Frobenius norm when the sweep cap was hit.
  double residual() const { return residual_; }

 private:
  int sweeps_;
  double residual_;
};

// Cyclic Jacobi rotations. Throws ConvergenceError after max_sweeps.
FloatSpectrum eigenvalues_sym(const SymMatrix& m, const JacobiOptions& opts = {});

inline FloatSpectrum graph_spectrum(const Graph& g, MatrixKind kind) {
  return eigenvalues_sym(graph_matrix(g, kind));
}

}  // namespace lborder
