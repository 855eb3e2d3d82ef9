// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "sampling.hpp"

namespace brt {

// Coordinates: a point X = (X_1, X_2) of C^{2n}, X_1, X_2 in C^n, is stored
// in R^{4n} as (Re X_1, Re X_2, Im X_1, Im X_2). The complex symplectic form
// is w(X, Y) = <X_2, Y_1> - <X_1, Y_2> (bilinear, no conjugation), and in
// real coordinates Re w(X, Y) = <X, Phi Y> with Phi = diag(J, -J).

using ComplexVector = std::vector<std::complex<double>>;

/// Square complex matrix, row-major.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t dim = 0)
      : dim_(dim), data_(dim * dim, std::complex<double>(0.0, 0.0)) {}

  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::complex<double>& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const std::complex<double>& operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }

  ComplexMatrix transpose() const;
  ComplexMatrix adjoint() const;
  ComplexVector apply(std::span<const std::complex<double>> v) const;

 private:
  std::size_t dim_;
  std::vector<std::complex<double>> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// J = [[0, -I_n], [I_n, 0]].
ComplexMatrix symplectic_form_matrix(int n);

/// Re w(x, y) for x, y in R^{4n}. Throws Error(invalid_argument) on length
/// mismatch.
double re_omega(int n, std::span<const double> x, std::span<const double> y);

/// w(X, Y) in complex coordinates.
std::complex<double> omega(std::span<const std::complex<double>> x,
                           std::span<const std::complex<double>> y);

ComplexVector to_complex(std::span<const double> x);
RealVector to_real(std::span<const std::complex<double>> x);

/// max |(g^T J g - J)_ij| < tol. Throws Error(invalid_argument) for odd size.
bool is_symplectic(const ComplexMatrix& g, double tol);

/// max |(g^* g - I)_ij| < tol.
bool is_unitary(const ComplexMatrix& g, double tol);

/// Haar-random element of Sp(n) = Sp(2n, C) cap U(2n).
///
/// Columns are built in pairs (c_k, J conj(c_k)) by Gram-Schmidt on complex
/// Gaussian vectors; this is Gram-Schmidt over the quaternions, and the pair
/// structure is exactly the condition g J = J conj(g) for unitary g.
ComplexMatrix random_compact_symplectic(int n, std::uint64_t seed);

/// g acting on a point of R^{4n} through its complex coordinates.
RealVector act(const ComplexMatrix& g, std::span<const double> x);

}  // namespace brt
