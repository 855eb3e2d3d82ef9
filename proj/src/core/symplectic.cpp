// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

#include "symplectic.hpp"

#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace brt {

namespace {

void require_length(int n, std::size_t size, const char* what) {
  if (n < 1 || size != static_cast<std::size_t>(4 * n)) {
    std::ostringstream msg;
    msg << what << " must have length 4n = " << 4 * n << ", got " << size;
    throw Error(ErrorCode::invalid_argument, msg.str());
  }
}

// J applied to a vector of C^{2n}.
ComplexVector apply_J(std::span<const std::complex<double>> v) {
  const std::size_t n = v.size() / 2;
  ComplexVector out(v.size());
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = -v[n + i];
    out[n + i] = v[i];
  }
  return out;
}

std::complex<double> hermitian(const ComplexVector& a, const ComplexVector& b) {
  std::complex<double> s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double max_deviation(const ComplexMatrix& a, const ComplexMatrix& b) {
  double worst = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  return worst;
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix t(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix t(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) t(c, r) = std::conj((*this)(r, c));
  return t;
}

ComplexVector ComplexMatrix::apply(std::span<const std::complex<double>> v) const {
  if (v.size() != dim_) throw Error(ErrorCode::invalid_argument, "matrix/vector size mismatch");
  ComplexVector out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    std::complex<double> s = 0.0;
    for (std::size_t c = 0; c < dim_; ++c) s += (*this)(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::invalid_argument, "matrix size mismatch");
  ComplexMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t k = 0; k < a.dim(); ++k)
      for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) += a(r, k) * b(k, c);
  return out;
}

ComplexMatrix symplectic_form_matrix(int n) {
  ComplexMatrix j(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    j(i, n + i) = -1.0;
    j(n + i, i) = 1.0;
  }
  return j;
}

double re_omega(int n, std::span<const double> x, std::span<const double> y) {
  require_length(n, x.size(), "x");
  require_length(n, y.size(), "y");
  // <x, Phi y> with Phi = diag(J, -J) on the (real, imaginary) halves and
  // J y = (-y_2, y_1) on each half.
  const std::size_t nn = static_cast<std::size_t>(n);
  const std::size_t half = 2 * nn;
  double s = 0.0;
  for (std::size_t i = 0; i < nn; ++i) {
    s += -x[i] * y[nn + i] + x[nn + i] * y[i];
    s -= -x[half + i] * y[half + nn + i] + x[half + nn + i] * y[half + i];
  }
  return s;
}

std::complex<double> omega(std::span<const std::complex<double>> x,
                           std::span<const std::complex<double>> y) {
  if (x.size() != y.size() || x.size() % 2 != 0) {
    throw Error(ErrorCode::invalid_argument, "omega needs two vectors of equal even length");
  }
  const std::size_t n = x.size() / 2;
  std::complex<double> s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[n + i] * y[i] - x[i] * y[n + i];
  return s;
}

ComplexVector to_complex(std::span<const double> x) {
  if (x.size() % 2 != 0) throw Error(ErrorCode::invalid_argument, "odd real dimension");
  const std::size_t half = x.size() / 2;
  ComplexVector out(half);
  for (std::size_t i = 0; i < half; ++i) out[i] = {x[i], x[half + i]};
  return out;
}

RealVector to_real(std::span<const std::complex<double>> x) {
  RealVector out(2 * x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = x[i].real();
    out[x.size() + i] = x[i].imag();
  }
  return out;
}

bool is_symplectic(const ComplexMatrix& g, double tol) {
  if (g.dim() == 0 || g.dim() % 2 != 0) {
    throw Error(ErrorCode::invalid_argument, "symplectic test needs a square matrix of even size");
  }
  const ComplexMatrix j = symplectic_form_matrix(static_cast<int>(g.dim() / 2));
  return max_deviation(g.transpose() * j * g, j) < tol;
}

bool is_unitary(const ComplexMatrix& g, double tol) {
  return max_deviation(g.adjoint() * g, ComplexMatrix::identity(g.dim())) < tol;
}

ComplexMatrix random_compact_symplectic(int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "rank n must be a positive integer");
  const std::size_t dim = static_cast<std::size_t>(2 * n);
  CounterStream rng(seed, 0);
  std::vector<ComplexVector> columns(dim);
  for (int k = 0; k < n; ++k) {
    ComplexVector v(dim);
    double norm = 0.0;
    do {
      for (auto& c : v) c = {rng.normal(), rng.normal()};
      // Two Gram-Schmidt passes keep the columns orthonormal to ~1e-15.
      for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i < k; ++i) {
          for (const std::size_t idx : {static_cast<std::size_t>(i), static_cast<std::size_t>(n + i)}) {
            const std::complex<double> proj = hermitian(columns[idx], v);
            for (std::size_t r = 0; r < dim; ++r) v[r] -= proj * columns[idx][r];
          }
        }
      }
      norm = std::sqrt(std::real(hermitian(v, v)));
    } while (norm < 1e-8);
    for (auto& c : v) c /= norm;
    ComplexVector conj_v(dim);
    for (std::size_t r = 0; r < dim; ++r) conj_v[r] = std::conj(v[r]);
    columns[static_cast<std::size_t>(k)] = v;
    columns[static_cast<std::size_t>(n + k)] = apply_J(conj_v);
  }
  ComplexMatrix g(dim);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t r = 0; r < dim; ++r) g(r, c) = columns[c][r];
  return g;
}

RealVector act(const ComplexMatrix& g, std::span<const double> x) {
  const ComplexVector z = to_complex(x);
  return to_real(g.apply(z));
}

}  // namespace brt
