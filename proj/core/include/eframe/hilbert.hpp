// Copyright 2026 The eframe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "eframe/tolerances.hpp"

namespace eframe {

using Scalar = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

// <x, y> = sum_i x_i conj(y_i); linear in the first argument.
Scalar inner(const Vector& x, const Vector& y);

// A finite family {f_k}_{k=1}^N in C^d, standing in for an element of the
// direct sum of countably many copies of the Hilbert space (zero tail).
// Stored column-wise as a d x N matrix.
class VectorSequence {
 public:
  VectorSequence() = default;
  explicit VectorSequence(Matrix columns);

  // Throws DimensionMismatch if the vectors differ in length and
  // InvalidArgument if the list is empty (the dimension would be unknown).
  static VectorSequence from_vectors(const std::vector<Vector>& vectors);
  static VectorSequence standard_basis(Index dim);

  Index dim() const noexcept { return columns_.rows(); }
  Index size() const noexcept { return columns_.cols(); }

  auto operator[](Index k) const { return columns_.col(k); }
  const Matrix& columns() const noexcept { return columns_; }

  // sum_k ||f_k||^2, the squared norm in the direct sum.
  double sum_sq_norms() const noexcept { return sum_sq_norms_; }
  double direct_sum_norm() const;

 private:
  Matrix columns_;
  double sum_sq_norms_ = 0.0;
};

// Extreme singular values and the Hilbert-Schmidt (Frobenius) norm.
struct SpectralData {
  double sigma_max = 0.0;
  double sigma_min = 0.0;
  double hs_norm = 0.0;
};

// Works for rectangular input as well; sigma_min is then the smallest of the
// min(rows, cols) singular values. Exactly diagonal matrices take a fast path
// that reads the singular values off the diagonal.
SpectralData spectral_data(const Matrix& m);

double operator_norm(const Matrix& m);

bool is_diagonal(const Matrix& m);

// An N x N complex matrix acting on sequences by
//   (E{f})_n = sum_k E_{n,k} f_k.
// Spectral data and the invertibility certificate are computed once.
class MatrixMap {
 public:
  MatrixMap() = default;
  explicit MatrixMap(Matrix entries, const Tolerances& tol = {});

  static MatrixMap identity(Index n, const Tolerances& tol = {});
  static MatrixMap diagonal(const Vector& lambdas, const Tolerances& tol = {});

  const Matrix& entries() const noexcept { return entries_; }
  Index size() const noexcept { return entries_.rows(); }
  const SpectralData& spectral() const noexcept { return spectral_; }
  bool diagonal() const noexcept { return diagonal_; }

  // sigma_min > rank_tol * sigma_max.
  bool invertible() const noexcept { return invertible_; }

  // Throws SingularMatrix if !invertible().
  MatrixMap inverse(const Tolerances& tol = {}) const;

  // Entrywise complex conjugate, not the adjoint.
  Matrix conjugate() const { return entries_.conjugate(); }

 private:
  Matrix entries_;
  SpectralData spectral_;
  bool invertible_ = false;
  bool diagonal_ = false;
};

// Throws DimensionMismatch if seq.size() != e.size().
VectorSequence apply_matrix_mapping(const MatrixMap& e,
                                    const VectorSequence& seq);

struct PolarFactors {
  Matrix unitary;   // V
  Matrix positive;  // P = (D*D)^{1/2}
};

// D = V P via the SVD D = U S W*: V = U W*, P = W S W*.
// Throws SingularInput when sigma_min(D) <= rank_tol * sigma_max(D).
PolarFactors polar_decompose(const Matrix& d, const Tolerances& tol = {});

// Principal square root of a Hermitian positive semidefinite matrix.
// Eigenvalues in [-rank_tol*||P||, 0) are clamped to zero; anything more
// negative throws NotPSD. Input that is not Hermitian to within
// orthonorm_tol * max(1, ||P||) throws NotPSD as well.
Matrix hermitian_sqrt(const Matrix& p, const Tolerances& tol = {});

// (M + M*) / 2.
Matrix hermitian_part(const Matrix& m);

}  // namespace eframe
