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

#include "eframe/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eframe/errors.hpp"

namespace eframe {

void Tolerances::validate() const {
  if (!(rel_tol > 0.0) || !(rel_tol < 1.0)) {
    throw InvalidArgument("rel_tol must lie in (0, 1)");
  }
  if (!(rank_tol > 0.0)) throw InvalidArgument("rank_tol must be positive");
  if (!(orthonorm_tol > 0.0)) {
    throw InvalidArgument("orthonorm_tol must be positive");
  }
}

Scalar inner(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) {
    throw DimensionMismatch("inner product of vectors of length " +
                            std::to_string(x.size()) + " and " +
                            std::to_string(y.size()));
  }
  // Eigen's dot() conjugates its left operand.
  return y.dot(x);
}

VectorSequence::VectorSequence(Matrix columns)
    : columns_(std::move(columns)), sum_sq_norms_(columns_.squaredNorm()) {}

VectorSequence VectorSequence::from_vectors(const std::vector<Vector>& vectors) {
  if (vectors.empty()) {
    throw InvalidArgument("cannot infer the dimension of an empty sequence");
  }
  const Index d = vectors.front().size();
  Matrix columns(d, static_cast<Index>(vectors.size()));
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].size() != d) {
      throw DimensionMismatch("vector " + std::to_string(k) + " has length " +
                              std::to_string(vectors[k].size()) +
                              ", expected " + std::to_string(d));
    }
    columns.col(static_cast<Index>(k)) = vectors[k];
  }
  return VectorSequence(std::move(columns));
}

VectorSequence VectorSequence::standard_basis(Index dim) {
  return VectorSequence(Matrix::Identity(dim, dim));
}

double VectorSequence::direct_sum_norm() const {
  return std::sqrt(sum_sq_norms_);
}

bool is_diagonal(const Matrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (i != j && m(i, j) != Scalar(0.0)) return false;
    }
  }
  return true;
}

SpectralData spectral_data(const Matrix& m) {
  SpectralData out;
  out.hs_norm = m.norm();
  const Index k = std::min(m.rows(), m.cols());
  if (k == 0) return out;

  if (is_diagonal(m)) {
    const Eigen::VectorXd mags = m.diagonal().cwiseAbs();
    out.sigma_max = mags.maxCoeff();
    out.sigma_min = mags.minCoeff();
    return out;
  }

  Eigen::JacobiSVD<Matrix> svd(m);
  const Eigen::VectorXd& s = svd.singularValues();
  out.sigma_max = s(0);
  out.sigma_min = s(k - 1);
  return out;
}

double operator_norm(const Matrix& m) { return spectral_data(m).sigma_max; }

MatrixMap::MatrixMap(Matrix entries, const Tolerances& tol)
    : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw DimensionMismatch("matrix mapping must be square, got " +
                            std::to_string(entries_.rows()) + "x" +
                            std::to_string(entries_.cols()));
  }
  diagonal_ = is_diagonal(entries_);
  spectral_ = spectral_data(entries_);
  invertible_ = entries_.rows() > 0 &&
                spectral_.sigma_min > tol.rank_tol * spectral_.sigma_max;
}

MatrixMap MatrixMap::identity(Index n, const Tolerances& tol) {
  return MatrixMap(Matrix::Identity(n, n), tol);
}

MatrixMap MatrixMap::diagonal(const Vector& lambdas, const Tolerances& tol) {
  return MatrixMap(Matrix(lambdas.asDiagonal()), tol);
}

MatrixMap MatrixMap::inverse(const Tolerances& tol) const {
  if (!invertible_) {
    throw SingularMatrix("matrix mapping is not invertible (sigma_min = " +
                         std::to_string(spectral_.sigma_min) + ")");
  }
  if (diagonal_) {
    return MatrixMap::diagonal(entries_.diagonal().cwiseInverse(), tol);
  }
  return MatrixMap(entries_.partialPivLu().inverse(), tol);
}

VectorSequence apply_matrix_mapping(const MatrixMap& e,
                                    const VectorSequence& seq) {
  if (seq.size() != e.size()) {
    throw DimensionMismatch("sequence has " + std::to_string(seq.size()) +
                            " terms but the matrix mapping is " +
                            std::to_string(e.size()) + "x" +
                            std::to_string(e.size()));
  }
  // Column n of the result is sum_k E(n,k) f_k, i.e. F E^T.
  if (e.diagonal()) {
    return VectorSequence(seq.columns() * e.entries().diagonal().asDiagonal());
  }
  return VectorSequence(seq.columns() * e.entries().transpose());
}

Matrix hermitian_part(const Matrix& m) {
  return (m + m.adjoint()) * 0.5;
}

PolarFactors polar_decompose(const Matrix& d, const Tolerances& tol) {
  if (d.rows() != d.cols()) {
    throw DimensionMismatch("polar decomposition needs a square matrix");
  }
  Eigen::JacobiSVD<Matrix> svd(d, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  if (s.size() == 0 || !(s(s.size() - 1) > tol.rank_tol * s(0))) {
    throw SingularInput("polar decomposition of a singular matrix is not unique");
  }
  const Matrix& u = svd.matrixU();
  const Matrix& w = svd.matrixV();
  PolarFactors out;
  out.unitary = u * w.adjoint();
  out.positive = hermitian_part(w * s.cast<Scalar>().asDiagonal() * w.adjoint());
  return out;
}

Matrix hermitian_sqrt(const Matrix& p, const Tolerances& tol) {
  if (p.rows() != p.cols()) {
    throw DimensionMismatch("square root needs a square matrix");
  }
  if (p.size() == 0) return p;
  const double scale = operator_norm(p);
  const double asym = operator_norm(p - p.adjoint());
  if (asym > tol.orthonorm_tol * std::max(1.0, scale)) {
    throw NotPSD("matrix is not Hermitian (||P - P*|| = " +
                 std::to_string(asym) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitian_part(p));
  Eigen::VectorXd lambda = eig.eigenvalues();
  for (Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) < -tol.rank_tol * scale) {
      throw NotPSD("eigenvalue " + std::to_string(lambda(i)) +
                   " is negative beyond tolerance");
    }
    lambda(i) = std::sqrt(std::max(lambda(i), 0.0));
  }
  const Matrix& q = eig.eigenvectors();
  return hermitian_part(q * lambda.cast<Scalar>().asDiagonal() * q.adjoint());
}

}  // namespace eframe
