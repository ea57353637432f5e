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

#include "eframe/basis.hpp"

#include <sstream>
#include <string>

#include "eframe/errors.hpp"

namespace eframe {

EOnbCheck e_onb_check(const EONB& basis, const Tolerances& tol) {
  const Matrix& h = basis.transformed.columns();
  EOnbCheck out;
  out.spans = h.rows() == h.cols();
  const Matrix gram = h.adjoint() * h;
  const Matrix gap = gram - Matrix::Identity(gram.rows(), gram.cols());
  out.orthonormality_residual = gap.size() ? gap.cwiseAbs().maxCoeff() : 0.0;
  out.pass = out.spans && out.orthonormality_residual <= tol.orthonorm_tol;
  return out;
}

EONB make_eonb(const VectorSequence& raw, const MatrixMap& e) {
  return EONB{raw, apply_matrix_mapping(e, raw)};
}

EONB e_onb_from_onb(const VectorSequence& onb, const MatrixMap& e,
                    const Tolerances& tol) {
  if (onb.size() != onb.dim()) {
    throw NotOrthonormal("an orthonormal basis of C^" +
                         std::to_string(onb.dim()) + " has exactly " +
                         std::to_string(onb.dim()) + " vectors");
  }
  const Matrix gram = onb.columns().adjoint() * onb.columns();
  const double residual =
      (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
  if (residual > tol.orthonorm_tol) {
    std::ostringstream msg;
    msg << "Gram residual " << residual << " exceeds orthonorm_tol "
        << tol.orthonorm_tol;
    throw NotOrthonormal(msg.str());
  }
  if (onb.size() != e.size()) {
    throw DimensionMismatch("basis length does not match the matrix mapping");
  }
  if (!e.invertible()) {
    throw SingularMatrix("E is not invertible");
  }
  // g = E^{-1}{e_k}: column n of G is sum_k (E^{-1})_{n,k} e_k, so
  // G^T = E^{-1} O^T.
  const Matrix g =
      e.entries().partialPivLu().solve(onb.columns().transpose()).transpose();
  return make_eonb(VectorSequence(g), e);
}

CoefficientVector expansion_coefficients(const EONB& basis, const Vector& f) {
  if (f.size() != basis.transformed.dim()) {
    throw DimensionMismatch("vector length does not match the basis");
  }
  return basis.transformed.columns().adjoint() * f;
}

Vector expand(const EONB& basis, const CoefficientVector& c) {
  if (c.size() != basis.transformed.size()) {
    throw DimensionMismatch("coefficient count does not match the basis");
  }
  return basis.transformed.columns() * c;
}

}  // namespace eframe
