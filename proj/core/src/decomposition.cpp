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

#include "eframe/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eframe/errors.hpp"

namespace eframe {

DecompositionResult three_unitary_decomposition(const EFrameSystem& sys,
                                                double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw BadEpsilon("epsilon must lie in (0, 1), got " +
                     std::to_string(epsilon));
  }
  const Index d = sys.dim();
  if (sys.size() != d) {
    throw ShapeMismatch("decomposition needs N == d, got N = " +
                        std::to_string(sys.size()) + ", d = " +
                        std::to_string(d));
  }
  if (!sys.is_frame()) {
    throw NotAFrame("system is not an E-frame");
  }
  const Tolerances& tol = sys.tolerances();
  const MatrixMap& e = sys.map();
  const EONB g = e_onb_from_onb(VectorSequence::standard_basis(d), e, tol);

  DecompositionResult out;
  out.epsilon = epsilon;
  // (E{g})_n = e_n, so T = T_E phi has the h_n as columns.
  out.t = sys.transformed().columns();
  const double t_norm = operator_norm(out.t);
  out.scale = t_norm / (1.0 - epsilon);

  const Matrix identity = Matrix::Identity(d, d);
  out.d = 0.5 * identity + ((1.0 - epsilon) / (2.0 * t_norm)) * out.t;

  const PolarFactors polar = polar_decompose(out.d, tol);
  out.v = polar.unitary;
  const Matrix& p = polar.positive;
  // ||P|| = ||D|| <= 1 - eps/2, so I - P^2 is positive definite.
  const Matrix q = hermitian_sqrt(hermitian_part(identity - p * p), tol);
  out.w = p + Scalar(0.0, 1.0) * q;

  const Matrix vw = out.v * out.w;
  const Matrix vw_adj = out.v * out.w.adjoint();
  const Matrix& raw = g.raw.columns();
  out.bases[0] = make_eonb(VectorSequence(vw * raw), e);
  out.bases[1] = make_eonb(VectorSequence(vw_adj * raw), e);
  out.bases[2] = make_eonb(VectorSequence(-raw), e);
  return out;
}

DecompositionResiduals decomposition_residuals(const EFrameSystem& sys,
                                               const DecompositionResult& r) {
  const Index d = r.d.rows();
  const Matrix identity = Matrix::Identity(d, d);
  DecompositionResiduals out;
  out.identity_gap = operator_norm(identity - r.d);
  out.polar = operator_norm(r.d - r.v * (r.w + r.w.adjoint()) * 0.5);
  out.v_unitarity = operator_norm(r.v.adjoint() * r.v - identity);
  out.w_unitarity = operator_norm(r.w.adjoint() * r.w - identity);

  Matrix sum = Matrix::Zero(d, sys.size());
  for (const EONB& b : r.bases) sum += b.transformed.columns();
  const Matrix gap = sys.transformed().columns() - r.scale * sum;
  out.reconstruction = gap.size() ? gap.colwise().norm().maxCoeff() : 0.0;

  const Tolerances& tol = sys.tolerances();
  for (std::size_t i = 0; i < r.bases.size(); ++i) {
    out.basis_orthonormality[i] =
        e_onb_check(r.bases[i], tol).orthonormality_residual;
  }
  return out;
}

}  // namespace eframe
