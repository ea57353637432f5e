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

#include "eframe/frame.hpp"

#include <algorithm>
#include <string>

#include "eframe/errors.hpp"

namespace eframe {

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
  if (m.size() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitian_part(m),
                                            Eigen::EigenvaluesOnly);
  return eig.eigenvalues();
}

EFrameSystem::EFrameSystem(VectorSequence seq, MatrixMap e,
                           const Tolerances& tol)
    : seq_(std::move(seq)), map_(std::move(e)), tol_(tol) {
  transformed_ = apply_matrix_mapping(map_, seq_);
  const Matrix& h = transformed_.columns();
  frame_op_ = hermitian_part(h * h.adjoint());
  const Eigen::VectorXd lambda = hermitian_eigenvalues(frame_op_);
  if (lambda.size() > 0) {
    spectrum_ = {lambda(0), lambda(lambda.size() - 1)};
  }
}

EFrameSystem EFrameSystem::classical(VectorSequence seq,
                                     const Tolerances& tol) {
  const Index n = seq.size();
  return EFrameSystem(std::move(seq), MatrixMap::identity(n, tol), tol);
}

bool EFrameSystem::is_frame() const noexcept {
  return dim() > 0 && spectrum_.max > 0.0 &&
         spectrum_.min > tol_.rank_tol * spectrum_.max;
}

Vector synthesis(const EFrameSystem& sys, const CoefficientVector& c) {
  if (c.size() != sys.size()) {
    throw DimensionMismatch("synthesis expects " + std::to_string(sys.size()) +
                            " coefficients, got " + std::to_string(c.size()));
  }
  return sys.transformed().columns() * c;
}

CoefficientVector analysis(const EFrameSystem& sys, const Vector& f) {
  if (f.size() != sys.dim()) {
    throw DimensionMismatch("analysis expects a vector of length " +
                            std::to_string(sys.dim()) + ", got " +
                            std::to_string(f.size()));
  }
  // (H^* f)_n = sum_i conj(h_n[i]) f_i = <f, h_n>.
  return sys.transformed().columns().adjoint() * f;
}

const Matrix& frame_operator(const EFrameSystem& sys) {
  return sys.frame_operator();
}

std::optional<FrameBounds> optimal_frame_bounds(const EFrameSystem& sys) {
  if (!sys.is_frame()) return std::nullopt;
  return FrameBounds{sys.spectrum().min, sys.spectrum().max,
                     Provenance::Optimal};
}

std::optional<FrameBounds> classical_frame_bounds(const VectorSequence& seq,
                                                  const Tolerances& tol) {
  return optimal_frame_bounds(EFrameSystem::classical(seq, tol));
}

VerifierReport is_e_frame(const EFrameSystem& sys, const FrameBounds& claimed) {
  if (!claimed.lower || !(*claimed.lower > 0.0)) {
    throw InvalidArgument("claimed lower frame bound must be positive");
  }
  const double rel = sys.tolerances().rel_tol;
  const Spectrum& s = sys.spectrum();

  VerifierReport report;
  report.verifier = "is_e_frame";
  report.inputs_digest = Digest()
                             .add(sys.sequence())
                             .add(sys.map().entries())
                             .add(*claimed.lower)
                             .add(claimed.upper)
                             .hex();
  report.predicted = claimed;
  report.optimal = FrameBounds{s.min, s.max, Provenance::Optimal};
  report.add_check("lower_bound_excess", std::max(0.0, *claimed.lower - s.min),
                   rel * s.min);
  report.add_check("upper_bound_excess", std::max(0.0, s.max - claimed.upper),
                   rel * claimed.upper);
  report.finalize();
  return report;
}

FrameBounds bessel_sum_bound(const VectorSequence& seq) {
  return FrameBounds{std::nullopt, seq.sum_sq_norms(), Provenance::BesselSum};
}

VectorSequence canonical_dual(const EFrameSystem& sys) {
  if (!sys.is_frame()) {
    throw NotAFrame("frame operator is numerically singular; no canonical dual");
  }
  Eigen::LLT<Matrix> llt(sys.frame_operator());
  if (llt.info() != Eigen::Success) {
    throw NotAFrame("frame operator is not positive definite");
  }
  return VectorSequence(llt.solve(sys.transformed().columns()));
}

Vector reconstruct(const EFrameSystem& sys, const VectorSequence& dual,
                   const Vector& f) {
  if (dual.size() != sys.size() || dual.dim() != sys.dim()) {
    throw DimensionMismatch("dual sequence does not match the system");
  }
  if (f.size() != sys.dim()) {
    throw DimensionMismatch("vector length does not match the system");
  }
  return sys.transformed().columns() * (dual.columns().adjoint() * f);
}

}  // namespace eframe
