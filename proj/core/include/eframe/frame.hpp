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

#include <optional>

#include "eframe/bounds.hpp"
#include "eframe/hilbert.hpp"
#include "eframe/report.hpp"

namespace eframe {

using CoefficientVector = Vector;

// Smallest and largest eigenvalue of a Hermitian matrix.
struct Spectrum {
  double min = 0.0;
  double max = 0.0;
};

// Eigenvalues of the Hermitian part of m, ascending.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m);

// The pair ({f_k}, E) with the transformed family h_n = (E{f_k})_n and the
// E-frame operator S_E = sum_n h_n h_n^* cached at construction.
class EFrameSystem {
 public:
  // Throws DimensionMismatch if seq.size() != e.size().
  EFrameSystem(VectorSequence seq, MatrixMap e, const Tolerances& tol = {});

  // The classical system: E is the identity.
  static EFrameSystem classical(VectorSequence seq, const Tolerances& tol = {});

  const VectorSequence& sequence() const noexcept { return seq_; }
  const MatrixMap& map() const noexcept { return map_; }
  const VectorSequence& transformed() const noexcept { return transformed_; }
  const Matrix& frame_operator() const noexcept { return frame_op_; }
  const Spectrum& spectrum() const noexcept { return spectrum_; }
  const Tolerances& tolerances() const noexcept { return tol_; }

  Index dim() const noexcept { return seq_.dim(); }
  Index size() const noexcept { return seq_.size(); }

  // lambda_min(S_E) > rank_tol * lambda_max(S_E).
  bool is_frame() const noexcept;

 private:
  VectorSequence seq_;
  MatrixMap map_;
  VectorSequence transformed_;
  Matrix frame_op_;
  Spectrum spectrum_;
  Tolerances tol_;
};

// T_E c = sum_n c_n h_n.
Vector synthesis(const EFrameSystem& sys, const CoefficientVector& c);

// T_E^* f = {<f, h_n>}_n.
CoefficientVector analysis(const EFrameSystem& sys, const Vector& f);

// S_E = T_E T_E^*, Hermitian.
const Matrix& frame_operator(const EFrameSystem& sys);

// (lambda_min(S_E), lambda_max(S_E)) with provenance Optimal, or nullopt when
// the transformed family does not span (not an E-frame).
std::optional<FrameBounds> optimal_frame_bounds(const EFrameSystem& sys);

// Bounds of the classical frame {f_k}, i.e. E = I.
std::optional<FrameBounds> classical_frame_bounds(const VectorSequence& seq,
                                                  const Tolerances& tol = {});

// Checks A <= lambda_min (1 + rel_tol) and lambda_max <= B (1 + rel_tol).
// Throws InvalidArgument unless claimed.lower is present and positive.
VerifierReport is_e_frame(const EFrameSystem& sys, const FrameBounds& claimed);

// Upper Bessel bound sum_k ||f_k||^2 from Cauchy-Schwarz.
FrameBounds bessel_sum_bound(const VectorSequence& seq);

// {S_E^{-1} h_n}. Throws NotAFrame if S_E is numerically singular.
VectorSequence canonical_dual(const EFrameSystem& sys);

// sum_n <f, dual_n> h_n.
Vector reconstruct(const EFrameSystem& sys, const VectorSequence& dual,
                   const Vector& f);

}  // namespace eframe
