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

#include <cstdint>

#include "eframe/bounds.hpp"
#include "eframe/frame.hpp"
#include "eframe/hilbert.hpp"
#include "eframe/report.hpp"

namespace eframe {

// Verifiers for the bound-transfer results: a classical frame {f_k} with
// bounds (A, B) becomes an E-frame with bounds predicted from E alone.
//
// Sandwich checks are absolute with slack rel_tol * lambda_max(S_E):
//   predicted.lower <= lambda_min(S_E) + rel_tol * lambda_max(S_E)
//   lambda_max(S_E) <= predicted.upper + rel_tol * lambda_max(S_E)

struct TransferBoundsReport {
  FrameBounds classical_bounds;
  double e_norm = 0.0;
  double c = 0.0;  // sigma_min(E)^2
  FrameBounds predicted;
  FrameBounds optimal;
  bool pass = false;
  VerifierReport report;
};

// Throws NotAFrame if `frame` is not a classical frame, SingularMatrix if E
// is not invertible, DimensionMismatch on size mismatch.
TransferBoundsReport transfer_bounds_verify(const VectorSequence& frame, const MatrixMap& e,
                               const Tolerances& tol = {});

// Builds E = diag(lambdas) and checks ||E|| == max|lambda_n| and the
// (C A, lambda^2 B) sandwich with C = min|lambda_n|^2.
// Throws ZeroDiagonal if some |lambda_n| <= rank_tol.
VerifierReport diagonal_corollary_verify(const Vector& lambdas,
                                         const VectorSequence& frame,
                                         const Tolerances& tol = {});

// E_{j,k} = <f_k, f_j>.
Matrix gram_matrix(const VectorSequence& seq);

// Builds the Gram matrix of a finite Riesz basis and runs transfer_bounds_verify
// with it. Throws NotRieszBasis if N != d or the vectors are dependent.
VerifierReport gram_corollary_verify(const VectorSequence& riesz,
                                     const Tolerances& tol = {});

// Both sides of the identity
//   sum_n |<f, (E{f_k})_n>|^2 = || conj(E) {<f, f_k>} ||^2.
struct BesselSides {
  double transformed = 0.0;
  double conjugate_map = 0.0;
};

BesselSides bessel_identity_sides(const VectorSequence& seq, const MatrixMap& e,
                                  const Vector& f);

// Draws `trials` random f from `seed` and records the worst relative gap.
VerifierReport bessel_identity_verify(const VectorSequence& seq,
                                      const MatrixMap& e, std::size_t trials,
                                      std::uint64_t seed,
                                      const Tolerances& tol = {});

// With G = E^*E (G_{j,k} = sum_n E_{n,k} conj(E_{n,j})):
//   b = max_k sum_j |G_{j,k}|
//   a = min_k (G_{k,k} - sum_{j != k} |G_{j,k}|)
struct ABBounds {
  double a = 0.0;
  double b = 0.0;
};

ABBounds ab_bounds(const MatrixMap& e);

struct ABReport {
  double a = 0.0;
  double b = 0.0;
  bool applicable = false;  // a > 0
  std::optional<FrameBounds> predicted;
  std::optional<FrameBounds> optimal;
  bool pass = false;
  VerifierReport report;
};

// Throws NotAFrame if `frame` is not a classical frame. When a <= 0 the
// report is skipped with reason "a<=0 not applicable".
ABReport ab_theorem_verify(const VectorSequence& frame, const MatrixMap& e,
                           const Tolerances& tol = {});

}  // namespace eframe
