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

#include <array>

#include "eframe/basis.hpp"
#include "eframe/frame.hpp"
#include "eframe/hilbert.hpp"

namespace eframe {

// Writes an E-frame with N == d as a multiple of a sum of three
// E-orthonormal bases:
//
//   E{f_k} = ||T|| / (1 - eps) * (E{g^1} + E{g^2} + E{g^3})
//
// where g = E^{-1}{e_k}, T is the d x d matrix with columns h_n,
//   D = I/2 + (1 - eps) T / (2 ||T||),
// D = V P is the polar decomposition, W = P + i (I - P^2)^{1/2}, and
//   g^1 = {V W g_k},  g^2 = {V W^* g_k},  g^3 = {-g_k}.
struct DecompositionResult {
  double epsilon = 0.0;
  Matrix t;
  Matrix d;
  Matrix v;
  Matrix w;
  double scale = 0.0;  // ||T|| / (1 - eps)
  std::array<EONB, 3> bases;
};

// Throws BadEpsilon unless 0 < eps < 1, ShapeMismatch unless N == d,
// NotAFrame if the system is not an E-frame, SingularMatrix if E is not
// invertible.
DecompositionResult three_unitary_decomposition(const EFrameSystem& sys,
                                                double epsilon);

// Residuals of the decomposition invariants.
struct DecompositionResiduals {
  double identity_gap = 0.0;          // ||I - D||
  double polar = 0.0;                 // ||D - V (W + W^*) / 2||
  double v_unitarity = 0.0;           // ||V^*V - I||
  double w_unitarity = 0.0;           // ||W^*W - I||
  double reconstruction = 0.0;        // max_n ||h_n - scale sum_i (E{g^i})_n||
  std::array<double, 3> basis_orthonormality{};  // per basis
};

DecompositionResiduals decomposition_residuals(const EFrameSystem& sys,
                                               const DecompositionResult& r);

}  // namespace eframe
