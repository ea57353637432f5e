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

#include "eframe/frame.hpp"
#include "eframe/hilbert.hpp"

namespace eframe {

// An E-orthonormal basis {g_k}: its transform {(E{g_k})_n} is an
// orthonormal basis of C^d, so N == d.
struct EONB {
  VectorSequence raw;
  VectorSequence transformed;
};

struct EOnbCheck {
  double orthonormality_residual = 0.0;  // max_{n,k} |<h_n, h_k> - delta_nk|
  bool spans = false;                    // N == d
  bool pass = false;
};

EOnbCheck e_onb_check(const EONB& basis, const Tolerances& tol = {});

// {g_k} = E^{-1}{e_k}. Throws SingularMatrix if E is not invertible,
// NotOrthonormal if `onb` is not an orthonormal basis (N != d included).
EONB e_onb_from_onb(const VectorSequence& onb, const MatrixMap& e,
                    const Tolerances& tol = {});

// Pairs raw with E; throws DimensionMismatch on size mismatch.
EONB make_eonb(const VectorSequence& raw, const MatrixMap& e);

// c_m = <f, (E{g})_m>. Throws DimensionMismatch.
CoefficientVector expansion_coefficients(const EONB& basis, const Vector& f);

// sum_m c_m (E{g})_m.
Vector expand(const EONB& basis, const CoefficientVector& c);

}  // namespace eframe
