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

#include <gtest/gtest.h>

#include "eframe/errors.hpp"
#include "eframe/generators.hpp"
#include "test_util.hpp"

namespace eframe {
namespace {

using namespace eframe::testing;

void expect_contract(const EFrameSystem& sys, const DecompositionResult& r,
                     double tol) {
  const DecompositionResiduals res = decomposition_residuals(sys, r);
  const double h_max = sys.transformed().columns().colwise().norm().maxCoeff();
  EXPECT_LE(res.identity_gap, 1.0 - r.epsilon / 2.0 + 1e-12);
  EXPECT_LE(res.polar, 1e-9 * operator_norm(r.d));
  EXPECT_LE(res.v_unitarity, 1e-8);
  EXPECT_LE(res.w_unitarity, 1e-8);
  EXPECT_LE(res.reconstruction, tol * r.scale * h_max);
  for (const EONB& b : r.bases) EXPECT_TRUE(e_onb_check(b).pass);
}

TEST(ThreeUnitaryDecomposition, ParsevalIdentity) {
  const EFrameSystem sys =
      EFrameSystem::classical(VectorSequence::standard_basis(2));
  const DecompositionResult r = three_unitary_decomposition(sys, 0.5);
  EXPECT_DOUBLE_EQ(r.scale, 2.0);
  EXPECT_TRUE(near(r.d, 0.75 * Matrix::Identity(2, 2), 1e-15));
  // D = 0.75 I is positive: V = I, P = 0.75 I, W = 0.75 I + i sqrt(7)/4 I.
  EXPECT_TRUE(near(r.v, Matrix::Identity(2, 2), 1e-14));
  EXPECT_TRUE(near(r.w, Scalar(0.75, std::sqrt(7.0) / 4.0) * Matrix::Identity(2, 2),
                   1e-14));
  const DecompositionResiduals res = decomposition_residuals(sys, r);
  EXPECT_LE(res.reconstruction, 1e-9);
  expect_contract(sys, r, 1e-9);
}

TEST(ThreeUnitaryDecomposition, DiagonalFrame) {
  const EFrameSystem sys =
      EFrameSystem::classical(seq({vec({2.0, 0.0}), vec({0.0, 3.0})}));
  const DecompositionResult r = three_unitary_decomposition(sys, 0.5);
  EXPECT_DOUBLE_EQ(operator_norm(r.t), 3.0);
  EXPECT_DOUBLE_EQ(r.scale, 6.0);
  for (const EONB& b : r.bases) {
    EXPECT_LE(e_onb_check(b).orthonormality_residual, 1e-8);
  }
  expect_contract(sys, r, 1e-9);
}

TEST(ThreeUnitaryDecomposition, IdentityGapBound) {
  for (double eps : {0.01, 0.1, 0.5, 0.9, 0.99}) {
    for (std::uint64_t trial = 0; trial < 5; ++trial) {
      const Index d = 1 + static_cast<Index>(trial);
      const EFrameSystem sys(
          gen_random_frame(d, d, trial),
          gen_matrix({.kind = MatrixKind::RandomHS, .rho = 0.8, .seed = trial}, d));
      const DecompositionResult r = three_unitary_decomposition(sys, eps);
      EXPECT_LT(operator_norm(Matrix::Identity(d, d) - r.d), 1.0);
      expect_contract(sys, r, 1e-9);
    }
  }
}

TEST(ThreeUnitaryDecomposition, ThirdBasisIsNegatedEOnb) {
  const EFrameSystem sys(gen_random_frame(3, 3, 4),
                         gen_matrix({.kind = MatrixKind::Gram, .seed = 4}, 3));
  const DecompositionResult r = three_unitary_decomposition(sys, 0.3);
  EXPECT_TRUE(near(r.bases[2].transformed.columns(), -Matrix::Identity(3, 3), 1e-12));
}

TEST(ThreeUnitaryDecomposition, Preconditions) {
  const EFrameSystem sys = EFrameSystem::classical(VectorSequence::standard_basis(2));
  EXPECT_THROW(three_unitary_decomposition(sys, 0.0), BadEpsilon);
  EXPECT_THROW(three_unitary_decomposition(sys, 1.0), BadEpsilon);
  EXPECT_THROW(three_unitary_decomposition(sys, std::nan("")), BadEpsilon);

  const EFrameSystem wide =
      EFrameSystem::classical(seq({unit(2, 0), unit(2, 1), unit(2, 0)}));
  EXPECT_THROW(three_unitary_decomposition(wide, 0.5), ShapeMismatch);

  const EFrameSystem degenerate =
      EFrameSystem::classical(seq({unit(2, 0), unit(2, 0)}));
  EXPECT_THROW(three_unitary_decomposition(degenerate, 0.5), NotAFrame);
}

}  // namespace
}  // namespace eframe
