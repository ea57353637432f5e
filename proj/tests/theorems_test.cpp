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

#include "eframe/theorems.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "eframe/errors.hpp"
#include "eframe/generators.hpp"
#include "oracles/oracles.hpp"
#include "test_util.hpp"

namespace eframe {
namespace {

using namespace eframe::testing;

const double kSqrt5 = std::sqrt(5.0);

VectorSequence onb2() { return seq({unit(2, 0), unit(2, 1)}); }
MatrixMap skew() { return MatrixMap(mat({{1.0, 1.0}, {0.0, 1.0}})); }

TEST(TransferBounds, DiagonalMap) {
  const TransferBoundsReport r = transfer_bounds_verify(onb2(), MatrixMap::diagonal(vec({2.0, 3.0})));
  EXPECT_DOUBLE_EQ(*r.classical_bounds.lower, 1.0);
  EXPECT_DOUBLE_EQ(r.classical_bounds.upper, 1.0);
  EXPECT_DOUBLE_EQ(r.c, 4.0);
  EXPECT_DOUBLE_EQ(r.e_norm * r.e_norm, 9.0);
  EXPECT_DOUBLE_EQ(*r.predicted.lower, 4.0);
  EXPECT_DOUBLE_EQ(r.predicted.upper, 9.0);
  EXPECT_EQ(r.predicted.provenance, Provenance::Transfer);
  EXPECT_NEAR(*r.optimal.lower, 4.0, 1e-14);
  EXPECT_NEAR(r.optimal.upper, 9.0, 1e-14);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.report.status(), Status::Pass);
}

TEST(TransferBounds, IdentityMap) {
  const TransferBoundsReport r = transfer_bounds_verify(onb2(), MatrixMap::identity(2));
  EXPECT_DOUBLE_EQ(*r.predicted.lower, 1.0);
  EXPECT_DOUBLE_EQ(r.predicted.upper, 1.0);
  EXPECT_TRUE(r.pass);
}

TEST(TransferBounds, TightLowerBoundForTriangularMap) {
  const TransferBoundsReport r = transfer_bounds_verify(onb2(), skew());
  EXPECT_NEAR(r.c, (3.0 - kSqrt5) / 2.0, 1e-14);
  EXPECT_NEAR(*r.predicted.lower, *r.optimal.lower, 1e-14);
  EXPECT_NEAR(*r.optimal.lower, (3.0 - kSqrt5) / 2.0, 1e-14);
  EXPECT_NEAR(r.predicted.upper, (3.0 + kSqrt5) / 2.0, 1e-14);
  EXPECT_TRUE(r.pass);
}

TEST(TransferBounds, Preconditions) {
  EXPECT_THROW(transfer_bounds_verify(seq({unit(2, 0), unit(2, 0)}), MatrixMap::identity(2)),
               NotAFrame);
  EXPECT_THROW(transfer_bounds_verify(onb2(), MatrixMap(mat({{1.0, 1.0}, {1.0, 1.0}}))),
               SingularMatrix);
  EXPECT_THROW(transfer_bounds_verify(onb2(), MatrixMap::identity(3)), DimensionMismatch);
}

TEST(TransferBounds, RandomSandwich) {
  for (std::uint64_t trial = 0; trial < 60; ++trial) {
    const Index d = 1 + static_cast<Index>(trial % 5);
    const Index n = d + static_cast<Index>(trial % 4);
    const VectorSequence f = gen_random_frame(d, n, trial);
    const MatrixMap e =
        gen_matrix({.kind = MatrixKind::RandomHS, .rho = 0.85, .seed = trial}, n);
    const TransferBoundsReport r = transfer_bounds_verify(f, e);
    EXPECT_TRUE(r.pass) << "trial " << trial;
    const double slack = 1e-9 * r.optimal.upper;
    EXPECT_LE(*r.predicted.lower, *r.optimal.lower + slack);
    EXPECT_LE(r.optimal.upper, r.predicted.upper + slack);
  }
}

TEST(DiagonalCorollary, Examples) {
  VerifierReport r = diagonal_corollary_verify(vec({2.0, 3.0}), onb2());
  EXPECT_TRUE(r.pass);
  EXPECT_DOUBLE_EQ(*r.predicted->lower, 4.0);
  EXPECT_DOUBLE_EQ(r.predicted->upper, 9.0);
  EXPECT_EQ(r.predicted->provenance, Provenance::Diagonal);
  EXPECT_NEAR(*r.optimal->lower, 4.0, 1e-14);

  // Parseval frame in C^2 with three vectors (Mercedes-Benz).
  const double s = std::sqrt(2.0 / 3.0);
  const VectorSequence mb = seq({vec({s, 0.0}),
                                 vec({-s / 2, s * std::sqrt(3.0) / 2}),
                                 vec({-s / 2, -s * std::sqrt(3.0) / 2})});
  r = diagonal_corollary_verify(vec({1.0, 1.0, 1.0}), mb);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(*r.predicted->lower, *r.optimal->lower, 1e-14);
  EXPECT_NEAR(r.predicted->upper, r.optimal->upper, 1e-14);

  r = diagonal_corollary_verify(vec({1.0, 1.0i}), onb2());
  EXPECT_TRUE(r.pass);
  EXPECT_DOUBLE_EQ(*r.predicted->lower, 1.0);
  EXPECT_DOUBLE_EQ(r.predicted->upper, 1.0);
  EXPECT_NEAR(*r.optimal->lower, 1.0, 1e-15);
  EXPECT_NEAR(r.optimal->upper, 1.0, 1e-15);
}

TEST(DiagonalCorollary, ZeroEntryThrows) {
  EXPECT_THROW(diagonal_corollary_verify(vec({1.0, 0.0}), onb2()), ZeroDiagonal);
}

TEST(GramMatrix, Fixture) {
  EXPECT_TRUE(near(gram_matrix(seq({vec({1.0, 0.0}), vec({1.0, 1.0})})),
                   mat({{1.0, 1.0}, {1.0, 2.0}}), 0.0));
  // E_{j,k} = <f_k, f_j>: entry (0,1) is <f_2, f_1> = <(i,0), (1,0)> = i.
  EXPECT_EQ(gram_matrix(seq({vec({1.0, 0.0}), vec({1.0i, 0.0})}))(0, 1),
            Scalar(0.0, 1.0));
}

TEST(GramCorollary, Examples) {
  VerifierReport r = gram_corollary_verify(onb2());
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(*r.optimal->lower, 1.0, 1e-15);
  EXPECT_NEAR(r.optimal->upper, 1.0, 1e-15);

  // E = diag(4, 9), h = (8 e1, 27 e2).
  r = gram_corollary_verify(seq({vec({2.0, 0.0}), vec({0.0, 3.0})}));
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(*r.optimal->lower, 64.0, 1e-12);
  EXPECT_NEAR(r.optimal->upper, 729.0, 1e-12);

  r = gram_corollary_verify(seq({vec({1.0, 0.0}), vec({1.0, 1.0})}));
  EXPECT_TRUE(r.pass);
}

TEST(GramCorollary, FixtureMatchesOracleBounds) {
  // h = F E^T with F = [[1,1],[0,1]] and E = [[1,1],[1,2]].
  const Matrix f = mat({{1.0, 1.0}, {0.0, 1.0}});
  const Matrix h = oracle::apply_map(mat({{1.0, 1.0}, {1.0, 2.0}}), f);
  const auto [lo, hi] = oracle::eig2x2(oracle::rank_one_sum(h));
  const VerifierReport r = gram_corollary_verify(VectorSequence(f));
  EXPECT_NEAR(*r.optimal->lower, lo, 1e-12);
  EXPECT_NEAR(r.optimal->upper, hi, 1e-12);
}

TEST(GramCorollary, Preconditions) {
  EXPECT_THROW(gram_corollary_verify(seq({unit(2, 0), unit(2, 1), unit(2, 0)})),
               NotRieszBasis);
  EXPECT_THROW(gram_corollary_verify(seq({unit(2, 0), unit(2, 0)})), NotRieszBasis);
}

TEST(BesselIdentity, IdentityMap) {
  const VectorSequence f = gen_random_frame(3, 4, 1);
  Rng rng(2);
  const Vector g = rng.uniform_matrix(3, 1);
  const BesselSides s = bessel_identity_sides(f, MatrixMap::identity(4), g);
  const double classical = oracle::energy(f.columns(), g);
  EXPECT_NEAR(s.transformed, classical, 1e-13 * classical);
  EXPECT_NEAR(s.conjugate_map, classical, 1e-13 * classical);
}

TEST(BesselIdentity, HandComputed) {
  const BesselSides s = bessel_identity_sides(onb2(), skew(), vec({1.0, 0.0}));
  EXPECT_DOUBLE_EQ(s.transformed, 1.0);
  EXPECT_DOUBLE_EQ(s.conjugate_map, 1.0);
}

TEST(BesselIdentity, RandomCampaignSeed3) {
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const VectorSequence f(rng.uniform_matrix(3, 5));
    const MatrixMap e(rng.uniform_matrix(5, 5));
    const VerifierReport r = bessel_identity_verify(f, e, 10, 3 + trial);
    EXPECT_TRUE(r.pass);
    ASSERT_FALSE(r.residuals.empty());
    EXPECT_EQ(r.residuals[0].name, "max_relative_gap");
    EXPECT_LE(r.residuals[0].residual, 1e-10);
  }
}

TEST(ABBounds, Examples) {
  ABBounds ab = ab_bounds(MatrixMap::diagonal(vec({2.0, 3.0})));
  EXPECT_DOUBLE_EQ(ab.a, 4.0);
  EXPECT_DOUBLE_EQ(ab.b, 9.0);
  ab = ab_bounds(MatrixMap::identity(4));
  EXPECT_DOUBLE_EQ(ab.a, 1.0);
  EXPECT_DOUBLE_EQ(ab.b, 1.0);
  ab = ab_bounds(skew());
  EXPECT_DOUBLE_EQ(ab.a, 0.0);
  EXPECT_DOUBLE_EQ(ab.b, 3.0);
}

TEST(ABBounds, MatchesLoopOracleAndContainsSpectrum) {
  for (std::uint64_t trial = 0; trial < 30; ++trial) {
    Rng rng(trial);
    const Index n = 1 + static_cast<Index>(trial % 6);
    const Matrix m = Matrix::Identity(n, n) * 2.0 + 0.3 * rng.uniform_matrix(n, n);
    const MatrixMap e(m);
    const ABBounds ab = ab_bounds(e);
    const oracle::Gershgorin g = oracle::gershgorin(m);
    EXPECT_NEAR(ab.a, g.a, 1e-12);
    EXPECT_NEAR(ab.b, g.b, 1e-12);
    const double smin2 = e.spectral().sigma_min * e.spectral().sigma_min;
    const double smax2 = e.spectral().sigma_max * e.spectral().sigma_max;
    EXPECT_LE(ab.a, smin2 * (1 + 1e-12));
    EXPECT_LE(smax2, ab.b * (1 + 1e-12));
  }
}

TEST(ABVerifier, Examples) {
  ABReport r = ab_theorem_verify(onb2(), MatrixMap::diagonal(vec({2.0, 3.0})));
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.pass);
  EXPECT_DOUBLE_EQ(*r.predicted->lower, 4.0);
  EXPECT_DOUBLE_EQ(r.predicted->upper, 9.0);

  r = ab_theorem_verify(onb2(), skew());
  EXPECT_FALSE(r.applicable);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.report.status(), Status::Skip);
  EXPECT_EQ(r.report.skip_reason.value_or(""), "a<=0 not applicable");

  r = ab_theorem_verify(onb2(), MatrixMap::identity(2));
  EXPECT_TRUE(r.pass);
  EXPECT_DOUBLE_EQ(*r.predicted->lower, 1.0);
  EXPECT_DOUBLE_EQ(r.predicted->upper, 1.0);
}

TEST(ABVerifier, RandomDiagonallyDominant) {
  for (std::uint64_t trial = 0; trial < 40; ++trial) {
    Rng rng(500 + trial);
    const Index d = 1 + static_cast<Index>(trial % 4);
    const Index n = d + static_cast<Index>(trial % 3);
    const Matrix m = gen_random_diagonal(n, trial).asDiagonal().toDenseMatrix() +
                     0.02 * rng.uniform_matrix(n, n);
    const ABReport r = ab_theorem_verify(gen_random_frame(d, n, trial), MatrixMap(m));
    if (!r.applicable) continue;
    EXPECT_TRUE(r.pass) << "trial " << trial;
  }
}

}  // namespace
}  // namespace eframe
