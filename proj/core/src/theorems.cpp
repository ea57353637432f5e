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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "eframe/errors.hpp"
#include "eframe/generators.hpp"

namespace eframe {
namespace {

FrameBounds require_classical_frame(const VectorSequence& frame,
                                    const Tolerances& tol) {
  auto bounds = classical_frame_bounds(frame, tol);
  if (!bounds) {
    throw NotAFrame("input sequence is not a frame for C^" +
                    std::to_string(frame.dim()));
  }
  return *bounds;
}

void require_same_length(const VectorSequence& seq, const MatrixMap& e) {
  if (seq.size() != e.size()) {
    throw DimensionMismatch("sequence has " + std::to_string(seq.size()) +
                            " terms, matrix mapping is " +
                            std::to_string(e.size()) + "x" +
                            std::to_string(e.size()));
  }
}

// Adds the two sandwich checks
//   predicted.lower <= lambda_min + slack, lambda_max <= predicted.upper + slack
// with slack = rel_tol * lambda_max.
void add_sandwich_checks(VerifierReport& report, const FrameBounds& predicted,
                         const Spectrum& s, const Tolerances& tol) {
  const double slack = tol.rel_tol * s.max;
  report.add_check("lower_violation",
                   std::max(0.0, predicted.lower.value_or(0.0) - s.min), slack);
  report.add_check("upper_violation", std::max(0.0, s.max - predicted.upper),
                   slack);
}

FrameBounds spectral_bounds(const Spectrum& s) {
  return FrameBounds{s.min, s.max, Provenance::Optimal};
}

}  // namespace

TransferBoundsReport transfer_bounds_verify(const VectorSequence& frame, const MatrixMap& e,
                               const Tolerances& tol) {
  require_same_length(frame, e);
  const FrameBounds classical = require_classical_frame(frame, tol);
  if (!e.invertible()) {
    throw SingularMatrix("E is not invertible");
  }
  const EFrameSystem sys(frame, e, tol);

  TransferBoundsReport out;
  out.classical_bounds = classical;
  out.e_norm = e.spectral().sigma_max;
  out.c = e.spectral().sigma_min * e.spectral().sigma_min;
  out.predicted = FrameBounds{out.c * *classical.lower,
                              out.e_norm * out.e_norm * classical.upper,
                              Provenance::Transfer};
  out.optimal = spectral_bounds(sys.spectrum());

  VerifierReport& r = out.report;
  r.verifier = "thm3";
  r.inputs_digest = Digest().add("thm3").add(frame).add(e.entries()).hex();
  r.predicted = out.predicted;
  r.optimal = out.optimal;
  add_sandwich_checks(r, out.predicted, sys.spectrum(), tol);
  r.finalize();
  out.pass = r.pass;
  return out;
}

VerifierReport diagonal_corollary_verify(const Vector& lambdas,
                                         const VectorSequence& frame,
                                         const Tolerances& tol) {
  if (lambdas.size() == 0) {
    throw InvalidArgument("empty diagonal");
  }
  const Eigen::VectorXd mags = lambdas.cwiseAbs();
  if (mags.minCoeff() <= tol.rank_tol) {
    throw ZeroDiagonal("diagonal entry with modulus " +
                       std::to_string(mags.minCoeff()) + " is not invertible");
  }
  const MatrixMap e = MatrixMap::diagonal(lambdas, tol);
  require_same_length(frame, e);
  const FrameBounds classical = require_classical_frame(frame, tol);
  const EFrameSystem sys(frame, e, tol);

  const double lambda = mags.maxCoeff();
  const double c = mags.minCoeff() * mags.minCoeff();

  VerifierReport r;
  r.verifier = "diag";
  r.inputs_digest = Digest().add("diag").add(Matrix(lambdas)).add(frame).hex();
  r.predicted = FrameBounds{c * *classical.lower,
                            lambda * lambda * classical.upper,
                            Provenance::Diagonal};
  r.optimal = spectral_bounds(sys.spectrum());

  // The norm claim is checked with a dense SVD, not the diagonal fast path
  // that MatrixMap uses.
  Eigen::JacobiSVD<Matrix> svd(e.entries());
  const double sigma_max = svd.singularValues()(0);
  r.add_check("norm_identity", std::abs(sigma_max - lambda),
              tol.rel_tol * lambda);
  add_sandwich_checks(r, *r.predicted, sys.spectrum(), tol);
  r.finalize();
  return r;
}

Matrix gram_matrix(const VectorSequence& seq) {
  // (F^* F)_{j,k} = f_j^* f_k = <f_k, f_j>.
  return seq.columns().adjoint() * seq.columns();
}

VerifierReport gram_corollary_verify(const VectorSequence& riesz,
                                     const Tolerances& tol) {
  if (riesz.size() != riesz.dim() || riesz.size() == 0) {
    throw NotRieszBasis("a finite Riesz basis needs exactly d = " +
                        std::to_string(riesz.dim()) + " vectors, got " +
                        std::to_string(riesz.size()));
  }
  const SpectralData fs = spectral_data(riesz.columns());
  if (!(fs.sigma_min > tol.rank_tol * fs.sigma_max)) {
    throw NotRieszBasis("vectors are numerically dependent");
  }
  const MatrixMap e(gram_matrix(riesz), tol);

  VerifierReport r;
  r.verifier = "gram";
  r.inputs_digest = Digest().add("gram").add(riesz).hex();
  const SpectralData& gs = e.spectral();
  // rank_tol * cond(G) <= 1 is the invertibility certificate.
  r.add_check("gram_singularity",
              gs.sigma_min > 0.0 ? tol.rank_tol * gs.sigma_max / gs.sigma_min
                                 : std::numeric_limits<double>::infinity(),
              1.0);
  if (!e.invertible()) {
    r.finalize();
    return r;
  }

  const TransferBoundsReport transfer = transfer_bounds_verify(riesz, e, tol);
  r.predicted = transfer.predicted;
  r.optimal = transfer.optimal;
  for (const Check& c : transfer.report.residuals) r.residuals.push_back(c);
  const double lmin = transfer.optimal.lower.value_or(0.0);
  r.add_check("e_frame_singularity",
              lmin > 0.0 ? tol.rank_tol * transfer.optimal.upper / lmin
                         : std::numeric_limits<double>::infinity(),
              1.0);
  r.finalize();
  return r;
}

BesselSides bessel_identity_sides(const VectorSequence& seq, const MatrixMap& e,
                                  const Vector& f) {
  require_same_length(seq, e);
  if (f.size() != seq.dim()) {
    throw DimensionMismatch("vector length does not match the sequence");
  }
  const VectorSequence h = apply_matrix_mapping(e, seq);
  const Vector lhs = h.columns().adjoint() * f;
  const Vector coeffs = seq.columns().adjoint() * f;  // {<f, f_k>}
  const Vector rhs = e.conjugate() * coeffs;
  return {lhs.squaredNorm(), rhs.squaredNorm()};
}

VerifierReport bessel_identity_verify(const VectorSequence& seq,
                                      const MatrixMap& e, std::size_t trials,
                                      std::uint64_t seed,
                                      const Tolerances& tol) {
  require_same_length(seq, e);
  const VectorSequence h = apply_matrix_mapping(e, seq);
  const FrameBounds bessel = bessel_sum_bound(h);

  VerifierReport r;
  r.verifier = "bessel-id";
  r.inputs_digest = Digest()
                        .add("bessel-id")
                        .add(seq)
                        .add(e.entries())
                        .add(static_cast<std::uint64_t>(trials))
                        .add(seed)
                        .hex();
  r.predicted = bessel;

  Rng rng(seed);
  double worst_gap = 0.0;
  double worst_bessel = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const Vector f = rng.uniform_matrix(seq.dim(), 1);
    const BesselSides s = bessel_identity_sides(seq, e, f);
    const double scale = std::max(s.transformed, s.conjugate_map);
    if (scale > 0.0) {
      worst_gap =
          std::max(worst_gap, std::abs(s.transformed - s.conjugate_map) / scale);
    }
    const double bound = bessel.upper * f.squaredNorm();
    if (bound > 0.0) {
      worst_bessel =
          std::max(worst_bessel, std::max(0.0, s.transformed - bound) / bound);
    }
  }
  r.add_check("max_relative_gap", worst_gap, tol.rel_tol);
  r.add_check("bessel_upper_violation", worst_bessel, tol.rel_tol);
  r.finalize();
  return r;
}

ABBounds ab_bounds(const MatrixMap& e) {
  const Matrix g = e.entries().adjoint() * e.entries();
  const Index n = g.rows();
  ABBounds out;
  if (n == 0) return out;
  out.a = std::numeric_limits<double>::infinity();
  out.b = 0.0;
  for (Index k = 0; k < n; ++k) {
    double off = 0.0;
    for (Index j = 0; j < n; ++j) {
      if (j != k) off += std::abs(g(j, k));
    }
    const double diag = g(k, k).real();
    out.b = std::max(out.b, std::abs(g(k, k)) + off);
    out.a = std::min(out.a, diag - off);
  }
  return out;
}

ABReport ab_theorem_verify(const VectorSequence& frame, const MatrixMap& e,
                           const Tolerances& tol) {
  require_same_length(frame, e);
  const FrameBounds classical = require_classical_frame(frame, tol);
  const EFrameSystem sys(frame, e, tol);

  ABReport out;
  const ABBounds ab = ab_bounds(e);
  out.a = ab.a;
  out.b = ab.b;
  out.applicable = ab.a > 0.0;
  out.optimal = spectral_bounds(sys.spectrum());

  VerifierReport& r = out.report;
  r.verifier = "ab";
  r.inputs_digest = Digest().add("ab").add(frame).add(e.entries()).hex();
  r.optimal = out.optimal;

  // Gershgorin containment of the spectrum of E^*E in [a, b], always meaningful.
  const double smax2 = e.spectral().sigma_max * e.spectral().sigma_max;
  const double smin2 = e.spectral().sigma_min * e.spectral().sigma_min;
  const double slack = tol.rel_tol * std::max(ab.b, smax2);
  r.add_check("gershgorin_lower", std::max(0.0, ab.a - smin2), slack);
  r.add_check("gershgorin_upper", std::max(0.0, smax2 - ab.b), slack);

  if (!out.applicable) {
    r.skip("a<=0 not applicable");
    return out;
  }
  out.predicted = FrameBounds{ab.a * *classical.lower, ab.b * classical.upper,
                              Provenance::DiagonalDominance};
  r.predicted = out.predicted;
  add_sandwich_checks(r, *out.predicted, sys.spectrum(), tol);
  r.finalize();
  out.pass = r.pass;
  return out;
}

}  // namespace eframe
