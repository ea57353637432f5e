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

#include "eframe/generators.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "eframe/errors.hpp"
#include "eframe/frame.hpp"

namespace eframe {
namespace {

constexpr int kMaxRetries = 8;

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept {
  return splitmix64(base ^ splitmix64(index));
}

double Rng::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

double Rng::normal() { return std::normal_distribution<double>()(engine_); }

Scalar Rng::uniform_complex() {
  const double re = uniform(-1.0, 1.0);
  const double im = uniform(-1.0, 1.0);
  return {re, im};
}

Matrix Rng::uniform_matrix(Index rows, Index cols) {
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) m(i, j) = uniform_complex();
  }
  return m;
}

Vector Rng::unit_vector(Index d) {
  Vector v(d);
  double norm = 0.0;
  while (norm == 0.0) {
    for (Index i = 0; i < d; ++i) {
      const double re = normal();
      const double im = normal();
      v(i) = Scalar(re, im);
    }
    norm = v.norm();
  }
  return v / norm;
}

std::string_view to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Identity: return "identity";
    case MatrixKind::Diagonal: return "diagonal";
    case MatrixKind::Gram: return "gram";
    case MatrixKind::RandomHS: return "randomhs";
    case MatrixKind::DenseExplicit: return "dense";
  }
  return "unknown";
}

std::optional<MatrixKind> matrix_kind_from_string(std::string_view name) {
  for (MatrixKind k : {MatrixKind::Identity, MatrixKind::Diagonal,
                       MatrixKind::Gram, MatrixKind::RandomHS,
                       MatrixKind::DenseExplicit}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

Matrix gen_unitary(Index n, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("unitary size must be positive");
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    const Matrix a = rng.uniform_matrix(n, n);
    Eigen::HouseholderQR<Matrix> qr(a);
    const Eigen::VectorXd r = qr.matrixQR().diagonal().cwiseAbs();
    if (r.minCoeff() > 1e-8 * r.maxCoeff()) {
      return qr.householderQ() * Matrix::Identity(n, n);
    }
  }
  throw DegenerateDraw("random matrix was rank deficient " +
                       std::to_string(kMaxRetries) + " times");
}

VectorSequence gen_onb(Index d, std::uint64_t seed) {
  return VectorSequence(gen_unitary(d, seed));
}

VectorSequence gen_random_frame(Index d, Index n, std::uint64_t seed,
                                double jitter, const Tolerances& tol) {
  if (d < 1) throw InvalidArgument("frame dimension must be positive");
  if (n < d) {
    throw InvalidArgument("a frame for C^" + std::to_string(d) +
                          " needs at least d vectors, got " +
                          std::to_string(n));
  }
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(attempt));
    Matrix f = gen_unitary(n, s).topRows(d);
    if (jitter != 0.0) {
      Rng rng(derive_seed(s, 1));
      f += jitter * rng.uniform_matrix(d, n);
    }
    VectorSequence seq(std::move(f));
    if (EFrameSystem::classical(seq, tol).is_frame()) return seq;
  }
  throw DegenerateDraw("random frame failed the spectral check " +
                       std::to_string(kMaxRetries) + " times");
}

Vector gen_random_diagonal(Index n, std::uint64_t seed) {
  Rng rng(seed);
  Vector out(n);
  for (Index i = 0; i < n; ++i) {
    int tries = 0;
    do {
      if (++tries > 64) {
        throw DegenerateDraw("could not draw a diagonal entry away from zero");
      }
      out(i) = rng.uniform_complex();
    } while (std::abs(out(i)) < 0.1);
  }
  return out;
}

MatrixMap gen_matrix(const GenSpec& spec, Index n, const Tolerances& tol) {
  if (n < 1) throw BadSpec("matrix size must be positive");

  switch (spec.kind) {
    case MatrixKind::Identity:
      return MatrixMap::identity(n, tol);

    case MatrixKind::Diagonal: {
      Vector lambdas;
      if (spec.diagonal.empty()) {
        lambdas = gen_random_diagonal(n, spec.seed);
      } else {
        if (static_cast<Index>(spec.diagonal.size()) != n) {
          throw BadSpec("diagonal has " + std::to_string(spec.diagonal.size()) +
                        " entries, expected " + std::to_string(n));
        }
        lambdas = Eigen::Map<const Vector>(spec.diagonal.data(), n);
      }
      if (spec.invertible && lambdas.cwiseAbs().minCoeff() <= tol.rank_tol) {
        throw BadSpec("zero diagonal entry in a map required to be invertible");
      }
      return MatrixMap::diagonal(lambdas, tol);
    }

    case MatrixKind::Gram:
      for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        const VectorSequence basis = gen_random_frame(
            n, n, derive_seed(spec.seed, static_cast<std::uint64_t>(attempt)),
            0.5, tol);
        MatrixMap e(basis.columns().adjoint() * basis.columns(), tol);
        if (!spec.invertible || e.invertible()) return e;
      }
      throw DegenerateDraw("Gram matrix draw was singular " +
                           std::to_string(kMaxRetries) + " times");

    case MatrixKind::RandomHS: {
      if (!(spec.rho > 0.0 && spec.rho < 1.0)) {
        throw BadSpec("rho must lie in (0, 1)");
      }
      for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        Rng rng(derive_seed(spec.seed, static_cast<std::uint64_t>(attempt)));
        Matrix m(n, n);
        // Column-major fill; indices are 1-based in the decay profile.
        for (Index k = 0; k < n; ++k) {
          for (Index r = 0; r < n; ++r) {
            const double envelope =
                std::pow(spec.rho, static_cast<double>(r + k + 2));
            m(r, k) = envelope * (1.0 / std::numbers::sqrt2) * rng.uniform_complex();
          }
        }
        MatrixMap e(std::move(m), tol);
        if (!spec.invertible || e.invertible()) return e;
      }
      throw DegenerateDraw("Hilbert-Schmidt draw was singular " +
                           std::to_string(kMaxRetries) + " times");
    }

    case MatrixKind::DenseExplicit: {
      if (spec.entries.rows() != n || spec.entries.cols() != n) {
        throw BadSpec("explicit matrix is " +
                      std::to_string(spec.entries.rows()) + "x" +
                      std::to_string(spec.entries.cols()) + ", expected " +
                      std::to_string(n) + "x" + std::to_string(n));
      }
      MatrixMap e(spec.entries, tol);
      if (spec.invertible && !e.invertible()) {
        throw BadSpec("explicit matrix is not invertible");
      }
      return e;
    }
  }
  throw BadSpec("unknown matrix kind");
}

}  // namespace eframe
