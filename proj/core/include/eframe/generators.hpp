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
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "eframe/hilbert.hpp"

namespace eframe {

// splitmix64 finalizer; used to expand one seed into independent streams.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Seed for sub-stream `index` of `base`: splitmix64(base ^ splitmix64(index)).
// Trials use derive_seed(config.seed, trial); within a trial each generator
// gets its own salt.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept;

// Thin wrapper around a 64-bit Mersenne twister with the draws the
// generators need. Complex scalars have independent uniform real and
// imaginary parts in [-1, 1].
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  double uniform(double lo, double hi);
  double normal();
  Scalar uniform_complex();
  Matrix uniform_matrix(Index rows, Index cols);
  // Uniform on the unit sphere of C^d.
  Vector unit_vector(Index d);

 private:
  std::mt19937_64 engine_;
};

enum class MatrixKind : std::uint8_t {
  Identity,
  Diagonal,
  Gram,
  RandomHS,
  DenseExplicit,
};

std::string_view to_string(MatrixKind kind);
std::optional<MatrixKind> matrix_kind_from_string(std::string_view name);

// Recipe for a matrix mapping. Only the fields relevant to `kind` are read.
struct GenSpec {
  MatrixKind kind = MatrixKind::Identity;
  // Diagonal: explicit entries; empty means draw them from `seed`.
  std::vector<Scalar> diagonal;
  // RandomHS: |E_{n,k}| <= rho^{n+k} with 1-based n, k.
  double rho = 0.5;
  // DenseExplicit: N x N entries.
  Matrix entries;
  std::uint64_t seed = 0;
  // Reject (or redraw, for random kinds) maps that fail the invertibility
  // certificate.
  bool invertible = true;
};

// Deterministic in (spec, n). Random kinds retry at most 8 times on a
// non-invertible draw before throwing DegenerateDraw. Explicit kinds throw
// BadSpec on a size mismatch or when invertibility is requested but fails.
MatrixMap gen_matrix(const GenSpec& spec, Index n, const Tolerances& tol = {});

// Nonzero diagonal entries with modulus at least 0.1.
Vector gen_random_diagonal(Index n, std::uint64_t seed);

// N >= d vectors spanning C^d: the first d rows of a random N x N unitary
// plus uniform jitter of amplitude `jitter`. Throws InvalidArgument if
// N < d, DegenerateDraw if the frame check fails 8 times in a row.
VectorSequence gen_random_frame(Index d, Index n, std::uint64_t seed,
                                double jitter = 0.5,
                                const Tolerances& tol = {});

// Orthonormal basis of C^d from the QR factorization of a random matrix.
VectorSequence gen_onb(Index d, std::uint64_t seed);

// Random N x N unitary (Q of a QR factorization).
Matrix gen_unitary(Index n, std::uint64_t seed);

}  // namespace eframe
