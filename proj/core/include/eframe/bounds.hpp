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
#include <string_view>

namespace eframe {

// Where a pair of frame bounds came from.
enum class Provenance : std::uint8_t {
  Optimal,            // extreme eigenvalues of the frame operator
  Transfer,           // (C A, ||E||^2 B) for an invertible Hilbert-Schmidt E
  Diagonal,           // (C A, lambda^2 B) for a diagonal E
  DiagonalDominance,  // (a A, b B) from the diagonal-dominance conditions on E^*E
  BesselSum,          // upper bound sum_k ||f_k||^2 only
};

std::string_view to_string(Provenance p);

// Frame bounds (A, B). The lower bound is absent for Bessel-only results.
struct FrameBounds {
  std::optional<double> lower;
  double upper = 0.0;
  Provenance provenance = Provenance::Optimal;

  // 0 < lower <= upper when lower is present, upper >= 0 otherwise.
  bool well_formed() const noexcept {
    if (!lower) return upper >= 0.0;
    return *lower > 0.0 && *lower <= upper;
  }
};

}  // namespace eframe
