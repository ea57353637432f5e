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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "eframe/generators.hpp"
#include "eframe/hilbert.hpp"
#include "eframe/tolerances.hpp"

namespace eframe {

enum class FrameKind : std::uint8_t { Random, Standard, Onb, Explicit };

struct FrameSpec {
  FrameKind kind = FrameKind::Random;
  double jitter = 0.5;
  Matrix vectors;  // Explicit: d x N, one column per vector
};

// Experiment configuration, parsed from JSON:
//
//   {
//     "dim": 2, "len": 2, "trials": 10, "seed": 1,
//     "matrix": {"kind": "diagonal", "entries": [[2, 0], [3, 0]]},
//     "frame": {"kind": "random", "jitter": 0.5},          (optional)
//     "tolerances": {"rel_tol": 1e-9, ...},                (optional)
//     "epsilon": 0.5,                                      (optional)
//     "theorems": ["thm3"]
//   }
//
// Complex numbers are [re, im] pairs; matrices are row-major lists of rows.
struct ExperimentConfig {
  Index dim = 1;
  Index len = 1;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  GenSpec matrix;
  // True when "matrix.seed" was given: the same matrix is used every trial.
  bool matrix_seed_pinned = false;
  FrameSpec frame;
  Tolerances tolerances;
  double epsilon = 0.5;
  std::vector<std::string> theorems;
};

// The fixed set of verifier names accepted in "theorems".
const std::vector<std::string_view>& verifier_names();
bool is_verifier_name(std::string_view name);

// Throws ParseError (with line/column) on malformed JSON and
// ValidationError naming the offending field on schema violations.
// Unknown keys are rejected.
ExperimentConfig parse_config(std::string_view text);

std::string config_to_json(const ExperimentConfig& config);

// Input of the `gen` command: a GenSpec plus the size "n".
struct GenRequest {
  GenSpec spec;
  Index n = 1;
};

GenRequest parse_gen_request(std::string_view text);

// {"n": N, "entries": [[[re, im], ...], ...], "spectral": {...},
//  "invertible": bool}
std::string matrix_map_to_json(const MatrixMap& e);

}  // namespace eframe
