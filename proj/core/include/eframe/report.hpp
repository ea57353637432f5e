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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eframe/bounds.hpp"
#include "eframe/hilbert.hpp"

namespace eframe {

// One named residual and the tolerance it must not exceed.
struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;

  bool ok() const noexcept { return residual <= tolerance; }
};

enum class Status : std::uint8_t { Pass, Fail, Skip };

std::string_view to_string(Status s);

// Structured outcome of one verifier run on one set of inputs.
struct VerifierReport {
  std::string verifier;
  std::size_t trial = 0;
  std::string inputs_digest;
  std::optional<FrameBounds> predicted;
  std::optional<FrameBounds> optimal;
  std::vector<Check> residuals;
  bool pass = false;
  std::optional<std::string> skip_reason;
  // Set when the verifier could not run because of an unexpected error.
  std::optional<std::string> error;

  void add_check(std::string name, double residual, double tolerance);

  // Recomputes pass from the checks. A report with a skip reason never
  // passes and never fails.
  void finalize();

  void skip(std::string reason);

  Status status() const noexcept;

  // The check with the largest residual/tolerance ratio, if any.
  const Check* binding_check() const;
};

// 64-bit FNV-1a over the raw bytes of the inputs. Stable for a given
// platform and floating-point representation.
class Digest {
 public:
  Digest& add(std::string_view text);
  Digest& add(double value);
  Digest& add(std::uint64_t value);
  Digest& add(const Matrix& m);
  Digest& add(const VectorSequence& seq) { return add(seq.columns()); }

  std::uint64_t value() const noexcept { return state_; }
  std::string hex() const;

 private:
  void mix(const void* data, std::size_t size);

  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

}  // namespace eframe
