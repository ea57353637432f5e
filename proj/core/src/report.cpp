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

#include "eframe/report.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <cstring>
#include <limits>

namespace eframe {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Optimal: return "optimal";
    case Provenance::Transfer: return "transfer";
    case Provenance::Diagonal: return "diagonal";
    case Provenance::DiagonalDominance: return "diagonal_dominance";
    case Provenance::BesselSum: return "bessel_sum";
  }
  return "unknown";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "unknown";
}

void VerifierReport::add_check(std::string name, double residual,
                               double tolerance) {
  residuals.push_back(Check{std::move(name), residual, tolerance});
}

void VerifierReport::finalize() {
  if (skip_reason) {
    pass = false;
    return;
  }
  // NaN residuals fail: the comparison is false.
  pass = !error && std::all_of(residuals.begin(), residuals.end(),
                               [](const Check& c) { return c.ok(); });
}

void VerifierReport::skip(std::string reason) {
  skip_reason = std::move(reason);
  pass = false;
}

Status VerifierReport::status() const noexcept {
  if (skip_reason) return Status::Skip;
  return pass ? Status::Pass : Status::Fail;
}

const Check* VerifierReport::binding_check() const {
  const Check* best = nullptr;
  double best_ratio = -1.0;
  for (const Check& c : residuals) {
    const double denom = c.tolerance > 0.0 ? c.tolerance
                                           : std::numeric_limits<double>::min();
    double ratio = c.residual / denom;
    if (std::isnan(ratio)) ratio = std::numeric_limits<double>::infinity();
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best = &c;
    }
  }
  return best;
}

void Digest::mix(const void* data, std::size_t size) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < size; ++i) {
    state_ ^= bytes[i];
    state_ *= 0x100000001b3ULL;
  }
}

Digest& Digest::add(std::string_view text) {
  add(static_cast<std::uint64_t>(text.size()));
  mix(text.data(), text.size());
  return *this;
}

Digest& Digest::add(double value) {
  if (value == 0.0) value = 0.0;  // fold -0.0
  mix(&value, sizeof value);
  return *this;
}

Digest& Digest::add(std::uint64_t value) {
  mix(&value, sizeof value);
  return *this;
}

Digest& Digest::add(const Matrix& m) {
  add(static_cast<std::uint64_t>(m.rows()));
  add(static_cast<std::uint64_t>(m.cols()));
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      add(m(i, j).real());
      add(m(i, j).imag());
    }
  }
  return *this;
}

std::string Digest::hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(state_));
  return buf;
}

}  // namespace eframe
