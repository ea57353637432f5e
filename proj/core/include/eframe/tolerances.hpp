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

namespace eframe {

// Global numerical tolerance policy. Every comparison in the library is
// made against one of these.
struct Tolerances {
  double rel_tol = 1e-9;
  double rank_tol = 1e-12;
  double orthonorm_tol = 1e-8;

  // Throws InvalidArgument unless all values are positive and rel_tol < 1.
  void validate() const;
};

}  // namespace eframe
