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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "eframe/config.hpp"
#include "eframe/frame.hpp"
#include "eframe/report.hpp"

namespace eframe {

// Random draws a trial needs, all derived from (config.seed, trial).
struct TrialInputs {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  VectorSequence frame;
  MatrixMap map;
};

TrialInputs make_trial_inputs(const ExperimentConfig& config,
                              std::size_t trial);

// Name of the pseudo-verifier used by `analyze`.
inline constexpr std::string_view kAnalyzeVerifier = "analyze";

// Runs one verifier on one trial. Unsatisfied hypotheses (not a frame,
// singular E, N != d where required) produce a skipped report.
VerifierReport run_verifier(std::string_view name, const TrialInputs& inputs,
                            const ExperimentConfig& config);

struct VerifierTally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;
  double worst_residual = 0.0;
};

struct CampaignSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;
  std::map<std::string, VerifierTally> per_verifier;
  double wall_time_ms = 0.0;
};

struct CampaignResult {
  std::vector<std::string> verifiers;
  // Ordered by (trial, verifier position), independent of scheduling.
  std::vector<VerifierReport> reports;
  CampaignSummary summary;
};

// Runs every verifier on every trial, using up to `jobs` threads.
// Throws InvalidArgument on an unknown verifier name.
CampaignResult run_campaign(const ExperimentConfig& config,
                            std::span<const std::string> verifiers,
                            unsigned jobs = 1);

// {"config": ..., "reports": [...], "summary": {...}}. The only
// non-deterministic field is summary.wall_time_ms.
std::string campaign_to_json(const ExperimentConfig& config,
                             const CampaignResult& result);

// Header: trial,verifier,A_pred,B_pred,A_opt,B_opt,residual,status
std::string campaign_to_csv(const CampaignResult& result);

std::string report_to_json(const VerifierReport& report);

}  // namespace eframe
