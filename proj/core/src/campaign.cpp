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

#include "eframe/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include "eframe/basis.hpp"
#include "eframe/decomposition.hpp"
#include "eframe/errors.hpp"
#include "eframe/generators.hpp"
#include "eframe/theorems.hpp"
#include "json_codec.hpp"

namespace eframe {
namespace {

using json_codec::json;

// Sub-stream salts within a trial.
enum Salt : std::uint64_t {
  kFrameSalt = 1,
  kMatrixSalt = 2,
  kDiagonalSalt = 3,
  kBesselSalt = 4,
  kOnbSalt = 5,
  kSampleSalt = 6,
};

constexpr std::size_t kSamplesPerTrial = 20;

bool is_known(std::string_view name) {
  return name == kAnalyzeVerifier || is_verifier_name(name);
}

VerifierReport run_analyze(const TrialInputs& in, const Tolerances& tol) {
  const EFrameSystem sys(in.frame, in.map, tol);
  VerifierReport r;
  r.inputs_digest = Digest().add("analyze").add(in.frame).add(in.map.entries()).hex();
  r.predicted = bessel_sum_bound(sys.transformed());
  if (auto b = optimal_frame_bounds(sys)) r.optimal = *b;

  Rng rng(derive_seed(in.seed, kSampleSalt));
  double adjoint_gap = 0.0;
  for (std::size_t s = 0; s < kSamplesPerTrial; ++s) {
    const Vector c = rng.uniform_matrix(sys.size(), 1);
    const Vector f = rng.uniform_matrix(sys.dim(), 1);
    const Scalar lhs = inner(synthesis(sys, c), f);
    const Scalar rhs = inner(c, analysis(sys, f));
    adjoint_gap = std::max(adjoint_gap, std::abs(lhs - rhs) / (c.norm() * f.norm()));
  }
  r.add_check("adjointness", adjoint_gap, tol.rel_tol);

  // T_E T_E^* assembled column by column through the two operators.
  const Index d = sys.dim();
  Matrix composed(d, d);
  for (Index i = 0; i < d; ++i) {
    composed.col(i) = synthesis(sys, analysis(sys, Vector::Unit(d, i)));
  }
  const double s_norm = operator_norm(sys.frame_operator());
  r.add_check("frame_operator_identity",
              operator_norm(sys.frame_operator() - composed),
              tol.rel_tol * std::max(s_norm, 1e-300));
  r.add_check("bessel_upper_violation",
              std::max(0.0, sys.spectrum().max - r.predicted->upper),
              tol.rel_tol * std::max(r.predicted->upper, 1e-300));

  if (!sys.is_frame()) {
    r.skip("not an E-frame");
  } else {
    r.finalize();
  }
  return r;
}

VerifierReport run_eonb(const TrialInputs& in, const Tolerances& tol) {
  VerifierReport r;
  const Index d = in.frame.dim();
  if (in.map.size() != d) {
    r.skip("requires len == dim");
    return r;
  }
  const VectorSequence onb = gen_onb(d, derive_seed(in.seed, kOnbSalt));
  r.inputs_digest = Digest().add("eonb").add(onb).add(in.map.entries()).hex();
  const EONB basis = e_onb_from_onb(onb, in.map, tol);
  const EOnbCheck check = e_onb_check(basis, tol);

  Rng rng(derive_seed(in.seed, kSampleSalt));
  double recon = 0.0;
  double parseval = 0.0;
  for (std::size_t s = 0; s < kSamplesPerTrial; ++s) {
    const Vector f = rng.uniform_matrix(d, 1);
    const CoefficientVector c = expansion_coefficients(basis, f);
    recon = std::max(recon, (f - expand(basis, c)).norm() / f.norm());
    parseval = std::max(parseval, std::abs(c.norm() - f.norm()) / f.norm());
  }
  r.add_check("orthonormality", check.orthonormality_residual, tol.orthonorm_tol);
  r.add_check("reconstruction", recon, tol.rel_tol);
  r.add_check("parseval", parseval, tol.rel_tol);
  r.finalize();
  return r;
}

VerifierReport run_decomp(const TrialInputs& in, const ExperimentConfig& cfg) {
  const Tolerances& tol = cfg.tolerances;
  VerifierReport r;
  if (in.map.size() != in.frame.dim()) {
    r.skip("requires len == dim");
    return r;
  }
  const EFrameSystem sys(in.frame, in.map, tol);
  r.inputs_digest = Digest()
                        .add("decomp")
                        .add(in.frame)
                        .add(in.map.entries())
                        .add(cfg.epsilon)
                        .hex();
  if (auto b = optimal_frame_bounds(sys)) r.optimal = *b;
  const DecompositionResult dr = three_unitary_decomposition(sys, cfg.epsilon);
  const DecompositionResiduals res = decomposition_residuals(sys, dr);

  const double h_max = sys.transformed().columns().colwise().norm().maxCoeff();
  r.add_check("identity_gap_excess",
              std::max(0.0, res.identity_gap - (1.0 - cfg.epsilon / 2.0)), 1e-12);
  r.add_check("polar", res.polar, tol.rel_tol * operator_norm(dr.d));
  r.add_check("v_unitarity", res.v_unitarity, tol.orthonorm_tol);
  r.add_check("w_unitarity", res.w_unitarity, tol.orthonorm_tol);
  r.add_check("reconstruction", res.reconstruction,
              tol.rel_tol * dr.scale * h_max);
  for (std::size_t i = 0; i < res.basis_orthonormality.size(); ++i) {
    r.add_check("basis" + std::to_string(i + 1) + "_orthonormality",
                res.basis_orthonormality[i], tol.orthonorm_tol);
  }
  r.finalize();
  return r;
}

VerifierReport run_dual(const TrialInputs& in, const Tolerances& tol) {
  const EFrameSystem sys(in.frame, in.map, tol);
  VerifierReport r;
  r.inputs_digest = Digest().add("dual").add(in.frame).add(in.map.entries()).hex();
  if (auto b = optimal_frame_bounds(sys)) r.optimal = *b;
  const VectorSequence dual = canonical_dual(sys);
  Rng rng(derive_seed(in.seed, kSampleSalt));
  double worst = 0.0;
  for (std::size_t s = 0; s < kSamplesPerTrial; ++s) {
    const Vector f = rng.uniform_matrix(sys.dim(), 1);
    worst = std::max(worst, (f - reconstruct(sys, dual, f)).norm() / f.norm());
  }
  r.add_check("reconstruction", worst, tol.rel_tol);
  r.finalize();
  return r;
}

VerifierReport dispatch(std::string_view name, const TrialInputs& in,
                        const ExperimentConfig& cfg) {
  const Tolerances& tol = cfg.tolerances;
  if (name == kAnalyzeVerifier) return run_analyze(in, tol);
  if (name == "thm3") return transfer_bounds_verify(in.frame, in.map, tol).report;
  if (name == "diag") {
    const Vector lambdas =
        in.map.diagonal()
            ? Vector(in.map.entries().diagonal())
            : gen_random_diagonal(in.map.size(), derive_seed(in.seed, kDiagonalSalt));
    return diagonal_corollary_verify(lambdas, in.frame, tol);
  }
  if (name == "gram") {
    if (in.frame.size() != in.frame.dim()) {
      VerifierReport r;
      r.skip("requires len == dim");
      return r;
    }
    return gram_corollary_verify(in.frame, tol);
  }
  if (name == "bessel-id") {
    return bessel_identity_verify(in.frame, in.map, kSamplesPerTrial,
                                  derive_seed(in.seed, kBesselSalt), tol);
  }
  if (name == "ab") return ab_theorem_verify(in.frame, in.map, tol).report;
  if (name == "eonb") return run_eonb(in, tol);
  if (name == "decomp") return run_decomp(in, cfg);
  if (name == "dual") return run_dual(in, tol);
  throw InvalidArgument("unknown verifier '" + std::string(name) + "'");
}

VerifierReport error_report(std::string_view name, std::size_t trial,
                            const std::string& message) {
  VerifierReport r;
  r.verifier = std::string(name);
  r.trial = trial;
  r.error = message;
  r.add_check("error", 1.0, 0.0);
  r.finalize();
  return r;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_optional(const std::optional<double>& x) {
  return x ? format_number(*x) : std::string();
}

}  // namespace

TrialInputs make_trial_inputs(const ExperimentConfig& cfg, std::size_t trial) {
  TrialInputs in;
  in.trial = trial;
  in.seed = derive_seed(cfg.seed, trial);
  const Tolerances& tol = cfg.tolerances;

  switch (cfg.frame.kind) {
    case FrameKind::Random:
      in.frame = gen_random_frame(cfg.dim, cfg.len,
                                  derive_seed(in.seed, kFrameSalt),
                                  cfg.frame.jitter, tol);
      break;
    case FrameKind::Standard:
      in.frame = VectorSequence::standard_basis(cfg.dim);
      break;
    case FrameKind::Onb:
      in.frame = gen_onb(cfg.dim, derive_seed(in.seed, kFrameSalt));
      break;
    case FrameKind::Explicit:
      in.frame = VectorSequence(cfg.frame.vectors);
      break;
  }

  GenSpec spec = cfg.matrix;
  if (!cfg.matrix_seed_pinned) spec.seed = derive_seed(in.seed, kMatrixSalt);
  in.map = gen_matrix(spec, cfg.len, tol);
  return in;
}

VerifierReport run_verifier(std::string_view name, const TrialInputs& inputs,
                            const ExperimentConfig& config) {
  if (!is_known(name)) {
    throw InvalidArgument("unknown verifier '" + std::string(name) + "'");
  }
  VerifierReport r;
  try {
    r = dispatch(name, inputs, config);
  } catch (const NotAFrame& e) {
    r = {};
    r.skip(std::string("precondition: ") + e.what());
  } catch (const SingularMatrix& e) {
    r = {};
    r.skip(std::string("precondition: ") + e.what());
  } catch (const NotRieszBasis& e) {
    r = {};
    r.skip(std::string("precondition: ") + e.what());
  } catch (const ZeroDiagonal& e) {
    r = {};
    r.skip(std::string("precondition: ") + e.what());
  } catch (const Error& e) {
    r = error_report(name, inputs.trial, e.what());
  }
  r.verifier = std::string(name);
  r.trial = inputs.trial;
  return r;
}

CampaignResult run_campaign(const ExperimentConfig& config,
                            std::span<const std::string> verifiers,
                            unsigned jobs) {
  for (const std::string& name : verifiers) {
    if (!is_known(name)) {
      throw InvalidArgument("unknown verifier '" + name + "'");
    }
  }
  const auto start = std::chrono::steady_clock::now();

  CampaignResult result;
  result.verifiers.assign(verifiers.begin(), verifiers.end());
  const std::size_t per_trial = verifiers.size();
  result.reports.resize(config.trials * per_trial);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < config.trials; t = next++) {
      VerifierReport* slot = result.reports.data() + t * per_trial;
      try {
        const TrialInputs in = make_trial_inputs(config, t);
        for (std::size_t v = 0; v < per_trial; ++v) {
          slot[v] = run_verifier(verifiers[v], in, config);
        }
      } catch (const Error& e) {
        for (std::size_t v = 0; v < per_trial; ++v) {
          slot[v] = error_report(verifiers[v], t,
                                 std::string("input generation: ") + e.what());
        }
      }
    }
  };

  const unsigned threads =
      std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(config.trials)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  CampaignSummary& s = result.summary;
  for (const std::string& name : verifiers) s.per_verifier[name];
  for (const VerifierReport& r : result.reports) {
    VerifierTally& tally = s.per_verifier[r.verifier];
    switch (r.status()) {
      case Status::Pass: ++s.pass; ++tally.pass; break;
      case Status::Fail: ++s.fail; ++tally.fail; break;
      case Status::Skip: ++s.skip; ++tally.skip; break;
    }
    if (r.status() != Status::Skip) {
      if (const Check* c = r.binding_check()) {
        if (std::isnan(c->residual) || c->residual > tally.worst_residual) {
          tally.worst_residual = c->residual;
        }
      }
    }
  }
  s.wall_time_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

std::string report_to_json(const VerifierReport& report) {
  return json_codec::encode(report).dump(2);
}

std::string campaign_to_json(const ExperimentConfig& config,
                             const CampaignResult& result) {
  json reports = json::array();
  for (const VerifierReport& r : result.reports) {
    reports.push_back(json_codec::encode(r));
  }
  const CampaignSummary& s = result.summary;
  json per_verifier = json::object();
  json worst = json::object();
  for (const auto& [name, t] : s.per_verifier) {
    per_verifier[name] = json{{"pass", t.pass}, {"fail", t.fail}, {"skip", t.skip}};
    worst[name] = json_codec::number(t.worst_residual);
  }
  json out{{"config", json::parse(config_to_json(config))},
           {"verifiers", result.verifiers},
           {"reports", std::move(reports)},
           {"summary",
            {{"counts", {{"pass", s.pass}, {"fail", s.fail}, {"skip", s.skip}}},
             {"per_verifier", std::move(per_verifier)},
             {"worst_residual", std::move(worst)},
             {"wall_time_ms", s.wall_time_ms}}}};
  return out.dump(2) + "\n";
}

std::string campaign_to_csv(const CampaignResult& result) {
  std::ostringstream out;
  out << "trial,verifier,A_pred,B_pred,A_opt,B_opt,residual,status\n";
  for (const VerifierReport& r : result.reports) {
    const Check* c = r.binding_check();
    out << r.trial << ',' << r.verifier << ','
        << (r.predicted ? format_optional(r.predicted->lower) : "") << ','
        << (r.predicted ? format_number(r.predicted->upper) : "") << ','
        << (r.optimal ? format_optional(r.optimal->lower) : "") << ','
        << (r.optimal ? format_number(r.optimal->upper) : "") << ','
        << (c ? format_number(c->residual) : "") << ',' << to_string(r.status())
        << '\n';
  }
  return out.str();
}

}  // namespace eframe
