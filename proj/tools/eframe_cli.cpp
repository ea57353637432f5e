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

// eframe: analyze E-frame systems and run theorem-verification campaigns.
//
//   eframe analyze --config cfg.json --out report.json
//   eframe verify  --theorems thm3,ab --config cfg.json --out report.json
//                  --csv bounds.csv
//   eframe gen     --spec spec.json --out matrix.json
//
// Global options: --seed <u64> overrides the configured seed, --tol <real>
// overrides rel_tol, --jobs <n> runs trials on n threads.
//
// Exit codes: 0 all checks passed (or skipped), 1 some check failed,
// 2 bad arguments, configuration or I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eframe/eframe.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  unsigned jobs = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw eframe::InvalidArgument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw eframe::InvalidArgument("cannot write " + path);
  out << contents;
  if (!out.flush()) throw eframe::InvalidArgument("failed writing " + path);
}

eframe::ExperimentConfig load_config(const std::string& path,
                                     const GlobalOptions& global) {
  eframe::ExperimentConfig cfg = eframe::parse_config(read_file(path));
  if (global.seed) cfg.seed = *global.seed;
  if (global.tol) {
    cfg.tolerances.rel_tol = *global.tol;
    cfg.tolerances.validate();
  }
  return cfg;
}

int run_campaign_command(const eframe::ExperimentConfig& cfg,
                         const std::vector<std::string>& verifiers,
                         const std::string& out_path,
                         const std::string& csv_path, unsigned jobs) {
  const eframe::CampaignResult result =
      eframe::run_campaign(cfg, verifiers, jobs);
  write_file(out_path, eframe::campaign_to_json(cfg, result));
  if (!csv_path.empty()) write_file(csv_path, eframe::campaign_to_csv(result));

  const auto& s = result.summary;
  std::cerr << "pass " << s.pass << ", fail " << s.fail << ", skip " << s.skip
            << " (" << s.wall_time_ms << " ms)\n";
  for (const auto& r : result.reports) {
    if (r.status() != eframe::Status::Fail) continue;
    std::cerr << "FAIL trial " << r.trial << " " << r.verifier;
    if (r.error) std::cerr << ": " << *r.error;
    for (const auto& c : r.residuals) {
      if (!c.ok()) {
        std::cerr << " [" << c.name << " " << c.residual << " > " << c.tolerance
                  << "]";
      }
    }
    std::cerr << "\n";
  }
  return s.fail == 0 ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"E-frame analysis and theorem verification"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--seed", global.seed, "Override the configured seed");
  app.add_option("--tol", global.tol, "Override rel_tol")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", global.jobs, "Worker threads")
      ->check(CLI::Range(1u, 256u));

  std::string config_path;
  std::string out_path;
  std::string csv_path;
  std::string spec_path;
  std::vector<std::string> theorems;

  auto* analyze = app.add_subcommand("analyze", "Optimal E-frame bounds per trial");
  analyze->add_option("--config", config_path, "Experiment config (JSON)")
      ->required();
  analyze->add_option("--out", out_path, "Report output path (JSON)")
      ->required();
  analyze->fallthrough();

  auto* verify = app.add_subcommand("verify", "Run theorem verifiers");
  verify->add_option("--theorems", theorems,
                     "Comma-separated verifiers: thm3,diag,gram,bessel-id,ab,"
                     "eonb,decomp,dual (default: the config's list)")
      ->delimiter(',');
  verify->add_option("--config", config_path, "Experiment config (JSON)")
      ->required();
  verify->add_option("--out", out_path, "Report output path (JSON)")
      ->required();
  verify->add_option("--csv", csv_path, "Bound table output path (CSV)");
  verify->fallthrough();

  auto* gen = app.add_subcommand("gen", "Generate a matrix mapping");
  gen->add_option("--spec", spec_path, "Generator spec (JSON)")->required();
  gen->add_option("--out", out_path, "Matrix output path (JSON)")->required();
  gen->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) {
      const auto cfg = load_config(config_path, global);
      const std::vector<std::string> names{std::string(eframe::kAnalyzeVerifier)};
      return run_campaign_command(cfg, names, out_path, "", global.jobs);
    }
    if (*verify) {
      const auto cfg = load_config(config_path, global);
      if (theorems.empty()) theorems = cfg.theorems;
      if (theorems.empty()) {
        std::cerr << "error: no verifiers given (--theorems or config "
                     "\"theorems\")\n";
        return kExitUsage;
      }
      for (const auto& name : theorems) {
        if (!eframe::is_verifier_name(name)) {
          std::cerr << "error: unknown verifier '" << name << "'\n";
          return kExitUsage;
        }
      }
      return run_campaign_command(cfg, theorems, out_path, csv_path,
                                  global.jobs);
    }
    if (*gen) {
      eframe::GenRequest req = eframe::parse_gen_request(read_file(spec_path));
      if (global.seed) req.spec.seed = *global.seed;
      eframe::Tolerances tol;
      if (global.tol) tol.rel_tol = *global.tol;
      const eframe::MatrixMap e = eframe::gen_matrix(req.spec, req.n, tol);
      write_file(out_path, eframe::matrix_map_to_json(e) + "\n");
      return kExitOk;
    }
  } catch (const eframe::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const eframe::ValidationError& e) {
    std::cerr << "error: invalid config: " << e.what() << "\n";
    return kExitUsage;
  } catch (const eframe::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
