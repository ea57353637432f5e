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

#include "eframe/config.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>

#include "eframe/errors.hpp"
#include "json_codec.hpp"

namespace eframe {
namespace {

using json_codec::json;

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                         const std::string& prefix) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ValidationError(key, "unknown key " + prefix + key);
    }
  }
}

const json& require(const json& obj, const std::string& key,
                    const std::string& prefix) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ValidationError(key, "missing required key " + prefix + key);
  }
  return *it;
}

std::uint64_t as_unsigned(const json& j, const std::string& field,
                          const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  }
  throw ValidationError(field, path + " must be a non-negative integer");
}

double as_double(const json& j, const std::string& field,
                 const std::string& path) {
  if (!j.is_number()) throw ValidationError(field, path + " must be a number");
  return j.get<double>();
}

bool as_bool(const json& j, const std::string& field, const std::string& path) {
  if (!j.is_boolean()) throw ValidationError(field, path + " must be a boolean");
  return j.get<bool>();
}

GenSpec parse_matrix_spec(const json& m, Index n, const std::string& prefix,
                          bool& seed_given) {
  if (!m.is_object()) throw ValidationError("matrix", "matrix must be an object");
  const json& kind_json = require(m, "kind", prefix);
  if (!kind_json.is_string()) {
    throw ValidationError("kind", prefix + "kind must be a string");
  }
  const auto kind = matrix_kind_from_string(kind_json.get<std::string>());
  if (!kind) {
    throw ValidationError("kind", prefix + "kind '" +
                                      kind_json.get<std::string>() +
                                      "' is not one of identity, diagonal, "
                                      "gram, randomhs, dense");
  }
  GenSpec spec;
  spec.kind = *kind;
  seed_given = false;

  auto read_common = [&](bool seeded) {
    if (auto it = m.find("invertible"); it != m.end()) {
      spec.invertible = as_bool(*it, "invertible", prefix + "invertible");
    }
    if (seeded) {
      if (auto it = m.find("seed"); it != m.end()) {
        spec.seed = as_unsigned(*it, "seed", prefix + "seed");
        seed_given = true;
      }
    }
  };

  switch (spec.kind) {
    case MatrixKind::Identity:
      reject_unknown_keys(m, {"kind", "n"}, prefix);
      break;
    case MatrixKind::Diagonal:
      reject_unknown_keys(m, {"kind", "n", "entries", "invertible", "seed"},
                          prefix);
      read_common(true);
      if (auto it = m.find("entries"); it != m.end()) {
        spec.diagonal =
            json_codec::decode_scalars(*it, "entries", prefix + "entries");
        if (static_cast<Index>(spec.diagonal.size()) != n) {
          throw ValidationError("entries", prefix + "entries must have " +
                                               std::to_string(n) + " values");
        }
        if (spec.invertible &&
            std::any_of(spec.diagonal.begin(), spec.diagonal.end(),
                        [](Scalar z) { return z == Scalar(0.0); })) {
          throw ValidationError("entries",
                                prefix + "entries must be nonzero for an "
                                         "invertible map");
        }
      }
      break;
    case MatrixKind::Gram:
      reject_unknown_keys(m, {"kind", "n", "invertible", "seed"}, prefix);
      read_common(true);
      break;
    case MatrixKind::RandomHS: {
      reject_unknown_keys(m, {"kind", "n", "rho", "invertible", "seed"}, prefix);
      read_common(true);
      spec.rho = as_double(require(m, "rho", prefix), "rho", prefix + "rho");
      if (!(spec.rho > 0.0 && spec.rho < 1.0)) {
        throw ValidationError("rho", prefix + "rho must lie in (0, 1)");
      }
      break;
    }
    case MatrixKind::DenseExplicit:
      reject_unknown_keys(m, {"kind", "n", "entries", "invertible"}, prefix);
      read_common(false);
      spec.entries = json_codec::decode_matrix(require(m, "entries", prefix),
                                               "entries", prefix + "entries");
      if (spec.entries.rows() != n || spec.entries.cols() != n) {
        throw ValidationError("entries", prefix + "entries must be " +
                                             std::to_string(n) + "x" +
                                             std::to_string(n));
      }
      break;
  }
  return spec;
}

FrameSpec parse_frame_spec(const json& f, Index dim, Index len) {
  const std::string prefix = "frame.";
  if (!f.is_object()) throw ValidationError("frame", "frame must be an object");
  const json& kind_json = require(f, "kind", prefix);
  const std::string kind = kind_json.is_string() ? kind_json.get<std::string>() : "";
  FrameSpec spec;
  if (kind == "random") {
    reject_unknown_keys(f, {"kind", "jitter"}, prefix);
    spec.kind = FrameKind::Random;
    if (auto it = f.find("jitter"); it != f.end()) {
      spec.jitter = as_double(*it, "jitter", prefix + "jitter");
      if (!(spec.jitter >= 0.0) || !std::isfinite(spec.jitter)) {
        throw ValidationError("jitter", prefix + "jitter must be >= 0");
      }
    }
  } else if (kind == "standard" || kind == "onb") {
    reject_unknown_keys(f, {"kind"}, prefix);
    spec.kind = kind == "onb" ? FrameKind::Onb : FrameKind::Standard;
    if (len != dim) {
      throw ValidationError("kind", prefix + "kind '" + kind +
                                        "' requires len == dim");
    }
  } else if (kind == "explicit") {
    reject_unknown_keys(f, {"kind", "vectors"}, prefix);
    spec.kind = FrameKind::Explicit;
    // One row per vector in the file; stored column-wise.
    const Matrix rows = json_codec::decode_matrix(require(f, "vectors", prefix),
                                                  "vectors", prefix + "vectors");
    if (rows.rows() != len || rows.cols() != dim) {
      throw ValidationError("vectors", prefix + "vectors must list " +
                                           std::to_string(len) +
                                           " vectors of length " +
                                           std::to_string(dim));
    }
    spec.vectors = rows.transpose();
  } else {
    throw ValidationError("kind", prefix +
                                      "kind must be one of random, standard, "
                                      "onb, explicit");
  }
  return spec;
}

Tolerances parse_tolerances(const json& t) {
  const std::string prefix = "tolerances.";
  if (!t.is_object()) {
    throw ValidationError("tolerances", "tolerances must be an object");
  }
  reject_unknown_keys(t, {"rel_tol", "rank_tol", "orthonorm_tol"}, prefix);
  Tolerances tol;
  auto read = [&](const char* key, double& slot) {
    if (auto it = t.find(key); it != t.end()) {
      slot = as_double(*it, key, prefix + key);
      if (!(slot > 0.0)) {
        throw ValidationError(key, prefix + key + " must be positive");
      }
    }
  };
  read("rel_tol", tol.rel_tol);
  read("rank_tol", tol.rank_tol);
  read("orthonorm_tol", tol.orthonorm_tol);
  if (!(tol.rel_tol < 1.0)) {
    throw ValidationError("rel_tol", prefix + "rel_tol must be < 1");
  }
  return tol;
}

json encode_gen_spec(const GenSpec& spec, bool with_seed) {
  json m{{"kind", std::string(to_string(spec.kind))}};
  switch (spec.kind) {
    case MatrixKind::Identity:
      break;
    case MatrixKind::Diagonal: {
      if (!spec.diagonal.empty()) {
        json entries = json::array();
        for (Scalar z : spec.diagonal) entries.push_back(json_codec::encode(z));
        m["entries"] = std::move(entries);
      }
      m["invertible"] = spec.invertible;
      break;
    }
    case MatrixKind::Gram:
      m["invertible"] = spec.invertible;
      break;
    case MatrixKind::RandomHS:
      m["rho"] = spec.rho;
      m["invertible"] = spec.invertible;
      break;
    case MatrixKind::DenseExplicit:
      m["entries"] = json_codec::encode_matrix(spec.entries);
      m["invertible"] = spec.invertible;
      break;
  }
  if (with_seed) m["seed"] = spec.seed;
  return m;
}

}  // namespace

const std::vector<std::string_view>& verifier_names() {
  static const std::vector<std::string_view> names = {
      "thm3", "diag", "gram", "bessel-id", "ab", "eonb", "decomp", "dual"};
  return names;
}

bool is_verifier_name(std::string_view name) {
  const auto& names = verifier_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

ExperimentConfig parse_config(std::string_view text) {
  const json root = json_codec::parse(text);
  if (!root.is_object()) {
    throw ValidationError("config", "top level must be a JSON object");
  }
  reject_unknown_keys(root,
                      {"dim", "len", "trials", "seed", "matrix", "frame",
                       "tolerances", "epsilon", "theorems"},
                      "");

  ExperimentConfig cfg;
  const std::uint64_t dim = as_unsigned(require(root, "dim", ""), "dim", "dim");
  if (dim < 1) throw ValidationError("dim", "dim must be >= 1");
  const std::uint64_t len = as_unsigned(require(root, "len", ""), "len", "len");
  if (len < dim) throw ValidationError("len", "len must be >= dim");
  const std::uint64_t trials =
      as_unsigned(require(root, "trials", ""), "trials", "trials");
  if (trials < 1) throw ValidationError("trials", "trials must be >= 1");
  cfg.dim = static_cast<Index>(dim);
  cfg.len = static_cast<Index>(len);
  cfg.trials = static_cast<std::size_t>(trials);
  cfg.seed = as_unsigned(require(root, "seed", ""), "seed", "seed");

  bool seed_given = false;
  cfg.matrix = parse_matrix_spec(require(root, "matrix", ""), cfg.len,
                                 "matrix.", seed_given);
  if (root["matrix"].contains("n")) {
    throw ValidationError("n", "matrix.n is implied by len");
  }
  cfg.matrix_seed_pinned = seed_given;

  if (auto it = root.find("frame"); it != root.end()) {
    cfg.frame = parse_frame_spec(*it, cfg.dim, cfg.len);
  }
  if (auto it = root.find("tolerances"); it != root.end()) {
    cfg.tolerances = parse_tolerances(*it);
  }
  if (auto it = root.find("epsilon"); it != root.end()) {
    cfg.epsilon = as_double(*it, "epsilon", "epsilon");
    if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0)) {
      throw ValidationError("epsilon", "epsilon must lie in (0, 1)");
    }
  }
  if (auto it = root.find("theorems"); it != root.end()) {
    if (!it->is_array()) {
      throw ValidationError("theorems", "theorems must be a list of names");
    }
    for (const json& name : *it) {
      if (!name.is_string() || !is_verifier_name(name.get<std::string>())) {
        throw ValidationError("theorems",
                              "unknown verifier " + name.dump() +
                                  " (expected thm3, diag, gram, bessel-id, ab, "
                                  "eonb, decomp, dual)");
      }
      cfg.theorems.push_back(name.get<std::string>());
    }
  }
  return cfg;
}

std::string config_to_json(const ExperimentConfig& cfg) {
  json frame;
  switch (cfg.frame.kind) {
    case FrameKind::Random:
      frame = json{{"kind", "random"}, {"jitter", cfg.frame.jitter}};
      break;
    case FrameKind::Standard:
      frame = json{{"kind", "standard"}};
      break;
    case FrameKind::Onb:
      frame = json{{"kind", "onb"}};
      break;
    case FrameKind::Explicit:
      frame = json{{"kind", "explicit"},
                   {"vectors", json_codec::encode_matrix(cfg.frame.vectors.transpose())}};
      break;
  }
  json out{{"dim", cfg.dim},
           {"len", cfg.len},
           {"trials", cfg.trials},
           {"seed", cfg.seed},
           {"matrix", encode_gen_spec(cfg.matrix, cfg.matrix_seed_pinned)},
           {"frame", std::move(frame)},
           {"tolerances",
            {{"rel_tol", cfg.tolerances.rel_tol},
             {"rank_tol", cfg.tolerances.rank_tol},
             {"orthonorm_tol", cfg.tolerances.orthonorm_tol}}},
           {"epsilon", cfg.epsilon},
           {"theorems", cfg.theorems}};
  return out.dump(2);
}

GenRequest parse_gen_request(std::string_view text) {
  const json root = json_codec::parse(text);
  if (!root.is_object()) {
    throw ValidationError("spec", "generator spec must be a JSON object");
  }
  const std::uint64_t n = as_unsigned(require(root, "n", ""), "n", "n");
  if (n < 1) throw ValidationError("n", "n must be >= 1");
  GenRequest req;
  req.n = static_cast<Index>(n);
  bool seed_given = false;
  req.spec = parse_matrix_spec(root, req.n, "", seed_given);
  return req;
}

std::string matrix_map_to_json(const MatrixMap& e) {
  json out{{"n", e.size()},
           {"entries", json_codec::encode_matrix(e.entries())},
           {"spectral", json_codec::encode(e.spectral())},
           {"invertible", e.invertible()}};
  return out.dump(2);
}

}  // namespace eframe
