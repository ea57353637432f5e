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

#include "json_codec.hpp"

#include <cmath>

#include "eframe/errors.hpp"

namespace eframe::json_codec {

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min<std::size_t>(
        e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(line, column, e.what());
  }
}

json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

json encode(Scalar z) { return json::array({number(z.real()), number(z.imag())}); }

json encode_vector(const Vector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(encode(v(i)));
  return out;
}

json encode_matrix(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(encode(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json encode(const SpectralData& s) {
  return json{{"sigma_max", number(s.sigma_max)},
              {"sigma_min", number(s.sigma_min)},
              {"hs_norm", number(s.hs_norm)}};
}

json encode(const FrameBounds& b) {
  return json{{"lower", b.lower ? number(*b.lower) : json(nullptr)},
              {"upper", number(b.upper)},
              {"provenance", std::string(to_string(b.provenance))}};
}

json encode(const VerifierReport& r) {
  json residuals = json::object();
  json tolerances = json::object();
  for (const Check& c : r.residuals) {
    residuals[c.name] = number(c.residual);
    tolerances[c.name] = number(c.tolerance);
  }
  json out{{"verifier", r.verifier},
           {"trial", r.trial},
           {"inputs_digest", r.inputs_digest},
           {"predicted", r.predicted ? encode(*r.predicted) : json(nullptr)},
           {"optimal", r.optimal ? encode(*r.optimal) : json(nullptr)},
           {"residuals", std::move(residuals)},
           {"tolerances", std::move(tolerances)},
           {"pass", r.pass},
           {"skip_reason", r.skip_reason ? json(*r.skip_reason) : json(nullptr)},
           {"status", std::string(to_string(r.status()))}};
  if (r.error) out["error"] = *r.error;
  return out;
}

Scalar decode_scalar(const json& j, const std::string& field,
                     const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw ValidationError(field, path + " must be a complex number [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Scalar> decode_scalars(const json& j, const std::string& field,
                                   const std::string& path) {
  if (!j.is_array()) {
    throw ValidationError(field, path + " must be a list of [re, im] pairs");
  }
  std::vector<Scalar> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(
        decode_scalar(j[i], field, path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Matrix decode_matrix(const json& j, const std::string& field,
                     const std::string& path) {
  if (!j.is_array() || j.empty()) {
    throw ValidationError(field, path + " must be a non-empty list of rows");
  }
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  Matrix m;
  for (std::size_t i = 0; i < rows; ++i) {
    const auto row =
        decode_scalars(j[i], field, path + "[" + std::to_string(i) + "]");
    if (i == 0) {
      cols = row.size();
      if (cols == 0) throw ValidationError(field, path + " has an empty row");
      m.resize(static_cast<Index>(rows), static_cast<Index>(cols));
    } else if (row.size() != cols) {
      throw ValidationError(field, path + " rows differ in length");
    }
    for (std::size_t k = 0; k < cols; ++k) {
      m(static_cast<Index>(i), static_cast<Index>(k)) = row[k];
    }
  }
  return m;
}

}  // namespace eframe::json_codec
