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

// JSON encoding shared by the config parser and the report writers.
// Complex scalars are [re, im]; matrices are row-major lists of rows.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "eframe/bounds.hpp"
#include "eframe/hilbert.hpp"
#include "eframe/report.hpp"

namespace eframe::json_codec {

using json = nlohmann::json;

// Parses text, mapping syntax errors to ParseError with line/column.
json parse(std::string_view text);

json encode(Scalar z);
json encode_vector(const Vector& v);
json encode_matrix(const Matrix& m);
json encode(const SpectralData& s);
json encode(const FrameBounds& b);
json encode(const VerifierReport& r);

// Decoders throw ValidationError(field, ...) on shape errors; `path` is the
// dotted location used in messages.
Scalar decode_scalar(const json& j, const std::string& field,
                     const std::string& path);
std::vector<Scalar> decode_scalars(const json& j, const std::string& field,
                                   const std::string& path);
Matrix decode_matrix(const json& j, const std::string& field,
                     const std::string& path);

// Non-finite doubles become null.
json number(double x);

}  // namespace eframe::json_codec
