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
#include <stdexcept>
#include <string>

namespace eframe {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define EFRAME_DECLARE_ERROR(Name)        \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

EFRAME_DECLARE_ERROR(InvalidArgument);
EFRAME_DECLARE_ERROR(DimensionMismatch);
EFRAME_DECLARE_ERROR(ShapeMismatch);
EFRAME_DECLARE_ERROR(SingularInput);
EFRAME_DECLARE_ERROR(SingularMatrix);
EFRAME_DECLARE_ERROR(NotPSD);
EFRAME_DECLARE_ERROR(NotAFrame);
EFRAME_DECLARE_ERROR(NotRieszBasis);
EFRAME_DECLARE_ERROR(NotOrthonormal);
EFRAME_DECLARE_ERROR(ZeroDiagonal);
EFRAME_DECLARE_ERROR(BadEpsilon);
EFRAME_DECLARE_ERROR(BadSpec);
EFRAME_DECLARE_ERROR(DegenerateDraw);

#undef EFRAME_DECLARE_ERROR

// Malformed JSON input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("parse error at line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Well-formed JSON that violates the schema. field() is the offending key.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace eframe
