// Copyright 2026 The leakage-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEAKAGE_COMMON_HPP
#define LEAKAGE_COMMON_HPP

#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace leakage {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Column-proportionality tolerance used by reduce(). Not env-overridable.
inline constexpr double kSimTol = 1e-9;

namespace detail {
inline double tol_from_env() {
  if (const char* s = std::getenv("LEAKAGE_LAB_TOL")) {
    char* end = nullptr;
    double v = std::strtod(s, &end);
    if (end != s && v > 0) return v;
  }
  return 1e-9;
}
}  // namespace detail

// Absolute tolerance for all probability/leakage comparisons.
// Defaults to 1e-9; LEAKAGE_LAB_TOL overrides it (read once).
inline double tol() {
  static const double v = detail::tol_from_env();
  return v;
}

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

#define LEAKAGE_DEFINE_VALIDATION_ERROR(Name)                     \
  class Name : public ValidationError {                           \
   public:                                                        \
    explicit Name(const std::string& what)                        \
        : ValidationError(std::string(#Name) + ": " + what) {}    \
  }

LEAKAGE_DEFINE_VALIDATION_ERROR(DimensionMismatch);
LEAKAGE_DEFINE_VALIDATION_ERROR(NotAProbabilityVector);
LEAKAGE_DEFINE_VALIDATION_ERROR(OutcomeOutsideSupport);
LEAKAGE_DEFINE_VALIDATION_ERROR(DeltaOutOfRange);
LEAKAGE_DEFINE_VALIDATION_ERROR(EtaOutOfRange);
LEAKAGE_DEFINE_VALIDATION_ERROR(ThetaOutOfRange);
LEAKAGE_DEFINE_VALIDATION_ERROR(ZeroProbabilityEvent);
LEAKAGE_DEFINE_VALIDATION_ERROR(PriorMismatch);
LEAKAGE_DEFINE_VALIDATION_ERROR(EpsOutsideHighPrivacyRegime);
LEAKAGE_DEFINE_VALIDATION_ERROR(ZeroPriorEntry);
LEAKAGE_DEFINE_VALIDATION_ERROR(InvalidParams);
LEAKAGE_DEFINE_VALIDATION_ERROR(DeltaOutsideRegime);

#undef LEAKAGE_DEFINE_VALIDATION_ERROR

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : Error("BudgetExceeded: " + what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("IoError: " + what) {}
};

class FileNotFound : public IoError {
 public:
  explicit FileNotFound(const std::string& path)
      : IoError("file not found: " + path) {}
};

// Input-document syntax error with 1-based line/column position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("ParseError at line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace leakage

#endif  // LEAKAGE_COMMON_HPP
