// Copyright 2026 The posgraph Authors
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

namespace posgraph {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation outside a value's domain (unknown variable, partial world, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed base, formula or world text. Line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A measure was requested on a base whose inconsistency degree is positive.
// `degree` is the rational Inc(base) in p/q form.
class InconsistentBaseError : public Error {
 public:
  explicit InconsistentBaseError(const std::string& degree)
      : Error("inconsistent base: Inc = " + degree), degree_(degree) {}

  const std::string& degree() const { return degree_; }

 private:
  std::string degree_;
};

// A configured resource bound was exceeded (enumeration cap, retries).
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A serialized network does not match the expected schema or invariants.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace posgraph
