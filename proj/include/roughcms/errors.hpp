// Copyright 2026 The roughcms Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROUGHCMS_ERRORS_HPP_
#define ROUGHCMS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace roughcms {

// Tables of the wrong size, negative or non-finite entries.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arguments outside an operation's domain: unknown points, negative radii,
// n = 0 sequence indices and the like.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed input documents. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0, std::string field = {})
      : std::runtime_error(Compose(what, line, field)),
        line_(line),
        field_(std::move(field)) {}

  int line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  static std::string Compose(const std::string& what, int line,
                             const std::string& field) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    if (!field.empty()) out += "field '" + field + "': ";
    return out + what;
  }

  int line_;
  std::string field_;
};

}  // namespace roughcms

#endif  // ROUGHCMS_ERRORS_HPP_
