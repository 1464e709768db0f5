// Copyright 2026 The msrcpspr Authors
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

#ifndef MSRCPSPR_ERRORS_HPP_
#define MSRCPSPR_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace msrcpspr {

/// Malformed input text. `line()` is 1-based, 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Structurally readable input that violates a model invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arrival rate at or above the stability threshold of a resource queue.
class InstabilityError : public std::runtime_error {
 public:
  InstabilityError(const std::string& what, double critical_rate, int resource = -1)
      : std::runtime_error(what), critical_rate_(critical_rate), resource_(resource) {}
  double critical_rate() const noexcept { return critical_rate_; }
  /// 0-based resource index, -1 when the error concerns a bare operating point.
  int resource() const noexcept { return resource_; }

 private:
  double critical_rate_;
  int resource_;
};

/// The union of precedence and sequencing arcs contains a cycle.
class CycleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace msrcpspr

#endif  // MSRCPSPR_ERRORS_HPP_
