// Copyright 2026 The qhelab authors
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

#include <stdexcept>
#include <string>

namespace qhelab {

/// Malformed circuit or state file; carries the 1-based offending line.
class parse_error : public std::runtime_error {
  public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

  private:
    int line_;
};

/// A party aborts the protocol run (e.g. one-time-table shortfall or reuse).
/// The run engine catches this and returns a report with the transcript so
/// far, rather than propagating the exception.
class abort_error : public std::runtime_error {
  public:
    explicit abort_error(const std::string& reason) : std::runtime_error(reason) {}
};

/// Numerical state violated an internal invariant (norms, probabilities).
class internal_error : public std::logic_error {
  public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qhelab
