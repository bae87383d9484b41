// Copyright 2026 The Authors.
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

#ifndef MATALLOC_ERRORS_H_
#define MATALLOC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace matalloc {

// A caller broke a documented precondition (bad input, dependent set, ...).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration or expansion would exceed a configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An algorithm invariant failed. Always a bug, never an outcome.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed instance document. `path` names the offending field.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Raised by a guessed-threshold routine when the guess is provably too
// ambitious; binary searches treat it as "failed at this T".
class GuessRejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace matalloc

#endif  // MATALLOC_ERRORS_H_
