// Copyright 2026 The subfst Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUBFST_ERRORS_HPP_
#define SUBFST_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <string>
#include <vector>

namespace subfst {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands that cannot be combined (mismatched symbol tables, missing merge
// results, unsupported labels).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Input text contains a character outside the declared alphabet.
class InputError : public Error {
 public:
  using Error::Error;
};

// Pattern syntax error. `offset()` is the byte offset into the pattern.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// File contents that violate a format or vocabulary invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Bounded enumeration exceeded its exploration cap.
class EnumerationError : public Error {
 public:
  EnumerationError(const std::string& what, std::size_t partial_count)
      : Error(what), partial_count_(partial_count) {}
  std::size_t partial_count() const { return partial_count_; }

 private:
  std::size_t partial_count_;
};

// A token was fed to a constraint that does not allow it, or the constraint
// automaton accepts nothing.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

// Decoding stopped at `max_steps` in a state that cannot terminate.
class IncompleteGenerationError : public Error {
 public:
  IncompleteGenerationError(const std::string& what, std::vector<int> prefix)
      : Error(what), prefix_(std::move(prefix)) {}
  const std::vector<int>& prefix() const { return prefix_; }

 private:
  std::vector<int> prefix_;
};

}  // namespace subfst

#endif  // SUBFST_ERRORS_HPP_
