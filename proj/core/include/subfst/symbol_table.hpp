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

#ifndef SUBFST_SYMBOL_TABLE_HPP_
#define SUBFST_SYMBOL_TABLE_HPP_

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace subfst {

using Label = int;
using StateId = int;

inline constexpr Label kEpsilon = 0;
inline constexpr Label kPhi = 1;
inline constexpr Label kNoLabel = -1;
inline constexpr StateId kNoState = -1;
// Number of reserved ids; the first token gets this id.
inline constexpr Label kFirstToken = 2;

// Bijection between token strings and dense ids. Characters and subwords
// share one id space: a single-character token doubles as that character.
// Id 0 is epsilon and id 1 is the failure symbol; tokens start at 2.
class SymbolTable {
 public:
  SymbolTable() = default;
  explicit SymbolTable(std::span<const std::string> tokens);

  // Returns the id of `token`, adding it if absent.
  Label add(std::string_view token);
  // kNoLabel if absent.
  Label find(std::string_view token) const;
  bool contains(std::string_view token) const { return find(token) != kNoLabel; }

  // Rendering of an id; epsilon and phi render as "ε" and "φ".
  const std::string& str(Label id) const;

  // Total id count including the two reserved ids.
  std::size_t size() const { return tokens_.size() + kFirstToken; }
  std::size_t num_tokens() const { return tokens_.size(); }
  bool is_token(Label id) const {
    return id >= kFirstToken && static_cast<std::size_t>(id) < size();
  }
  const std::vector<std::string>& tokens() const { return tokens_; }

  bool operator==(const SymbolTable& other) const {
    return tokens_ == other.tokens_;
  }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, Label> index_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

// True when both point at equal tables (identity short-circuits).
bool same_symbols(const SymbolTablePtr& a, const SymbolTablePtr& b);

// Splits UTF-8 text into code points, each returned as its own string.
// Malformed sequences are passed through byte by byte.
std::vector<std::string> split_chars(std::string_view text);

// Number of code points in `text`.
std::size_t char_length(std::string_view text);

}  // namespace subfst

#endif  // SUBFST_SYMBOL_TABLE_HPP_
