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

#ifndef SUBFST_REGEX_HPP_
#define SUBFST_REGEX_HPP_

#include <string_view>
#include <vector>

#include "subfst/fst.hpp"
#include "subfst/tokenizers.hpp"

namespace subfst {

// Parsed pattern. Grammar: literals, grouping `(...)`, alternation `|`,
// postfix `*`, `+`, `?`, classes `[...]` (ranges `a-z`, negation `[^...]`,
// `[]` matches nothing), `.` for any character, `\` escapes the next
// character. No anchors, captures or backreferences.
struct PatternAst {
  enum class Kind { kEmpty, kLiteral, kConcat, kAlt, kStar, kPlus, kOptional, kClass };

  Kind kind = Kind::kEmpty;
  Label literal = kNoLabel;          // kLiteral
  std::vector<Label> chars;          // kClass (also used for `.`)
  std::vector<PatternAst> children;  // kConcat, kAlt, repetition (one child)
};

// Throws SyntaxError (with byte offset) on malformed input and InputError on
// a character outside the alphabet. The alphabet is every single-character
// token of `symbols`.
PatternAst parse_pattern(std::string_view pattern, const SymbolTable& symbols);

// Minimal, trim DFA over character ids for `pattern`.
Dfa compile_pattern(std::string_view pattern, const SymbolTablePtr& symbols);
Dfa compile_pattern(std::string_view pattern, const Vocabulary& vocab);

}  // namespace subfst

#endif  // SUBFST_REGEX_HPP_
