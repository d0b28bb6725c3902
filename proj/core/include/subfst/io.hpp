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

#ifndef SUBFST_IO_HPP_
#define SUBFST_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "subfst/fst.hpp"
#include "subfst/tokenizers.hpp"

namespace subfst {

// One token per line; line order gives ids. Throws ValidationError on empty
// lines, tokens containing whitespace, duplicates or a missing single
// character token, and Error when the file cannot be read.
Vocabulary load_vocab(const std::filesystem::path& path);
Vocabulary parse_vocab(std::string_view text);

// One merge per line, two space-separated tokens; lines starting with `#`
// are skipped. Throws ValidationError on malformed lines, unknown tokens or
// merges the vocabulary cannot support.
BpeTokenizer load_merges(const std::filesystem::path& path, const Vocabulary& vocab);
BpeTokenizer parse_merges(std::string_view text, const Vocabulary& vocab);

// JSON interchange document: `symbols` (token strings for ids 2, 3, ...),
// `num_states`, `start` (null when there are no states), `finals` (sorted)
// and `transitions` ([src, in, out, dst], sorted).
std::string to_json(const Fst& machine);
// Throws ValidationError naming the offending field.
Fst fst_from_json(std::string_view text);

// Writes to a temporary file next to `path` and renames it into place.
void save_automaton(const Fst& machine, const std::filesystem::path& path);
Fst load_fst(const std::filesystem::path& path);
// Also throws ValidationError when the machine is not a DFA.
Dfa load_automaton(const std::filesystem::path& path);

std::string to_dot(const Fst& machine);
void export_dot(const Fst& machine, const std::filesystem::path& path);

}  // namespace subfst

#endif  // SUBFST_IO_HPP_
