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

#include "subfst/symbol_table.hpp"

#include "subfst/errors.hpp"

namespace subfst {
namespace {

const std::string kEpsilonText = "ε";
const std::string kPhiText = "φ";

std::size_t utf8_width(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) return 2;
  if ((lead & 0xF0) == 0xE0) return 3;
  if ((lead & 0xF8) == 0xF0) return 4;
  return 1;
}

}  // namespace

SymbolTable::SymbolTable(std::span<const std::string> tokens) {
  for (const auto& t : tokens) add(t);
}

Label SymbolTable::add(std::string_view token) {
  if (token.empty()) throw ConfigError("empty token string");
  std::string key(token);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  Label id = static_cast<Label>(size());
  tokens_.push_back(key);
  index_.emplace(std::move(key), id);
  return id;
}

Label SymbolTable::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  return it == index_.end() ? kNoLabel : it->second;
}

const std::string& SymbolTable::str(Label id) const {
  if (id == kEpsilon) return kEpsilonText;
  if (id == kPhi) return kPhiText;
  if (!is_token(id)) throw ConfigError("symbol id out of range: " + std::to_string(id));
  return tokens_[static_cast<std::size_t>(id - kFirstToken)];
}

bool same_symbols(const SymbolTablePtr& a, const SymbolTablePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

std::vector<std::string> split_chars(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t w = utf8_width(static_cast<unsigned char>(text[i]));
    if (i + w > text.size()) w = 1;
    for (std::size_t k = 1; k < w; ++k) {
      if ((static_cast<unsigned char>(text[i + k]) & 0xC0) != 0x80) {
        w = 1;
        break;
      }
    }
    out.emplace_back(text.substr(i, w));
    i += w;
  }
  return out;
}

std::size_t char_length(std::string_view text) { return split_chars(text).size(); }

}  // namespace subfst
