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

#include "subfst/regex.hpp"

#include <algorithm>
#include <string>

#include "subfst/errors.hpp"
#include "subfst/ops.hpp"

namespace subfst {
namespace {

char32_t decode(std::string_view c) {
  auto u = [&](std::size_t i) { return static_cast<char32_t>(static_cast<unsigned char>(c[i])); };
  switch (c.size()) {
    case 1: return u(0);
    case 2: return ((u(0) & 0x1F) << 6) | (u(1) & 0x3F);
    case 3: return ((u(0) & 0x0F) << 12) | ((u(1) & 0x3F) << 6) | (u(2) & 0x3F);
    default: return ((u(0) & 0x07) << 18) | ((u(1) & 0x3F) << 12) | ((u(2) & 0x3F) << 6) | (u(3) & 0x3F);
  }
}

PatternAst make_node(PatternAst::Kind kind) {
  PatternAst n;
  n.kind = kind;
  return n;
}

class Parser {
 public:
  Parser(std::string_view pattern, const SymbolTable& symbols) : symbols_(symbols) {
    std::size_t offset = 0;
    for (auto& c : split_chars(pattern)) {
      offsets_.push_back(offset);
      offset += c.size();
      chars_.push_back(std::move(c));
    }
    offsets_.push_back(offset);
    for (Label id = kFirstToken; static_cast<std::size_t>(id) < symbols.size(); ++id) {
      if (split_chars(symbols.str(id)).size() == 1) sigma_.push_back(id);
    }
  }

  PatternAst parse() {
    PatternAst ast = alternation();
    if (pos_ < chars_.size()) {
      throw SyntaxError(peek() == ")" ? "unbalanced ')'" : "unexpected '" + peek() + "'",
                        offset());
    }
    return ast;
  }

 private:
  bool done() const { return pos_ >= chars_.size(); }
  const std::string& peek() const { return chars_[pos_]; }
  std::size_t offset() const { return offsets_[pos_]; }

  PatternAst alternation() {
    PatternAst first = concatenation();
    if (done() || peek() != "|") return first;
    PatternAst alt = make_node(PatternAst::Kind::kAlt);
    alt.children.push_back(std::move(first));
    while (!done() && peek() == "|") {
      ++pos_;
      alt.children.push_back(concatenation());
    }
    return alt;
  }

  PatternAst concatenation() {
    PatternAst cat = make_node(PatternAst::Kind::kConcat);
    while (!done() && peek() != "|" && peek() != ")") cat.children.push_back(repetition());
    if (cat.children.empty()) return make_node(PatternAst::Kind::kEmpty);
    if (cat.children.size() == 1) return std::move(cat.children.front());
    return cat;
  }

  PatternAst repetition() {
    PatternAst node = atom();
    while (!done() && (peek() == "*" || peek() == "+" || peek() == "?")) {
      PatternAst::Kind kind = peek() == "*"   ? PatternAst::Kind::kStar
                              : peek() == "+" ? PatternAst::Kind::kPlus
                                              : PatternAst::Kind::kOptional;
      ++pos_;
      PatternAst wrapped = make_node(kind);
      wrapped.children.push_back(std::move(node));
      node = std::move(wrapped);
    }
    return node;
  }

  PatternAst atom() {
    const std::string c = peek();
    const std::size_t at = offset();
    if (c == "(") {
      ++pos_;
      PatternAst inner = alternation();
      if (done() || peek() != ")") throw SyntaxError("unbalanced '('", at);
      ++pos_;
      return inner;
    }
    if (c == "*" || c == "+" || c == "?") throw SyntaxError("quantifier with nothing to repeat", at);
    if (c == "]") throw SyntaxError("unbalanced ']'", at);
    if (c == "[") return char_class();
    if (c == ".") {
      ++pos_;
      PatternAst any = make_node(PatternAst::Kind::kClass);
      any.chars = sigma_;
      return any;
    }
    PatternAst lit = make_node(PatternAst::Kind::kLiteral);
    lit.literal = literal_char();
    return lit;
  }

  // Consumes one (possibly escaped) character and returns its id.
  Label literal_char() {
    std::size_t at = offset();
    if (peek() == "\\") {
      ++pos_;
      if (done()) throw SyntaxError("trailing backslash", at);
    }
    Label id = lookup(peek(), offset());
    ++pos_;
    return id;
  }

  Label lookup(const std::string& c, std::size_t at) const {
    Label id = symbols_.find(c);
    if (id == kNoLabel || std::find(sigma_.begin(), sigma_.end(), id) == sigma_.end()) {
      throw InputError("pattern character '" + c + "' at offset " + std::to_string(at) +
                       " is not in the alphabet");
    }
    return id;
  }

  PatternAst char_class() {
    const std::size_t open = offset();
    ++pos_;
    bool negate = false;
    if (!done() && peek() == "^") {
      negate = true;
      ++pos_;
    }
    std::vector<Label> members;
    while (true) {
      if (done()) throw SyntaxError("unterminated character class", open);
      if (peek() == "]") {
        ++pos_;
        break;
      }
      std::size_t lo_at = offset();
      bool escaped = peek() == "\\";
      if (escaped) {
        ++pos_;
        if (done()) throw SyntaxError("trailing backslash", lo_at);
      }
      std::string lo = peek();
      ++pos_;
      if (!done() && peek() == "-" && pos_ + 1 < chars_.size() && chars_[pos_ + 1] != "]") {
        ++pos_;
        std::size_t hi_at = offset();
        if (peek() == "\\") {
          ++pos_;
          if (done()) throw SyntaxError("trailing backslash", hi_at);
        }
        std::string hi = peek();
        ++pos_;
        char32_t a = decode(lo), z = decode(hi);
        if (a > z) throw SyntaxError("reversed range in character class", lo_at);
        for (Label id : sigma_) {
          char32_t cp = decode(symbols_.str(id));
          if (cp >= a && cp <= z) members.push_back(id);
        }
      } else {
        members.push_back(lookup(lo, lo_at));
      }
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    PatternAst cls = make_node(PatternAst::Kind::kClass);
    if (negate) {
      for (Label id : sigma_) {
        if (!std::binary_search(members.begin(), members.end(), id)) cls.chars.push_back(id);
      }
    } else {
      cls.chars = std::move(members);
    }
    return cls;
  }

  const SymbolTable& symbols_;
  std::vector<std::string> chars_;
  std::vector<std::size_t> offsets_;
  std::vector<Label> sigma_;
  std::size_t pos_ = 0;
};

struct Fragment {
  StateId in;
  StateId out;
};

// Thompson construction: every fragment has one entry and one exit state.
Fragment build(const PatternAst& ast, FstBuilder& b) {
  using Kind = PatternAst::Kind;
  Fragment f{b.add_state(), b.add_state()};
  switch (ast.kind) {
    case Kind::kEmpty:
      b.add_arc(f.in, kEpsilon, kEpsilon, f.out);
      break;
    case Kind::kLiteral:
      b.add_arc(f.in, ast.literal, ast.literal, f.out);
      break;
    case Kind::kClass:
      for (Label c : ast.chars) b.add_arc(f.in, c, c, f.out);
      break;
    case Kind::kConcat: {
      StateId cur = f.in;
      for (const auto& child : ast.children) {
        Fragment c = build(child, b);
        b.add_arc(cur, kEpsilon, kEpsilon, c.in);
        cur = c.out;
      }
      b.add_arc(cur, kEpsilon, kEpsilon, f.out);
      break;
    }
    case Kind::kAlt:
      for (const auto& child : ast.children) {
        Fragment c = build(child, b);
        b.add_arc(f.in, kEpsilon, kEpsilon, c.in);
        b.add_arc(c.out, kEpsilon, kEpsilon, f.out);
      }
      break;
    case Kind::kStar:
    case Kind::kPlus:
    case Kind::kOptional: {
      Fragment c = build(ast.children.front(), b);
      b.add_arc(f.in, kEpsilon, kEpsilon, c.in);
      b.add_arc(c.out, kEpsilon, kEpsilon, f.out);
      if (ast.kind != Kind::kPlus) b.add_arc(f.in, kEpsilon, kEpsilon, f.out);
      if (ast.kind != Kind::kOptional) b.add_arc(c.out, kEpsilon, kEpsilon, c.in);
      break;
    }
  }
  return f;
}

}  // namespace

PatternAst parse_pattern(std::string_view pattern, const SymbolTable& symbols) {
  return Parser(pattern, symbols).parse();
}

Dfa compile_pattern(std::string_view pattern, const SymbolTablePtr& symbols) {
  PatternAst ast = parse_pattern(pattern, *symbols);
  FstBuilder b(symbols);
  Fragment f = build(ast, b);
  b.set_start(f.in);
  b.set_final(f.out);
  std::vector<Label> sigma;
  for (Label id = kFirstToken; static_cast<std::size_t>(id) < symbols->size(); ++id) {
    if (split_chars(symbols->str(id)).size() == 1) sigma.push_back(id);
  }
  b.set_input_alphabet(sigma);
  b.set_output_alphabet(sigma);
  return minimize(determinize(epsilon_remove(std::move(b).build())));
}

Dfa compile_pattern(std::string_view pattern, const Vocabulary& vocab) {
  return compile_pattern(pattern, vocab.symbols());
}

}  // namespace subfst
