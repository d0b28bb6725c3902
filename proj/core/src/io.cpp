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

#include "subfst/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "subfst/errors.hpp"

namespace subfst {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out << content;
    out.flush();
    if (!out) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw Error("cannot write " + path.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error("cannot write " + path.string());
  }
}

// Content lines with their 1-based line numbers; a final newline is allowed.
std::vector<std::pair<std::size_t, std::string>> split_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(number, std::string(line));
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return lines;
}

[[noreturn]] void schema(const std::string& field, const std::string& what) {
  throw ValidationError(field + ": " + what);
}

int get_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) schema(field, "expected an integer");
  auto v = j.get<long long>();
  if (v < 0 || v > 0x7FFFFFFF) schema(field, "out of range");
  return static_cast<int>(v);
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

Vocabulary parse_vocab(std::string_view text) {
  std::vector<std::string> tokens;
  for (auto& [number, line] : split_lines(text)) {
    if (line.empty()) throw ValidationError("vocab line " + std::to_string(number) + " is empty");
    if (line.find_first_of(" \t") != std::string::npos) {
      throw ValidationError("vocab line " + std::to_string(number) + ": token contains whitespace");
    }
    tokens.push_back(std::move(line));
  }
  return Vocabulary::from_tokens(tokens);
}

Vocabulary load_vocab(const fs::path& path) { return parse_vocab(read_file(path)); }

BpeTokenizer parse_merges(std::string_view text, const Vocabulary& vocab) {
  std::vector<std::pair<Label, Label>> merges;
  for (const auto& [number, line] : split_lines(text)) {
    if (!line.empty() && line.front() == '#') continue;
    std::string where = "merges line " + std::to_string(number);
    std::size_t space = line.find(' ');
    if (line.empty() || space == std::string::npos || space == 0 ||
        line.find(' ', space + 1) != std::string::npos || space + 1 == line.size()) {
      throw ValidationError(where + ": expected two space-separated tokens");
    }
    std::string left = line.substr(0, space);
    std::string right = line.substr(space + 1);
    Label l = vocab.find(left);
    Label r = vocab.find(right);
    if (l == kNoLabel) throw ValidationError(where + ": unknown token '" + left + "'");
    if (r == kNoLabel) throw ValidationError(where + ": unknown token '" + right + "'");
    merges.emplace_back(l, r);
  }
  return BpeTokenizer(vocab, merges);
}

BpeTokenizer load_merges(const fs::path& path, const Vocabulary& vocab) {
  return parse_merges(read_file(path), vocab);
}

std::string to_json(const Fst& machine) {
  json doc;
  doc["symbols"] = machine.symbols()->tokens();
  doc["num_states"] = machine.num_states();
  doc["start"] = machine.is_empty() ? json(nullptr) : json(machine.start());
  doc["finals"] = machine.finals();
  json arcs = json::array();
  for (const Arc& a : machine.arcs()) arcs.push_back({a.src, a.in, a.out, a.dst});
  doc["transitions"] = std::move(arcs);
  return doc.dump(1) + "\n";
}

Fst fst_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) schema("$", "expected an object");
  for (const char* key : {"symbols", "num_states", "start", "finals", "transitions"}) {
    if (!doc.contains(key)) schema(key, "missing");
  }

  const json& symbols = doc["symbols"];
  if (!symbols.is_array()) schema("symbols", "expected an array");
  auto table = std::make_shared<SymbolTable>();
  std::set<std::string> seen;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    std::string field = "symbols[" + std::to_string(i) + "]";
    if (!symbols[i].is_string()) schema(field, "expected a string");
    auto s = symbols[i].get<std::string>();
    if (s.empty()) schema(field, "empty token");
    if (!seen.insert(s).second) schema(field, "duplicate token '" + s + "'");
    table->add(s);
  }

  const int n = get_int(doc["num_states"], "num_states");
  FstBuilder b(std::move(table));
  b.add_states(n);

  const json& start = doc["start"];
  if (start.is_null()) {
    if (n != 0) schema("start", "null start with states present");
  } else {
    int s = get_int(start, "start");
    if (s >= n) schema("start", "state " + std::to_string(s) + " out of range");
    b.set_start(s);
  }

  const json& finals = doc["finals"];
  if (!finals.is_array()) schema("finals", "expected an array");
  int prev = -1;
  for (std::size_t i = 0; i < finals.size(); ++i) {
    std::string field = "finals[" + std::to_string(i) + "]";
    int f = get_int(finals[i], field);
    if (f >= n) schema(field, "state " + std::to_string(f) + " out of range");
    if (f <= prev) schema(field, "not sorted and unique");
    prev = f;
    b.set_final(f);
  }

  const json& arcs = doc["transitions"];
  if (!arcs.is_array()) schema("transitions", "expected an array");
  const int num_labels = static_cast<int>(symbols.size()) + kFirstToken;
  Arc last{-1, -1, -1, -1};
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    std::string field = "transitions[" + std::to_string(i) + "]";
    const json& a = arcs[i];
    if (!a.is_array() || a.size() != 4) schema(field, "expected [src, in, out, dst]");
    Arc arc{get_int(a[0], field + "[0]"), get_int(a[1], field + "[1]"), get_int(a[2], field + "[2]"),
            get_int(a[3], field + "[3]")};
    if (arc.src >= n) schema(field + "[0]", "state out of range");
    if (arc.dst >= n) schema(field + "[3]", "state out of range");
    if (arc.in >= num_labels) schema(field + "[1]", "label out of range");
    if (arc.out >= num_labels) schema(field + "[2]", "label out of range");
    if (arc.out == kPhi) schema(field + "[2]", "phi cannot be an output label");
    if (!(last < arc)) schema(field, "transitions not sorted and unique");
    last = arc;
    b.add_arc(arc);
  }
  try {
    return std::move(b).build();
  } catch (const ConfigError& e) {
    schema("transitions", e.what());
  }
}

void save_automaton(const Fst& machine, const fs::path& path) { write_atomic(path, to_json(machine)); }

Fst load_fst(const fs::path& path) { return fst_from_json(read_file(path)); }

Dfa load_automaton(const fs::path& path) {
  Fst fst = load_fst(path);
  try {
    return Dfa::from_fst(std::move(fst));
  } catch (const ConfigError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

std::string to_dot(const Fst& machine) {
  const SymbolTable& symbols = *machine.symbols();
  std::ostringstream out;
  out << "digraph fst {\n  rankdir=LR;\n";
  if (!machine.is_empty()) out << "  init [shape=point];\n";
  for (StateId s = 0; s < machine.num_states(); ++s) {
    out << "  " << s << " [shape=" << (machine.is_final(s) ? "doublecircle" : "circle") << "];\n";
  }
  if (!machine.is_empty()) out << "  init -> " << machine.start() << ";\n";
  for (const Arc& a : machine.arcs()) {
    out << "  " << a.src << " -> " << a.dst << " [label=\"" << escape_dot(symbols.str(a.in)) << ':'
        << escape_dot(symbols.str(a.out)) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

void export_dot(const Fst& machine, const fs::path& path) { write_atomic(path, to_dot(machine)); }

}  // namespace subfst
