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

#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "subfst/errors.hpp"
#include "subfst/guided.hpp"
#include "subfst/io.hpp"
#include "subfst/ops.hpp"
#include "subfst/promotion.hpp"
#include "subfst/regex.hpp"
#include "subfst/verify.hpp"

namespace subfst::cli {
namespace {

namespace fs = std::filesystem;

std::string join(const SymbolTable& symbols, const std::vector<Label>& seq) {
  std::string out;
  for (Label t : seq) {
    if (!out.empty()) out += ' ';
    out += symbols.str(t);
  }
  return out;
}

struct Fixture {
  Vocabulary vocab;
  std::optional<BpeTokenizer> tok;
};

Fixture load_fixture(const std::string& vocab_path, const std::string& merges_path, bool need_merges) {
  Fixture f{load_vocab(vocab_path), std::nullopt};
  if (!merges_path.empty()) {
    f.tok = load_merges(merges_path, f.vocab);
  } else if (need_merges) {
    throw ConfigError("--merges is required for this mode");
  }
  return f;
}

void print_stats(const PromotionResult& r, std::ostream& out) {
  out << "stage\tstates_before\tarcs_before\tdeterministic\tstates\tarcs\tseconds\n";
  for (const auto& s : r.stages) {
    out << s.name << '\t' << s.states_before << '\t' << s.arcs_before << '\t'
        << (s.deterministic ? "yes" : "no") << '\t' << s.states << '\t' << s.arcs << '\t'
        << s.seconds << '\n';
  }
}

// Token strings, or decimal ids for entries the table does not know.
std::vector<Label> parse_prefix(const SymbolTable& symbols, const std::string& prefix) {
  std::vector<Label> seq;
  std::istringstream in(prefix);
  std::string piece;
  while (in >> piece) {
    Label id = symbols.find(piece);
    if (id == kNoLabel) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
      if (ec != std::errc() || ptr != piece.data() + piece.size() || !symbols.is_token(value)) {
        throw InputError("unknown token '" + piece + "' in prefix");
      }
      id = value;
    }
    seq.push_back(id);
  }
  return seq;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subword-level promotion of regular patterns", "subfst"};
  app.require_subcommand(1);

  std::string pattern, vocab_path, merges_path, mode_str, out_path, dot_path, automaton_path,
      input, prefix, dump_dir;
  std::size_t max_len = 0;
  bool stats = false;

  auto* promote_cmd = app.add_subcommand("promote", "Promote a character pattern to a token DFA");
  promote_cmd->add_option("--pattern", pattern, "Character-level pattern")->required();
  promote_cmd->add_option("--vocab", vocab_path, "Vocabulary file")->required();
  promote_cmd->add_option("--merges", merges_path, "BPE merges file");
  promote_cmd->add_option("--mode", mode_str, "agnostic, maxmatch or bpe")
      ->required()
      ->check(CLI::IsMember({"agnostic", "maxmatch", "bpe"}));
  promote_cmd->add_option("--out", out_path, "Output automaton (JSON)")->required();
  promote_cmd->add_option("--dot", dot_path, "Also write Graphviz DOT");
  promote_cmd->add_flag("--stats", stats, "Print per-stage sizes and timings");
  promote_cmd->add_option("--dump-stages", dump_dir, "Debug: write every BPE stage to this directory");

  auto* tokenize = app.add_subcommand("tokenize", "Run a reference tokenizer");
  tokenize->add_option("--mode", mode_str, "maxmatch, bpe or bpe-iterative")
      ->required()
      ->check(CLI::IsMember({"maxmatch", "bpe", "bpe-iterative"}));
  tokenize->add_option("--vocab", vocab_path, "Vocabulary file")->required();
  tokenize->add_option("--merges", merges_path, "BPE merges file");
  tokenize->add_option("--input", input, "Text to tokenize")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List accepted token sequences");
  enumerate->add_option("--automaton", automaton_path, "Automaton file")->required();
  enumerate->add_option("--max-len", max_len, "Maximum sequence length")->required();

  auto* check = app.add_subcommand("check", "Compare a promotion against the tokenizer oracle");
  check->add_option("--pattern", pattern, "Character-level pattern")->required();
  check->add_option("--vocab", vocab_path, "Vocabulary file")->required();
  check->add_option("--merges", merges_path, "BPE merges file");
  check->add_option("--mode", mode_str, "agnostic, maxmatch or bpe")
      ->required()
      ->check(CLI::IsMember({"agnostic", "maxmatch", "bpe"}));
  check->add_option("--max-len", max_len, "Maximum pattern string length")->required();

  auto* mask = app.add_subcommand("mask", "Print the tokens allowed after a prefix");
  mask->add_option("--automaton", automaton_path, "Automaton file")->required();
  mask->add_option("--prefix", prefix, "Space-separated tokens already generated");

  auto* dot = app.add_subcommand("dot", "Render an automaton as Graphviz DOT");
  dot->add_option("--automaton", automaton_path, "Automaton file")->required();
  dot->add_option("--out", out_path, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (promote_cmd->parsed()) {
      Mode mode = parse_mode(mode_str);
      Fixture f = load_fixture(vocab_path, merges_path, mode == Mode::kBpe);
      Dfa a = compile_pattern(pattern, f.vocab);
      PromotionResult r;
      if (mode == Mode::kBpe) {
        PromotionOptions options;
        options.keep_stages = !dump_dir.empty();
        std::vector<Dfa> dumps;
        r = promote_bpe(a, *f.tok, options, &dumps);
        if (!dump_dir.empty()) {
          fs::create_directories(dump_dir);
          for (std::size_t i = 0; i < dumps.size(); ++i) {
            save_automaton(dumps[i], fs::path(dump_dir) / ("stage_" + std::to_string(i + 1) + ".json"));
          }
        }
      } else {
        r = promote(a, mode, f.vocab);
      }
      save_automaton(r.dfa, out_path);
      if (!dot_path.empty()) export_dot(r.dfa, dot_path);
      if (stats) print_stats(r, out);
      return kExitOk;
    }

    if (tokenize->parsed()) {
      bool bpe = mode_str != "maxmatch";
      Fixture f = load_fixture(vocab_path, merges_path, bpe);
      std::vector<Label> seq = mode_str == "maxmatch" ? maxmatch_tokenize(f.vocab, input)
                               : mode_str == "bpe"    ? bpe_tokenize(*f.tok, input)
                                                      : bpe_tokenize_iterative(*f.tok, input);
      out << join(*f.vocab.symbols(), seq) << '\n';
      return kExitOk;
    }

    if (enumerate->parsed()) {
      Fst machine = load_fst(automaton_path);
      for (const auto& seq : enumerate_language(machine, max_len)) {
        out << join(*machine.symbols(), seq) << '\n';
      }
      return kExitOk;
    }

    if (check->parsed()) {
      Mode mode = parse_mode(mode_str);
      Fixture f = load_fixture(vocab_path, merges_path, mode == Mode::kBpe);
      Dfa a = compile_pattern(pattern, f.vocab);
      const BpeTokenizer* tok = f.tok ? &*f.tok : nullptr;
      PromotionResult r = promote(a, mode, f.vocab, tok);
      CheckReport report = check_promotion(a, r.dfa, mode, f.vocab, tok, max_len);
      if (!report.ok) {
        out << "FAIL " << report.reason << "\n";
        out << "counterexample: " << report.counterexample << '\n';
        return kExitFailure;
      }
      out << "OK " << report.strings_checked << " strings checked\n";
      return kExitOk;
    }

    if (mask->parsed()) {
      auto d = std::make_shared<const Dfa>(load_automaton(automaton_path));
      ConstraintState state = constraint_begin(d);
      for (Label t : parse_prefix(*d->symbols(), prefix)) state = constraint_advance(state, t);
      for (Label t : allowed_tokens(state)) out << d->symbols()->str(t) << '\n';
      return kExitOk;
    }

    if (dot->parsed()) {
      Fst machine = load_fst(automaton_path);
      if (out_path.empty()) {
        out << to_dot(machine);
      } else {
        export_dot(machine, out_path);
      }
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace subfst::cli
