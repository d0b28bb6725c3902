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

#include "subfst/promotion.hpp"

#include <algorithm>
#include <chrono>
#include <utility>

#include "subfst/errors.hpp"
#include "subfst/lexicon.hpp"
#include "subfst/ops.hpp"

namespace subfst {
namespace {

using Clock = std::chrono::steady_clock;

void check_pattern(const Dfa& a, const Vocabulary& vocab) {
  if (!same_symbols(a.symbols(), vocab.symbols())) {
    throw ConfigError("pattern and vocabulary use different symbol tables");
  }
  for (const Arc& arc : a.fst().arcs()) {
    if (!vocab.is_character(arc.in)) {
      throw ConfigError("pattern label '" + vocab.str(arc.in) + "' is not a single character");
    }
  }
}

// Projects, removes epsilons and minimizes a composition result.
Dfa finish(const Fst& composed, StageStats& stats) {
  Fst projected = epsilon_remove(project_output(composed));
  stats.states_before = projected.num_states();
  stats.arcs_before = projected.num_arcs();
  stats.deterministic = is_deterministic(projected);
  Dfa d = stats.deterministic ? Dfa::from_fst(std::move(projected)) : determinize(projected);
  Dfa m = minimize(d);
  stats.states = m.num_states();
  stats.arcs = m.num_arcs();
  return m;
}

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

PromotionResult empty_result(const Dfa& a, Mode mode) {
  PromotionResult r{a, mode, {}};
  r.stages.push_back(StageStats{"empty", 0, 0, true, 0, 0, 0.0});
  return r;
}

PromotionResult single_stage(const Dfa& a, Mode mode, const Fst& transducer, std::string name) {
  auto t0 = Clock::now();
  PromotionResult r;
  r.mode = mode;
  StageStats stats;
  stats.name = std::move(name);
  r.dfa = finish(compose(a, transducer), stats);
  stats.seconds = since(t0);
  r.stages.push_back(std::move(stats));
  return r;
}

std::string merge_name(const BpeTokenizer& tok, const Merge& m) {
  return "merge(" + tok.vocab().str(m.left) + "," + tok.vocab().str(m.right) + ")";
}

}  // namespace

std::string_view mode_name(Mode mode) {
  switch (mode) {
    case Mode::kAgnostic: return "agnostic";
    case Mode::kMaxMatch: return "maxmatch";
    case Mode::kBpe: return "bpe";
  }
  return "?";
}

Mode parse_mode(std::string_view name) {
  if (name == "agnostic") return Mode::kAgnostic;
  if (name == "maxmatch") return Mode::kMaxMatch;
  if (name == "bpe") return Mode::kBpe;
  throw ConfigError("unknown mode '" + std::string(name) + "'");
}

PromotionResult promote_agnostic(const Dfa& a, const Vocabulary& vocab) {
  check_pattern(a, vocab);
  if (a.is_empty()) return empty_result(a, Mode::kAgnostic);
  return single_stage(a, Mode::kAgnostic, build_lexicon_transducer(vocab), "lexicon");
}

PromotionResult promote_maxmatch(const Dfa& a, const Vocabulary& vocab) {
  check_pattern(a, vocab);
  if (a.is_empty()) return empty_result(a, Mode::kMaxMatch);
  return single_stage(a, Mode::kMaxMatch, build_maxmatch_transducer(build_failure_trie(vocab)),
                      "maxmatch");
}

PromotionResult promote_bpe(const Dfa& a, const BpeTokenizer& tok, const PromotionOptions& options,
                            std::vector<Dfa>* dumps) {
  check_pattern(a, tok.vocab());
  if (a.is_empty()) return empty_result(a, Mode::kBpe);
  PromotionResult r;
  r.mode = Mode::kBpe;
  Dfa current = a;
  const auto& merges = tok.merges();
  if (merges.empty()) {
    auto t0 = Clock::now();
    StageStats stats{"identity", a.num_states(), a.num_arcs(), true, 0, 0, 0.0};
    current = minimize(a);
    stats.states = current.num_states();
    stats.arcs = current.num_arcs();
    stats.seconds = since(t0);
    r.stages.push_back(std::move(stats));
  }
  for (std::size_t i = 0; i < merges.size(); ++i) {
    auto t0 = Clock::now();
    const Merge& m = merges[i];
    std::vector<Label> alphabet = tok.alphabet_before(i);
    MergeGadget g = build_merge_gadget({m.left, m.right}, alphabet, tok.vocab().symbols());
    StageStats stats;
    stats.name = merge_name(tok, m);
    current = finish(compose(current, g.fst), stats);
    stats.seconds = since(t0);
    r.stages.push_back(std::move(stats));
    if (options.keep_stages && dumps != nullptr) dumps->push_back(current);
    if (current.is_empty()) break;
  }
  r.dfa = std::move(current);
  return r;
}

PromotionResult promote_bpe_chained(const Dfa& a, const BpeTokenizer& tok) {
  check_pattern(a, tok.vocab());
  if (a.is_empty()) return empty_result(a, Mode::kBpe);
  auto t0 = Clock::now();
  Fst chain = a;
  const auto& merges = tok.merges();
  for (std::size_t i = 0; i < merges.size(); ++i) {
    std::vector<Label> alphabet = tok.alphabet_before(i);
    const Merge& m = merges[i];
    chain = compose(chain, build_merge_gadget({m.left, m.right}, alphabet, tok.vocab().symbols()).fst);
  }
  PromotionResult r;
  r.mode = Mode::kBpe;
  StageStats stats;
  stats.name = "chained";
  r.dfa = finish(chain, stats);
  stats.seconds = since(t0);
  r.stages.push_back(std::move(stats));
  return r;
}

PromotionResult promote(const Dfa& a, Mode mode, const Vocabulary& vocab, const BpeTokenizer* tok) {
  switch (mode) {
    case Mode::kAgnostic: return promote_agnostic(a, vocab);
    case Mode::kMaxMatch: return promote_maxmatch(a, vocab);
    case Mode::kBpe:
      if (tok == nullptr) throw ConfigError("bpe promotion needs a merge list");
      return promote_bpe(a, *tok);
  }
  throw ConfigError("unknown mode");
}

std::vector<std::size_t> promotion_stats(const PromotionResult& r) {
  std::vector<std::size_t> counts;
  counts.reserve(r.stages.size());
  for (const auto& s : r.stages) counts.push_back(static_cast<std::size_t>(s.states));
  return counts;
}

}  // namespace subfst
