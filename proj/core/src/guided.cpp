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

#include "subfst/guided.hpp"

#include <string>

#include "subfst/errors.hpp"

namespace subfst {
namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double unit(std::uint64_t h) { return static_cast<double>(h >> 11) * 0x1.0p-53; }

std::uint64_t context_hash(std::uint64_t seed, std::span<const Label> context) {
  std::uint64_t h = splitmix(seed);
  for (Label t : context) h = splitmix(h ^ static_cast<std::uint64_t>(t));
  return h;
}

std::string concat(const Dfa& d, std::span<const Label> seq) {
  std::string out;
  for (Label t : seq) out += d.symbols()->str(t);
  return out;
}

}  // namespace

ConstraintState constraint_begin(std::shared_ptr<const Dfa> d) {
  if (!d || d->is_empty()) throw ConstraintError("constraint automaton accepts nothing");
  StateId start = d->start();
  return ConstraintState(std::move(d), start);
}

std::vector<Label> allowed_tokens(const ConstraintState& s) {
  std::vector<Label> out;
  for (const Arc& arc : s.dfa().arcs(s.state())) out.push_back(arc.in);
  return out;
}

ConstraintState constraint_advance(const ConstraintState& s, Label token) {
  StateId next = s.dfa().next(s.state(), token);
  if (next == kNoState) {
    const auto& symbols = *s.dfa().symbols();
    std::string name = token >= 0 && static_cast<std::size_t>(token) < symbols.size()
                           ? symbols.str(token)
                           : std::to_string(token);
    throw ConstraintError("token '" + name + "' is not allowed here");
  }
  return ConstraintState(s.dfa_, next);
}

double StubLM::score(std::span<const Label> context, Label candidate) const {
  return unit(splitmix(context_hash(seed_, context) ^ (static_cast<std::uint64_t>(candidate) << 1)));
}

double StubLM::end_score(std::span<const Label> context) const {
  return unit(splitmix(context_hash(seed_, context) ^ 0xE0DULL));
}

std::vector<Label> constrained_decode(const StubLM& lm, std::shared_ptr<const Dfa> d,
                                      const DecodeOptions& options) {
  ConstraintState state = constraint_begin(d);
  std::vector<Label> out;
  for (std::size_t step = 0; step < options.max_steps; ++step) {
    std::vector<Label> allowed = allowed_tokens(state);
    Label best = kNoLabel;
    double best_score = -1.0;
    for (Label t : allowed) {
      double sc = lm.score(out, t);
      if (sc > best_score) {
        best = t;
        best_score = sc;
      }
    }
    if (state.terminable() && (best == kNoLabel || lm.end_score(out) >= best_score)) return out;
    state = constraint_advance(state, best);
    out.push_back(best);
    if (options.retokenize && options.retokenize_every > 0 &&
        (step + 1) % options.retokenize_every == 0) {
      std::vector<Label> redone = options.retokenize(concat(*d, out));
      StateId s = d->walk(redone);
      if (s != kNoState) {
        out = std::move(redone);
        state = constraint_begin(d);
        for (Label t : out) state = constraint_advance(state, t);
      }
    }
  }
  if (state.terminable()) return out;
  throw IncompleteGenerationError("generation stopped after " + std::to_string(options.max_steps) +
                                      " steps at a non-final state",
                                  out);
}

}  // namespace subfst
