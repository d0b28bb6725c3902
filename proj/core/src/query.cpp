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

#include <algorithm>
#include <vector>

#include "subfst/errors.hpp"
#include "subfst/ops.hpp"

namespace subfst {
namespace {

using StateSet = std::vector<StateId>;

// Set-of-states simulation over input labels with epsilon and phi semantics.
class Simulator {
 public:
  explicit Simulator(const Fst& a) : a_(a), mark_(static_cast<std::size_t>(a.num_states()), 0) {}

  StateSet initial() { return a_.is_empty() ? StateSet{} : close({a_.start()}); }

  StateSet consume(const StateSet& from, Label x) {
    StateSet out;
    StateSet work = from;
    StateSet visited;
    while (!work.empty()) {
      StateId q = work.back();
      work.pop_back();
      if (std::find(visited.begin(), visited.end(), q) != visited.end()) continue;
      visited.push_back(q);
      auto hits = a_.arcs_on(q, x);
      if (!hits.empty()) {
        for (const Arc& arc : hits) out.push_back(arc.dst);
      } else if (const Arc* phi = a_.phi_arc(q)) {
        for (StateId p : close({phi->dst})) work.push_back(p);
      }
    }
    return close(std::move(out));
  }

  // Final, possibly after following phi arcs at end of input.
  bool accepting(const StateSet& states) {
    StateSet work = states;
    StateSet visited;
    while (!work.empty()) {
      StateId q = work.back();
      work.pop_back();
      if (std::find(visited.begin(), visited.end(), q) != visited.end()) continue;
      visited.push_back(q);
      if (a_.is_final(q)) return true;
      if (const Arc* phi = a_.phi_arc(q)) {
        for (StateId p : close({phi->dst})) work.push_back(p);
      }
    }
    return false;
  }

 private:
  StateSet close(StateSet set) {
    ++epoch_;
    for (StateId s : set) mark_[static_cast<std::size_t>(s)] = epoch_;
    StateSet stack = set;
    while (!stack.empty()) {
      StateId s = stack.back();
      stack.pop_back();
      for (const Arc& arc : a_.arcs_on(s, kEpsilon)) {
        auto& m = mark_[static_cast<std::size_t>(arc.dst)];
        if (m != epoch_) {
          m = epoch_;
          set.push_back(arc.dst);
          stack.push_back(arc.dst);
        }
      }
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
  }

  const Fst& a_;
  std::vector<unsigned> mark_;
  unsigned epoch_ = 0;
};

}  // namespace

bool accepts(const Fst& a, std::span<const Label> seq) {
  Simulator sim(a);
  StateSet cur = sim.initial();
  for (Label x : seq) {
    if (cur.empty()) return false;
    cur = sim.consume(cur, x);
  }
  return sim.accepting(cur);
}

std::set<LabelSeq> enumerate_language(const Fst& a, std::size_t max_len,
                                      std::size_t max_paths) {
  std::set<LabelSeq> out;
  if (a.is_empty()) return out;

  std::vector<Label> alphabet;
  for (const Arc& arc : a.arcs()) {
    if (arc.in != kEpsilon && arc.in != kPhi) alphabet.push_back(arc.in);
  }
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());

  Simulator sim(a);
  std::size_t explored = 0;
  LabelSeq prefix;
  struct Frame {
    StateSet states;
    std::size_t next_label = 0;
  };
  std::vector<Frame> stack;
  stack.push_back({sim.initial(), 0});
  if (sim.accepting(stack.back().states)) out.insert(prefix);
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (prefix.size() >= max_len || top.next_label >= alphabet.size()) {
      stack.pop_back();
      if (!prefix.empty() && !stack.empty()) prefix.pop_back();
      continue;
    }
    Label x = alphabet[top.next_label++];
    StateSet next = sim.consume(top.states, x);
    if (next.empty()) continue;
    if (++explored > max_paths) {
      throw EnumerationError("enumerate_language: exploration cap of " +
                                 std::to_string(max_paths) + " prefixes exceeded",
                             out.size());
    }
    prefix.push_back(x);
    if (sim.accepting(next)) out.insert(prefix);
    stack.push_back({std::move(next), 0});
  }
  return out;
}

bool is_deterministic(const Fst& a) {
  for (StateId s = 0; s < a.num_states(); ++s) {
    Label prev = kNoLabel;
    for (const Arc& arc : a.arcs(s)) {
      if (arc.in == kEpsilon || arc.in == kPhi || arc.in == prev) return false;
      prev = arc.in;
    }
  }
  return true;
}

}  // namespace subfst
