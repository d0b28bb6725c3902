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
#include <deque>
#include <map>
#include <vector>

#include "subfst/errors.hpp"
#include "subfst/ops.hpp"

namespace subfst {
namespace {

std::vector<bool> reachable_from_start(const Fst& a) {
  std::vector<bool> seen(static_cast<std::size_t>(a.num_states()), false);
  if (a.is_empty()) return seen;
  std::vector<StateId> stack{a.start()};
  seen[static_cast<std::size_t>(a.start())] = true;
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (const Arc& arc : a.arcs(s)) {
      if (!seen[static_cast<std::size_t>(arc.dst)]) {
        seen[static_cast<std::size_t>(arc.dst)] = true;
        stack.push_back(arc.dst);
      }
    }
  }
  return seen;
}

std::vector<bool> coreachable(const Fst& a) {
  const auto n = static_cast<std::size_t>(a.num_states());
  std::vector<std::vector<StateId>> reverse(n);
  for (const Arc& arc : a.arcs()) reverse[static_cast<std::size_t>(arc.dst)].push_back(arc.src);
  std::vector<bool> seen(n, false);
  std::vector<StateId> stack = a.finals();
  for (StateId f : stack) seen[static_cast<std::size_t>(f)] = true;
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (StateId p : reverse[static_cast<std::size_t>(s)]) {
      if (!seen[static_cast<std::size_t>(p)]) {
        seen[static_cast<std::size_t>(p)] = true;
        stack.push_back(p);
      }
    }
  }
  return seen;
}

void copy_alphabets(const Fst& from, FstBuilder& to) {
  to.set_input_alphabet(from.input_alphabet());
  to.set_output_alphabet(from.output_alphabet());
}

}  // namespace

Fst trim(const Fst& a) {
  auto fwd = reachable_from_start(a);
  auto bwd = coreachable(a);
  FstBuilder b(a.symbols());
  copy_alphabets(a, b);
  if (a.is_empty() || !fwd[static_cast<std::size_t>(a.start())] ||
      !bwd[static_cast<std::size_t>(a.start())]) {
    return std::move(b).build();
  }
  std::vector<StateId> remap(static_cast<std::size_t>(a.num_states()), kNoState);
  for (StateId s = 0; s < a.num_states(); ++s) {
    if (fwd[static_cast<std::size_t>(s)] && bwd[static_cast<std::size_t>(s)]) {
      remap[static_cast<std::size_t>(s)] = b.add_state();
      if (a.is_final(s)) b.set_final(remap[static_cast<std::size_t>(s)]);
    }
  }
  b.set_start(remap[static_cast<std::size_t>(a.start())]);
  for (const Arc& arc : a.arcs()) {
    StateId src = remap[static_cast<std::size_t>(arc.src)];
    StateId dst = remap[static_cast<std::size_t>(arc.dst)];
    if (src != kNoState && dst != kNoState) b.add_arc(src, arc.in, arc.out, dst);
  }
  return std::move(b).build();
}

Dfa determinize(const Fst& input) {
  if (!input.is_acceptor()) throw ConfigError("determinize: input is not an acceptor");
  for (const Arc& arc : input.arcs()) {
    if (arc.in == kPhi) throw ConfigError("determinize: input has phi arcs");
  }
  const Fst a = trim(input);
  FstBuilder b(a.symbols());
  copy_alphabets(a, b);
  if (a.is_empty()) return Dfa::from_fst(std::move(b).build());

  auto close = [&a](std::vector<StateId> set) {
    std::vector<StateId> stack = set;
    while (!stack.empty()) {
      StateId s = stack.back();
      stack.pop_back();
      for (const Arc& arc : a.arcs_on(s, kEpsilon)) {
        if (std::find(set.begin(), set.end(), arc.dst) == set.end()) {
          set.push_back(arc.dst);
          stack.push_back(arc.dst);
        }
      }
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
  };

  std::map<std::vector<StateId>, StateId> ids;
  std::deque<std::vector<StateId>> queue;
  auto state_for = [&](std::vector<StateId> set) {
    auto [it, inserted] = ids.try_emplace(set, kNoState);
    if (inserted) {
      it->second = b.add_state();
      queue.push_back(std::move(set));
    }
    return it->second;
  };
  b.set_start(state_for(close({a.start()})));
  while (!queue.empty()) {
    std::vector<StateId> set = std::move(queue.front());
    queue.pop_front();
    StateId id = ids.at(set);
    std::map<Label, std::vector<StateId>> moves;
    for (StateId s : set) {
      if (a.is_final(s)) b.set_final(id);
      for (const Arc& arc : a.arcs(s)) {
        if (arc.in != kEpsilon) moves[arc.in].push_back(arc.dst);
      }
    }
    for (auto& [label, dsts] : moves) {
      b.add_arc(id, label, label, state_for(close(std::move(dsts))));
    }
  }
  return Dfa::from_fst(std::move(b).build());
}

Dfa canonicalize(const Dfa& d) {
  FstBuilder b(d.symbols());
  copy_alphabets(d.fst(), b);
  if (d.is_empty()) return Dfa::from_fst(std::move(b).build());
  std::vector<StateId> order(static_cast<std::size_t>(d.num_states()), kNoState);
  std::deque<StateId> queue{d.start()};
  order[static_cast<std::size_t>(d.start())] = b.add_state();
  std::vector<Arc> arcs;
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    StateId id = order[static_cast<std::size_t>(s)];
    if (d.is_final(s)) b.set_final(id);
    for (const Arc& arc : d.arcs(s)) {
      auto& target = order[static_cast<std::size_t>(arc.dst)];
      if (target == kNoState) {
        target = b.add_state();
        queue.push_back(arc.dst);
      }
      arcs.push_back(Arc{id, arc.in, arc.out, target});
    }
  }
  b.set_start(0);
  for (const Arc& arc : arcs) b.add_arc(arc);
  return Dfa::from_fst(std::move(b).build());
}

Dfa minimize(const Dfa& input) {
  const Fst t = trim(input.fst());
  if (t.is_empty()) return Dfa::from_fst(t);
  const auto n = static_cast<std::size_t>(t.num_states());

  // Moore refinement: a state's signature is its current block plus the
  // blocks its labelled arcs lead to. Missing arcs go to the implicit sink.
  std::vector<int> block(n);
  for (std::size_t s = 0; s < n; ++s) block[s] = t.is_final(static_cast<StateId>(s)) ? 1 : 0;
  std::size_t num_blocks = 0;
  while (true) {
    std::map<std::vector<int>, int> signatures;
    std::vector<int> next(n);
    std::vector<int> sig;
    for (std::size_t s = 0; s < n; ++s) {
      sig.clear();
      sig.push_back(block[s]);
      for (const Arc& arc : t.arcs(static_cast<StateId>(s))) {
        sig.push_back(arc.in);
        sig.push_back(block[static_cast<std::size_t>(arc.dst)]);
      }
      auto [it, inserted] = signatures.try_emplace(sig, static_cast<int>(signatures.size()));
      next[s] = it->second;
    }
    block.swap(next);
    if (signatures.size() == num_blocks) break;
    num_blocks = signatures.size();
  }

  FstBuilder b(t.symbols());
  copy_alphabets(t, b);
  b.add_states(static_cast<StateId>(num_blocks));
  b.set_start(block[static_cast<std::size_t>(t.start())]);
  for (std::size_t s = 0; s < n; ++s) {
    if (t.is_final(static_cast<StateId>(s))) b.set_final(block[s]);
    for (const Arc& arc : t.arcs(static_cast<StateId>(s))) {
      b.add_arc(block[s], arc.in, arc.out, block[static_cast<std::size_t>(arc.dst)]);
    }
  }
  return canonicalize(Dfa::from_fst(std::move(b).build()));
}

bool isomorphic(const Dfa& a, const Dfa& b) {
  return canonicalize(a).fst().same_structure(canonicalize(b).fst());
}

}  // namespace subfst
