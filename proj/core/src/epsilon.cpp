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

#include <vector>

#include "subfst/errors.hpp"
#include "subfst/ops.hpp"

namespace subfst {

Fst project_output(const Fst& t) {
  FstBuilder b(t.symbols());
  b.add_states(t.num_states());
  if (!t.is_empty()) b.set_start(t.start());
  for (StateId s : t.finals()) b.set_final(s);
  for (const Arc& a : t.arcs()) b.add_arc(a.src, a.out, a.out, a.dst);
  b.set_input_alphabet(t.output_alphabet());
  b.set_output_alphabet(t.output_alphabet());
  return std::move(b).build();
}

Fst epsilon_remove(const Fst& a) {
  if (!a.is_acceptor()) throw ConfigError("epsilon_remove: input is not an acceptor");
  for (const Arc& arc : a.arcs()) {
    if (arc.in == kPhi) throw ConfigError("epsilon_remove: input has phi arcs");
  }
  FstBuilder b(a.symbols());
  b.add_states(a.num_states());
  if (a.is_empty()) return std::move(b).build();
  b.set_start(a.start());
  b.set_input_alphabet(a.input_alphabet());
  b.set_output_alphabet(a.output_alphabet());

  std::vector<int> seen(static_cast<std::size_t>(a.num_states()), -1);
  std::vector<StateId> stack, closure;
  for (StateId s = 0; s < a.num_states(); ++s) {
    closure.clear();
    stack.assign(1, s);
    seen[static_cast<std::size_t>(s)] = s;
    while (!stack.empty()) {
      StateId u = stack.back();
      stack.pop_back();
      closure.push_back(u);
      for (const Arc& arc : a.arcs_on(u, kEpsilon)) {
        auto& mark = seen[static_cast<std::size_t>(arc.dst)];
        if (mark != s) {
          mark = s;
          stack.push_back(arc.dst);
        }
      }
    }
    for (StateId u : closure) {
      if (a.is_final(u)) b.set_final(s);
      for (const Arc& arc : a.arcs(u)) {
        if (arc.in != kEpsilon) b.add_arc(s, arc.in, arc.out, arc.dst);
      }
    }
  }
  return trim(std::move(b).build());
}

Fst kleene_star_closure(const Fst& t) {
  FstBuilder b(t.symbols());
  b.set_input_alphabet(t.input_alphabet());
  b.set_output_alphabet(t.output_alphabet());
  b.add_states(t.num_states());
  for (const Arc& a : t.arcs()) b.add_arc(a);
  StateId start;
  if (t.is_empty()) {
    start = b.add_state();
  } else {
    bool start_has_incoming = false;
    for (const Arc& a : t.arcs()) start_has_incoming |= a.dst == t.start();
    start = t.start();
    if (start_has_incoming) {
      start = b.add_state();
      b.add_arc(start, kEpsilon, kEpsilon, t.start());
    }
    for (StateId f : t.finals()) {
      b.set_final(f);
      b.add_arc(f, kEpsilon, kEpsilon, start);
    }
  }
  b.set_start(start);
  b.set_final(start);
  return std::move(b).build();
}

Fst identity_transducer(SymbolTablePtr symbols, std::span<const Label> alphabet) {
  FstBuilder b(std::move(symbols));
  StateId s = b.add_state();
  b.set_start(s);
  b.set_final(s);
  for (Label l : alphabet) b.add_arc(s, l, l, s);
  std::vector<Label> labels(alphabet.begin(), alphabet.end());
  b.set_input_alphabet(labels);
  b.set_output_alphabet(labels);
  return std::move(b).build();
}

Fst linear_acceptor(SymbolTablePtr symbols, std::span<const Label> seq) {
  FstBuilder b(std::move(symbols));
  StateId s = b.add_state();
  b.set_start(s);
  for (Label l : seq) {
    StateId n = b.add_state();
    b.add_arc(s, l, l, n);
    s = n;
  }
  b.set_final(s);
  return std::move(b).build();
}

}  // namespace subfst
