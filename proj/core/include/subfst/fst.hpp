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

#ifndef SUBFST_FST_HPP_
#define SUBFST_FST_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "subfst/symbol_table.hpp"

namespace subfst {

// (src, input, output, dst). Ordering is lexicographic in field order, which
// is also the order arcs are stored and serialized in.
struct Arc {
  StateId src = 0;
  Label in = kEpsilon;
  Label out = kEpsilon;
  StateId dst = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Immutable unweighted finite-state transducer. Input and output labels live
// in one SymbolTable. A machine with zero states is the empty machine: it has
// no start state and accepts nothing.
//
// Invariants checked at build time:
//   - every arc endpoint is a valid state
//   - phi appears only as an input label
//   - at most one phi arc leaves any state
class Fst {
 public:
  Fst() = default;

  static Fst empty(SymbolTablePtr symbols);

  const SymbolTablePtr& symbols() const { return symbols_; }
  StateId num_states() const { return num_states_; }
  StateId start() const { return start_; }
  bool is_empty() const { return num_states_ == 0; }
  bool is_final(StateId s) const { return finals_[static_cast<std::size_t>(s)]; }
  std::vector<StateId> finals() const;

  std::span<const Arc> arcs() const { return arcs_; }
  std::span<const Arc> arcs(StateId s) const;
  // Arcs leaving `s` whose input label is `in`.
  std::span<const Arc> arcs_on(StateId s, Label in) const;
  std::size_t num_arcs() const { return arcs_.size(); }
  // Failure arc leaving `s`, if any.
  const Arc* phi_arc(StateId s) const;

  // Non-epsilon, non-phi labels this machine reads / writes. They may be
  // larger than the set of labels actually used on arcs.
  const std::vector<Label>& input_alphabet() const { return input_alphabet_; }
  const std::vector<Label>& output_alphabet() const { return output_alphabet_; }

  // input == output on every arc.
  bool is_acceptor() const;

  // Structural equality (same numbering). Alphabets are not compared.
  bool same_structure(const Fst& other) const;

 private:
  friend class FstBuilder;

  SymbolTablePtr symbols_;
  StateId num_states_ = 0;
  StateId start_ = kNoState;
  std::vector<bool> finals_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> offsets_;  // CSR index into arcs_, size num_states_+1
  std::vector<Label> input_alphabet_;
  std::vector<Label> output_alphabet_;
};

class FstBuilder {
 public:
  explicit FstBuilder(SymbolTablePtr symbols);

  StateId add_state();
  StateId add_states(StateId n);
  StateId num_states() const { return num_states_; }
  void set_start(StateId s);
  void set_final(StateId s, bool final = true);
  void add_arc(StateId src, Label in, Label out, StateId dst);
  void add_arc(const Arc& a) { add_arc(a.src, a.in, a.out, a.dst); }
  // When unset, alphabets are derived from the labels on arcs.
  void set_input_alphabet(std::vector<Label> labels);
  void set_output_alphabet(std::vector<Label> labels);

  // Sorts and deduplicates arcs, then validates the invariants above.
  // Throws ConfigError on violation.
  Fst build() &&;

 private:
  SymbolTablePtr symbols_;
  StateId num_states_ = 0;
  StateId start_ = kNoState;
  std::vector<bool> finals_;
  std::vector<Arc> arcs_;
  std::optional<std::vector<Label>> input_alphabet_;
  std::optional<std::vector<Label>> output_alphabet_;
};

// Deterministic, epsilon-free, phi-free acceptor.
class Dfa {
 public:
  Dfa() = default;

  // Throws ConfigError unless `fst` is a deterministic acceptor.
  static Dfa from_fst(Fst fst);

  const Fst& fst() const { return fst_; }
  operator const Fst&() const { return fst_; }  // NOLINT(google-explicit-constructor)

  const SymbolTablePtr& symbols() const { return fst_.symbols(); }
  StateId num_states() const { return fst_.num_states(); }
  StateId start() const { return fst_.start(); }
  bool is_empty() const { return fst_.is_empty(); }
  bool is_final(StateId s) const { return fst_.is_final(s); }
  std::span<const Arc> arcs(StateId s) const { return fst_.arcs(s); }
  std::size_t num_arcs() const { return fst_.num_arcs(); }

  // Successor of `s` on `label`, or kNoState.
  StateId next(StateId s, Label label) const;
  // Runs `seq` from the start state; kNoState if it falls off.
  StateId walk(std::span<const Label> seq) const;
  bool accepts(std::span<const Label> seq) const;

 private:
  explicit Dfa(Fst fst) : fst_(std::move(fst)) {}
  Fst fst_;
};

}  // namespace subfst

#endif  // SUBFST_FST_HPP_
