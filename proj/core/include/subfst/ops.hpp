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

#ifndef SUBFST_OPS_HPP_
#define SUBFST_OPS_HPP_

#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "subfst/fst.hpp"

namespace subfst {

using LabelSeq = std::vector<Label>;

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

// Composition of `left` (output side) with `right` (input side). Only
// states reachable from the start pair that can also reach a final pair are
// kept.
//
// Failure arcs in `right` are expanded per composed state. A composed state
// carries the set of labels that were available at the right-hand states it
// failed out of; a left arc whose output is in that set cannot be matched
// there. A failure arc is also usable at end of input: when the left state
// is final, the failure chain may be followed to reach a final right state.
//
// `left` must not contain failure arcs. Throws ConfigError when the two
// machines use different symbol tables.
Fst compose(const Fst& left, const Fst& right);

// Replaces every arc (q, i, o, p) with (q, o, o, p).
Fst project_output(const Fst& t);

// Epsilon-free acceptor with the same language. The result is trimmed. It
// may be nondeterministic. Input must be a phi-free acceptor.
Fst epsilon_remove(const Fst& a);

// Subset construction. Epsilon arcs are closed over; phi arcs are rejected.
Dfa determinize(const Fst& a);

// Trims, merges indistinguishable states by partition refinement and returns
// the canonical numbering (see canonicalize).
Dfa minimize(const Dfa& d);

// Keeps only states that are reachable from the start and can reach a final
// state. An arc that is dropped next to a phi arc widens what that phi arc
// matches, so callers trim phi-free machines.
Fst trim(const Fst& a);

// True iff some accepting path reads `seq` on its input side. A phi arc is
// taken only when no other arc of its state reads the current symbol, or at
// end of input.
bool accepts(const Fst& a, std::span<const Label> seq);

// All input sequences of length <= max_len accepted by `a`. Throws
// EnumerationError once more than `max_paths` prefixes have been explored.
std::set<LabelSeq> enumerate_language(const Fst& a, std::size_t max_len,
                                      std::size_t max_paths = kDefaultEnumerationCap);

// No epsilon or phi input labels and at most one arc per (state, input).
bool is_deterministic(const Fst& a);

// Adds (q, eps, eps, start) for every final q and makes the start final. When
// the start state has incoming arcs a fresh start is added first so that
// making it final does not leak extra strings.
Fst kleene_star_closure(const Fst& t);

// Breadth-first renumbering from the start, visiting arcs in label order.
Dfa canonicalize(const Dfa& d);

// Equal after canonicalization. For minimal DFAs this is isomorphism.
bool isomorphic(const Dfa& a, const Dfa& b);

// Single-state acceptor/transducer mapping each label in `alphabet` to
// itself.
Fst identity_transducer(SymbolTablePtr symbols, std::span<const Label> alphabet);

// Acceptor of exactly `seq`.
Fst linear_acceptor(SymbolTablePtr symbols, std::span<const Label> seq);

}  // namespace subfst

#endif  // SUBFST_OPS_HPP_
