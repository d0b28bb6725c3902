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

#include "subfst/fst.hpp"

#include <algorithm>
#include <string>

#include "subfst/errors.hpp"

namespace subfst {
namespace {

std::vector<Label> normalize_alphabet(std::vector<Label> labels) {
  std::erase_if(labels, [](Label l) { return l == kEpsilon || l == kPhi; });
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

}  // namespace

Fst Fst::empty(SymbolTablePtr symbols) {
  return FstBuilder(std::move(symbols)).build();
}

std::vector<StateId> Fst::finals() const {
  std::vector<StateId> out;
  for (StateId s = 0; s < num_states_; ++s) {
    if (finals_[static_cast<std::size_t>(s)]) out.push_back(s);
  }
  return out;
}

std::span<const Arc> Fst::arcs(StateId s) const {
  auto i = static_cast<std::size_t>(s);
  return std::span<const Arc>(arcs_).subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
}

std::span<const Arc> Fst::arcs_on(StateId s, Label in) const {
  auto out = arcs(s);
  auto lo = std::lower_bound(out.begin(), out.end(), in,
                             [](const Arc& a, Label l) { return a.in < l; });
  auto hi = std::upper_bound(lo, out.end(), in, [](Label l, const Arc& a) { return l < a.in; });
  return out.subspan(static_cast<std::size_t>(lo - out.begin()),
                     static_cast<std::size_t>(hi - lo));
}

const Arc* Fst::phi_arc(StateId s) const {
  // Arcs are sorted by input label and phi (1) sorts right after epsilon (0).
  for (const Arc& a : arcs(s)) {
    if (a.in == kPhi) return &a;
    if (a.in > kPhi) break;
  }
  return nullptr;
}

bool Fst::is_acceptor() const {
  return std::all_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.in == a.out; });
}

bool Fst::same_structure(const Fst& other) const {
  return num_states_ == other.num_states_ && start_ == other.start_ &&
         finals_ == other.finals_ && arcs_ == other.arcs_;
}

FstBuilder::FstBuilder(SymbolTablePtr symbols) : symbols_(std::move(symbols)) {
  if (!symbols_) throw ConfigError("machine requires a symbol table");
}

StateId FstBuilder::add_state() {
  finals_.push_back(false);
  return num_states_++;
}

StateId FstBuilder::add_states(StateId n) {
  StateId first = num_states_;
  for (StateId i = 0; i < n; ++i) add_state();
  return first;
}

void FstBuilder::set_start(StateId s) { start_ = s; }

void FstBuilder::set_final(StateId s, bool final) {
  if (s < 0 || s >= num_states_) throw ConfigError("final state out of range");
  finals_[static_cast<std::size_t>(s)] = final;
}

void FstBuilder::add_arc(StateId src, Label in, Label out, StateId dst) {
  arcs_.push_back(Arc{src, in, out, dst});
}

void FstBuilder::set_input_alphabet(std::vector<Label> labels) {
  input_alphabet_ = normalize_alphabet(std::move(labels));
}

void FstBuilder::set_output_alphabet(std::vector<Label> labels) {
  output_alphabet_ = normalize_alphabet(std::move(labels));
}

Fst FstBuilder::build() && {
  Fst f;
  f.symbols_ = std::move(symbols_);
  f.num_states_ = num_states_;
  if (num_states_ > 0) {
    if (start_ < 0 || start_ >= num_states_) throw ConfigError("start state out of range");
    f.start_ = start_;
  } else if (!arcs_.empty()) {
    throw ConfigError("arcs on a machine with no states");
  }
  const auto table_size = static_cast<Label>(f.symbols_->size());
  for (const Arc& a : arcs_) {
    if (a.src < 0 || a.src >= num_states_ || a.dst < 0 || a.dst >= num_states_) {
      throw ConfigError("arc endpoint out of range");
    }
    if (a.in < 0 || a.in >= table_size || a.out < 0 || a.out >= table_size) {
      throw ConfigError("arc label out of range");
    }
    if (a.out == kPhi) throw ConfigError("phi used as an output label");
  }
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());

  f.offsets_.assign(static_cast<std::size_t>(num_states_) + 1, 0);
  for (const Arc& a : arcs_) ++f.offsets_[static_cast<std::size_t>(a.src) + 1];
  for (std::size_t i = 1; i < f.offsets_.size(); ++i) f.offsets_[i] += f.offsets_[i - 1];

  std::vector<Label> ins, outs;
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    if (a.in == kPhi && i > 0 && arcs_[i - 1].src == a.src && arcs_[i - 1].in == kPhi) {
      throw ConfigError("state " + std::to_string(a.src) + " has more than one phi arc");
    }
    ins.push_back(a.in);
    outs.push_back(a.out);
  }
  f.arcs_ = std::move(arcs_);
  f.finals_ = std::move(finals_);
  f.input_alphabet_ = input_alphabet_ ? std::move(*input_alphabet_) : normalize_alphabet(std::move(ins));
  f.output_alphabet_ =
      output_alphabet_ ? std::move(*output_alphabet_) : normalize_alphabet(std::move(outs));
  return f;
}

Dfa Dfa::from_fst(Fst fst) {
  for (StateId s = 0; s < fst.num_states(); ++s) {
    Label prev = kNoLabel;
    for (const Arc& a : fst.arcs(s)) {
      if (a.in != a.out) throw ConfigError("DFA must be an acceptor");
      if (a.in == kEpsilon || a.in == kPhi) throw ConfigError("DFA has an epsilon or phi arc");
      if (a.in == prev) {
        throw ConfigError("DFA state " + std::to_string(s) + " has two arcs on one label");
      }
      prev = a.in;
    }
  }
  return Dfa(std::move(fst));
}

StateId Dfa::next(StateId s, Label label) const {
  auto hit = fst_.arcs_on(s, label);
  return hit.empty() ? kNoState : hit.front().dst;
}

StateId Dfa::walk(std::span<const Label> seq) const {
  if (is_empty()) return kNoState;
  StateId s = start();
  for (Label l : seq) {
    s = next(s, l);
    if (s == kNoState) return kNoState;
  }
  return s;
}

bool Dfa::accepts(std::span<const Label> seq) const {
  StateId s = walk(seq);
  return s != kNoState && is_final(s);
}

}  // namespace subfst
