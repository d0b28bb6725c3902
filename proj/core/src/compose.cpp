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
#include <tuple>
#include <unordered_map>

#include "subfst/errors.hpp"
#include "subfst/ops.hpp"

namespace subfst {
namespace {

// Labels a state reads on ordinary (non-epsilon, non-phi) arcs, sorted.
std::vector<Label> consumed_labels(const Fst& m, StateId s) {
  std::vector<Label> out;
  for (const Arc& a : m.arcs(s)) {
    if (a.in != kEpsilon && a.in != kPhi && (out.empty() || out.back() != a.in)) {
      out.push_back(a.in);
    }
  }
  return out;
}

struct ComposedKey {
  StateId left;
  StateId right;
  int blocked;  // id of the interned set of labels the next symbol must avoid

  friend bool operator==(const ComposedKey&, const ComposedKey&) = default;
};

struct ComposedKeyHash {
  std::size_t operator()(const ComposedKey& k) const {
    std::size_t h = static_cast<std::size_t>(k.left) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::size_t>(k.right) + 0x7F4A7C15ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(k.blocked) + 0x85EBCA6BULL + (h << 6) + (h >> 2);
    return h;
  }
};

class Composer {
 public:
  Composer(const Fst& left, const Fst& right)
      : left_(left), right_(right), builder_(left.symbols()) {
    blocked_sets_.emplace_back();
    blocked_ids_.emplace(std::vector<Label>{}, 0);
  }

  Fst run() {
    builder_.set_input_alphabet(left_.input_alphabet());
    builder_.set_output_alphabet(right_.output_alphabet());
    builder_.set_start(state_for({left_.start(), right_.start(), 0}));
    while (!queue_.empty()) {
      auto [key, id] = queue_.front();
      queue_.pop_front();
      expand(key, id);
    }
    return trim(std::move(builder_).build());
  }

 private:
  StateId state_for(const ComposedKey& key) {
    auto [it, inserted] = states_.try_emplace(key, kNoState);
    if (inserted) {
      it->second = builder_.add_state();
      queue_.emplace_back(key, it->second);
    }
    return it->second;
  }

  int intern(std::vector<Label> labels) {
    auto [it, inserted] = blocked_ids_.try_emplace(labels, static_cast<int>(blocked_sets_.size()));
    if (inserted) blocked_sets_.push_back(std::move(labels));
    return it->second;
  }

  void expand(const ComposedKey& key, StateId id) {
    const StateId q = key.left;
    const StateId r = key.right;
    if (left_.is_final(q) && right_.is_final(r)) builder_.set_final(id);

    const std::vector<Label> blocked = blocked_sets_[static_cast<std::size_t>(key.blocked)];
    auto right_arcs = right_.arcs(r);

    for (const Arc& la : left_.arcs(q)) {
      if (la.out == kEpsilon) {
        builder_.add_arc(id, la.in, kEpsilon, state_for({la.dst, r, key.blocked}));
        continue;
      }
      if (std::binary_search(blocked.begin(), blocked.end(), la.out)) continue;
      for (const Arc& ra : right_.arcs_on(r, la.out)) {
        builder_.add_arc(id, la.in, ra.out, state_for({la.dst, ra.dst, 0}));
      }
    }

    for (const Arc& ra : right_arcs) {
      if (ra.in != kEpsilon) break;
      builder_.add_arc(id, kEpsilon, ra.out, state_for({q, ra.dst, key.blocked}));
    }

    const Arc* phi = right_.phi_arc(r);
    if (phi == nullptr) return;
    std::vector<Label> next_blocked;
    const std::vector<Label> here = consumed_labels(right_, r);
    std::set_union(blocked.begin(), blocked.end(), here.begin(), here.end(),
                   std::back_inserter(next_blocked));
    // Only take the failure arc when some continuation can use it: the left
    // side ends here, or has a symbol the failure target might read.
    bool usable = left_.is_final(q);
    for (const Arc& la : left_.arcs(q)) {
      if (usable) break;
      usable = la.out == kEpsilon ||
               !std::binary_search(next_blocked.begin(), next_blocked.end(), la.out);
    }
    if (!usable) return;
    builder_.add_arc(id, kEpsilon, phi->out,
                     state_for({q, phi->dst, intern(std::move(next_blocked))}));
  }

  const Fst& left_;
  const Fst& right_;
  FstBuilder builder_;
  std::unordered_map<ComposedKey, StateId, ComposedKeyHash> states_;
  std::deque<std::pair<ComposedKey, StateId>> queue_;
  std::vector<std::vector<Label>> blocked_sets_;
  std::map<std::vector<Label>, int> blocked_ids_;
};

}  // namespace

Fst compose(const Fst& left, const Fst& right) {
  if (!same_symbols(left.symbols(), right.symbols())) {
    throw ConfigError("compose: operands use different symbol tables");
  }
  for (const Arc& a : left.arcs()) {
    if (a.in == kPhi) throw ConfigError("compose: left operand has phi arcs");
  }
  if (left.is_empty() || right.is_empty()) {
    FstBuilder b(left.symbols());
    b.set_input_alphabet(left.input_alphabet());
    b.set_output_alphabet(right.output_alphabet());
    return std::move(b).build();
  }
  return Composer(left, right).run();
}

}  // namespace subfst
