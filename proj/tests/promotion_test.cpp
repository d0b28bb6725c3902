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

#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "generators.hpp"
#include "subfst/errors.hpp"
#include "subfst/ops.hpp"
#include "subfst/promotion.hpp"
#include "subfst/regex.hpp"
#include "subfst/verify.hpp"

namespace subfst {
namespace {

using testing::ids;
using testing::vocab_of;

std::set<LabelSeq> language(const Dfa& d, std::size_t max_len) { return enumerate_language(d, max_len); }

TEST(PromoteAgnosticTest, LatticeSequences) {
  Vocabulary v = testing::lattice_vocab();
  Dfa a = compile_pattern("abaabcc", v);
  PromotionResult r = promote_agnostic(a, v);
  EXPECT_TRUE(r.dfa.accepts(ids(v, "ab a a bc c")));
  EXPECT_TRUE(r.dfa.accepts(ids(v, "a b a abc c")));
  EXPECT_FALSE(r.dfa.accepts(ids(v, "ab a abc c c")));
  EXPECT_EQ(language(r.dfa, 7).size(), count_segmentations(v, "abaabcc"));
  EXPECT_EQ(r.mode, Mode::kAgnostic);
}

TEST(PromoteAgnosticTest, AbaabAcceptsEverySegmentation) {
  Vocabulary v = testing::abaab_vocab();
  PromotionResult r = promote_agnostic(compile_pattern("abaab", v), v);
  auto segs = all_segmentations(v, "abaab");
  EXPECT_EQ(language(r.dfa, 5), std::set<LabelSeq>(segs.begin(), segs.end()));
  EXPECT_EQ(segs.size(), 6u);
}

TEST(PromoteAgnosticTest, StageIsDeterministicBeforeMinimization) {
  Vocabulary v = testing::lattice_vocab();
  PromotionResult r = promote_agnostic(compile_pattern("(ab|c)*a(bc)?", v), v);
  ASSERT_EQ(r.stages.size(), 1u);
  EXPECT_TRUE(r.stages[0].deterministic);
}

TEST(PromoteMaxMatchTest, Abaab) {
  Vocabulary v = testing::abaab_vocab();
  PromotionResult r = promote_maxmatch(compile_pattern("abaab", v), v);
  EXPECT_EQ(language(r.dfa, 5), (std::set<LabelSeq>{ids(v, "aba ab")}));
}

TEST(PromoteMaxMatchTest, LoopDropsNonGreedyPaths) {
  Vocabulary v = testing::loop_vocab();
  Dfa a = compile_pattern(testing::kLoopPattern, v);
  PromotionResult agn = promote_agnostic(a, v);
  PromotionResult mm = promote_maxmatch(a, v);
  auto la = language(agn.dfa, 6);
  auto lm = language(mm.dfa, 6);
  for (const auto& t : lm) EXPECT_TRUE(la.count(t));
  EXPECT_LT(lm.size(), la.size());
  EXPECT_TRUE(check_promotion(a, mm.dfa, Mode::kMaxMatch, v, nullptr, 10).ok);
}

TEST(PromoteTest, SingletonVocabularyIsIdentity) {
  Vocabulary v = vocab_of({"a", "b", "c"});
  Dfa a = compile_pattern("a(b|c)*a?", v);
  EXPECT_TRUE(isomorphic(promote_agnostic(a, v).dfa, a));
  EXPECT_TRUE(isomorphic(promote_maxmatch(a, v).dfa, a));
  BpeTokenizer none(v, std::vector<std::pair<Label, Label>>{});
  PromotionResult r = promote_bpe(a, none);
  EXPECT_TRUE(isomorphic(r.dfa, a));
  EXPECT_EQ(promotion_stats(r), std::vector<std::size_t>{static_cast<std::size_t>(a.num_states())});
}

TEST(PromoteBpeTest, WalkThroughInstance) {
  BpeTokenizer tok = testing::bcab_bpe();
  const Vocabulary& v = tok.vocab();
  Dfa a = compile_pattern("bcababcc", v);
  std::vector<Dfa> dumps;
  PromotionResult r = promote_bpe(a, tok, {true}, &dumps);
  EXPECT_EQ(language(r.dfa, 8), (std::set<LabelSeq>{ids(v, "bc ab ab cc")}));
  ASSERT_EQ(dumps.size(), 4u);
  EXPECT_EQ(language(dumps[0], 8), (std::set<LabelSeq>{ids(v, "b c ab ab c c")}));
  auto counts = promotion_stats(r);
  ASSERT_EQ(counts.size(), 4u);
  const std::size_t n = static_cast<std::size_t>(a.num_states());
  for (std::size_t k = 0; k < counts.size(); ++k) EXPECT_LE(counts[k], (k + 1) * n * n * n);
}

TEST(PromoteBpeTest, ChainMatchesOracle) {
  BpeTokenizer tok = testing::chain_bpe();
  const Vocabulary& v = tok.vocab();
  Dfa a = compile_pattern(testing::kChainPattern, v);
  PromotionResult r = promote_bpe(a, tok);
  EXPECT_TRUE(check_promotion(a, r.dfa, Mode::kBpe, v, &tok, 8).ok);
  // The agnostic promotion accepts non-canonical tokenizations.
  PromotionResult agn = promote_agnostic(a, v);
  EXPECT_TRUE(agn.dfa.accepts(ids(v, "c d b")));
  EXPECT_FALSE(r.dfa.accepts(ids(v, "c d b")));
  EXPECT_TRUE(r.dfa.accepts(ids(v, "cdb")));
}

TEST(PromoteBpeTest, ChainedEqualsIterated) {
  BpeTokenizer tok = testing::chain_bpe();
  Dfa a = compile_pattern(testing::kChainPattern, tok.vocab());
  EXPECT_TRUE(isomorphic(promote_bpe(a, tok).dfa, promote_bpe_chained(a, tok).dfa));
}

TEST(PromoteTest, EmptyPatternShortCircuits) {
  Vocabulary v = testing::lattice_vocab();
  Dfa a = compile_pattern("[]", v);
  EXPECT_TRUE(promote_agnostic(a, v).dfa.is_empty());
  EXPECT_TRUE(promote_maxmatch(a, v).dfa.is_empty());
  BpeTokenizer tok = testing::bcab_bpe();
  EXPECT_TRUE(promote_bpe(compile_pattern("[]", tok.vocab()), tok).dfa.is_empty());
}

TEST(PromoteTest, AlphabetMismatch) {
  Vocabulary v = testing::lattice_vocab();
  Vocabulary other = vocab_of({"a", "b", "c", "ab"});
  Dfa a = compile_pattern("ab", other);
  EXPECT_THROW(promote_agnostic(a, v), ConfigError);
  EXPECT_THROW(parse_mode("greedy"), ConfigError);
  EXPECT_EQ(parse_mode("bpe"), Mode::kBpe);
}

// One merge over {aa, ac}: at the active state both the postponed arc and the
// failure-derived arc read `a`, so the stage needs determinization.
TEST(PromoteBpeTest, GadgetStageCanBeNondeterministic) {
  Vocabulary v = vocab_of({"a", "b", "c", "ab"});
  BpeTokenizer tok = testing::bpe_of(v, {{"a", "b"}});
  Dfa a = compile_pattern("a(a|c)", v);
  PromotionResult r = promote_bpe(a, tok);
  EXPECT_FALSE(r.stages[0].deterministic);
  EXPECT_EQ(language(r.dfa, 3), (std::set<LabelSeq>{ids(v, "a a"), ids(v, "a c")}));
}

// Two trie nodes pop the same token, so the MaxMatch stage is not always
// deterministic either.
TEST(PromoteMaxMatchTest, StageCanBeNondeterministic) {
  Vocabulary v = vocab_of({"a", "b", "c", "d", "ab", "abcd"});
  Dfa a = compile_pattern("[abcd]*", v);
  PromotionResult r = promote_maxmatch(a, v);
  EXPECT_FALSE(r.stages[0].deterministic);
  EXPECT_TRUE(check_promotion(a, r.dfa, Mode::kMaxMatch, v, nullptr, 7).ok);
}

TEST(VerifyTest, ReportsCounterexamples) {
  Vocabulary v = testing::abaab_vocab();
  Dfa a = compile_pattern("abaab", v);
  Dfa agn = promote_agnostic(a, v).dfa;
  CheckReport r = check_promotion(a, agn, Mode::kMaxMatch, v, nullptr, 5);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.counterexample.empty());

  Dfa other = compile_pattern("abab", v);
  CheckReport r2 = check_promotion(a, promote_agnostic(other, v).dfa, Mode::kAgnostic, v, nullptr, 5);
  EXPECT_FALSE(r2.ok);
  EXPECT_NE(r2.reason.find("rejects"), std::string::npos);

  EXPECT_TRUE(check_promotion(a, agn, Mode::kAgnostic, v, nullptr, 5).ok);
}

class RandomPromotionTest : public ::testing::Test {
 protected:
  testing::PatternShape shape{8, 1, 2, 0.3};
};

TEST_F(RandomPromotionTest, AgnosticAndMaxMatchMatchOracles) {
  testing::Gen g(21);
  for (int trial = 0; trial < 25; ++trial) {
    Vocabulary v = testing::random_vocab(g, g.uniform(1, 4), g.uniform(4, 10));
    Dfa a = testing::random_pattern(g, v, shape);
    PromotionResult agn = promote_agnostic(a, v);
    EXPECT_TRUE(agn.stages[0].deterministic);
    EXPECT_TRUE(isomorphic(agn.dfa, minimize(agn.dfa)));
    CheckReport ra = check_promotion(a, agn.dfa, Mode::kAgnostic, v, nullptr, 8);
    ASSERT_TRUE(ra.ok) << ra.reason << ": " << ra.counterexample;
    PromotionResult mm = promote_maxmatch(a, v);
    CheckReport rm = check_promotion(a, mm.dfa, Mode::kMaxMatch, v, nullptr, 10);
    ASSERT_TRUE(rm.ok) << rm.reason << ": " << rm.counterexample;
  }
}

TEST_F(RandomPromotionTest, BpeMatchesOracleAndChainedForm) {
  testing::Gen g(22);
  for (int trial = 0; trial < 25; ++trial) {
    BpeTokenizer tok = testing::random_bpe(g, g.uniform(1, 4), g.uniform(0, 4));
    Dfa a = testing::random_pattern(g, tok.vocab(), shape);
    PromotionResult r = promote_bpe(a, tok);
    CheckReport rep = check_promotion(a, r.dfa, Mode::kBpe, tok.vocab(), &tok, 10);
    ASSERT_TRUE(rep.ok) << rep.reason << ": " << rep.counterexample;
    EXPECT_TRUE(isomorphic(r.dfa, promote_bpe_chained(a, tok).dfa));
  }
}

TEST_F(RandomPromotionTest, StageCountsStayWithinCubicBound) {
  testing::Gen g(23);
  for (int trial = 0; trial < 10; ++trial) {
    BpeTokenizer tok = testing::random_bpe(g, 3, 8);
    testing::PatternShape six{6, 1, 3, 0.3};
    Dfa a = testing::random_pattern(g, tok.vocab(), six);
    const std::size_t n = static_cast<std::size_t>(a.num_states());
    for (std::size_t c : promotion_stats(promote_bpe(a, tok))) EXPECT_LE(c, 8 * n * n * n);
  }
}

}  // namespace
}  // namespace subfst
