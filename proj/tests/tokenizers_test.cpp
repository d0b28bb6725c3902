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

#include <string>
#include <vector>

#include "fixtures.hpp"
#include "generators.hpp"
#include "subfst/errors.hpp"
#include "subfst/tokenizers.hpp"

namespace subfst {
namespace {

using testing::ids;
using testing::spell;
using testing::vocab_of;

TEST(VocabularyTest, CharactersAndLengths) {
  Vocabulary v = testing::bananas_vocab();
  EXPECT_EQ(v.size(), 8u);
  EXPECT_EQ(v.characters().size(), 4u);
  EXPECT_EQ(v.max_token_length(), 4u);
  EXPECT_EQ(v.token_length(v.find("ban")), 3u);
  EXPECT_TRUE(v.is_character(v.find("s")));
  EXPECT_FALSE(v.is_character(v.find("na")));
  EXPECT_THROW(v.characters_of("bz"), InputError);
}

TEST(VocabularyTest, Validation) {
  EXPECT_THROW(vocab_of({"ab"}), ValidationError);
  EXPECT_THROW(vocab_of({"a", "a"}), ValidationError);
  try {
    vocab_of({"a", "abc", "b"});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("'c'"), std::string::npos);
  }
}

TEST(MaxMatchTest, Golden) {
  Vocabulary v = testing::bananas_vocab();
  EXPECT_EQ(spell(v, maxmatch_tokenize(v, "bananas")), "bana na s");
  Vocabulary w = testing::abaab_vocab();
  EXPECT_EQ(spell(w, maxmatch_tokenize(w, "abaab")), "aba ab");
  EXPECT_TRUE(maxmatch_tokenize(w, "").empty());
}

TEST(BpeTest, Golden) {
  BpeTokenizer topo = testing::topology_bpe();
  EXPECT_EQ(spell(topo.vocab(), bpe_tokenize(topo, "topology")), "to po logy");
  EXPECT_EQ(spell(topo.vocab(), bpe_tokenize_iterative(topo, "topology")), "to po logy");
  BpeTokenizer bcab = testing::bcab_bpe();
  EXPECT_EQ(spell(bcab.vocab(), bpe_tokenize(bcab, "bcababcc")), "bc ab ab cc");
  EXPECT_EQ(spell(bcab.vocab(), bpe_tokenize_iterative(bcab, "bcababcc")), "bc ab ab cc");
}

TEST(BpeTest, ApplyMergeIsLeftToRight) {
  Vocabulary v = vocab_of({"a", "aa"});
  Merge m{v.find("a"), v.find("a"), v.find("aa")};
  EXPECT_EQ(spell(v, apply_merge(ids(v, "a a a"), m)), "aa a");
  EXPECT_EQ(spell(v, apply_merge(ids(v, "a a a a"), m)), "aa aa");
}

TEST(BpeTest, TrainGolden) {
  std::vector<std::string> one{"aab", "aab"};
  BpeTrainResult r1 = bpe_train(one, 1);
  ASSERT_EQ(r1.tokenizer.merges().size(), 1u);
  const Vocabulary& v1 = r1.tokenizer.vocab();
  EXPECT_EQ(v1.str(r1.tokenizer.merges()[0].left), "a");
  EXPECT_EQ(v1.str(r1.tokenizer.merges()[0].right), "a");

  std::vector<std::string> two{"abab"};
  BpeTrainResult r2 = bpe_train(two, 2);
  ASSERT_EQ(r2.tokenizer.merges().size(), 2u);
  const Vocabulary& v2 = r2.tokenizer.vocab();
  EXPECT_EQ(v2.str(r2.tokenizer.merges()[0].result), "ab");
  EXPECT_EQ(v2.str(r2.tokenizer.merges()[1].left), "ab");
  EXPECT_EQ(v2.str(r2.tokenizer.merges()[1].right), "ab");
  EXPECT_FALSE(r2.exhausted);

  BpeTrainResult r3 = bpe_train(two, 10);
  EXPECT_TRUE(r3.exhausted);
  EXPECT_THROW(bpe_train(std::vector<std::string>{}, 1), InputError);
}

TEST(BpeTest, TokenizerValidation) {
  Vocabulary v = vocab_of({"a", "b", "ab", "abb"});
  auto pair = [&](const char* l, const char* r) { return std::pair{v.find(l), v.find(r)}; };
  std::vector<std::pair<Label, Label>> ok{pair("a", "b"), pair("ab", "b")};
  EXPECT_NO_THROW(BpeTokenizer(v, ok));
  std::vector<std::pair<Label, Label>> early{pair("ab", "b"), pair("a", "b")};
  EXPECT_THROW(BpeTokenizer(v, early), ValidationError);
  std::vector<std::pair<Label, Label>> missing{pair("b", "a"), pair("a", "b"), pair("ab", "b")};
  EXPECT_THROW(BpeTokenizer(v, missing), ValidationError);
  std::vector<std::pair<Label, Label>> short_list{pair("a", "b")};
  EXPECT_THROW(BpeTokenizer(v, short_list), ValidationError);
}

TEST(SegmentationTest, Golden) {
  Vocabulary v = testing::abaab_vocab();
  EXPECT_EQ(count_segmentations(v, "abaab"), 6u);
  EXPECT_EQ(all_segmentations(v, "abaab").size(), 6u);
  EXPECT_EQ(count_segmentations(v, ""), 1u);
}

TEST(TokenizerPropertyTest, BpeVariantsAgree) {
  testing::Gen g(7);
  for (int trial = 0; trial < 500; ++trial) {
    BpeTokenizer tok = testing::random_bpe(g, g.uniform(1, 4), g.uniform(0, 10));
    std::string text = testing::random_text(g, tok.vocab(), 20);
    ASSERT_EQ(bpe_tokenize(tok, text), bpe_tokenize_iterative(tok, text)) << text;
  }
}

TEST(TokenizerPropertyTest, OutputsSpellTheInput) {
  testing::Gen g(8);
  for (int trial = 0; trial < 300; ++trial) {
    Vocabulary v = testing::random_vocab(g, g.uniform(1, 4), 10);
    std::string text = testing::random_text(g, v, 16);
    EXPECT_EQ(v.concat(maxmatch_tokenize(v, text)), text);
    auto segs = all_segmentations(v, text);
    EXPECT_EQ(segs.size(), count_segmentations(v, text));
    for (const auto& s : segs) EXPECT_EQ(v.concat(s), text);
    BpeTokenizer tok = testing::random_bpe(g, 3, 6);
    std::string t2 = testing::random_text(g, tok.vocab(), 16);
    EXPECT_EQ(tok.vocab().concat(bpe_tokenize(tok, t2)), t2);
  }
}

// Greedy longest match: the first token is the longest vocabulary prefix.
TEST(TokenizerPropertyTest, MaxMatchTakesLongestPrefix) {
  testing::Gen g(9);
  for (int trial = 0; trial < 300; ++trial) {
    Vocabulary v = testing::random_vocab(g, g.uniform(1, 3), 9);
    std::string text = testing::random_text(g, v, 12);
    if (text.empty()) continue;
    auto out = maxmatch_tokenize(v, text);
    std::size_t longest = 0;
    for (Label t : v.tokens()) {
      if (text.rfind(v.str(t), 0) == 0) longest = std::max(longest, v.str(t).size());
    }
    EXPECT_EQ(v.str(out.front()).size(), longest);
  }
}

}  // namespace
}  // namespace subfst
