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

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "subfst/lexicon.hpp"
#include "subfst/ops.hpp"
#include "subfst/promotion.hpp"
#include "subfst/regex.hpp"
#include "subfst/tokenizers.hpp"

namespace subfst {
namespace {

// Deterministic corpus of words over {a, b, c, d}.
std::vector<std::string> corpus(std::size_t words) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> len(2, 9), ch(0, 3);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < words; ++i) {
    std::string w;
    for (int n = len(rng); n > 0; --n) w.push_back(static_cast<char>('a' + ch(rng)));
    out.push_back(w);
  }
  return out;
}

BpeTokenizer trained(std::size_t merges) { return bpe_train(corpus(500), merges).tokenizer; }

std::string text(std::size_t n) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> ch(0, 3);
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(static_cast<char>('a' + ch(rng)));
  return s;
}

constexpr const char* kPattern = "(ab|cd)*(a|bc)+d?";

void BM_MaxMatchTokenize(benchmark::State& state) {
  Vocabulary v = trained(32).vocab();
  std::string s = text(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(maxmatch_tokenize(v, s));
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MaxMatchTokenize)->Arg(64)->Arg(1024)->Arg(16384);

void BM_BpeTokenize(benchmark::State& state) {
  BpeTokenizer tok = trained(32);
  std::string s = text(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bpe_tokenize(tok, s));
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BpeTokenize)->Arg(64)->Arg(1024)->Arg(16384);

void BM_BpeTokenizeIterative(benchmark::State& state) {
  BpeTokenizer tok = trained(32);
  std::string s = text(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bpe_tokenize_iterative(tok, s));
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BpeTokenizeIterative)->Arg(64)->Arg(1024)->Arg(16384);

void BM_ComposeLexicon(benchmark::State& state) {
  BpeTokenizer tok = trained(static_cast<std::size_t>(state.range(0)));
  Dfa a = compile_pattern(kPattern, tok.vocab());
  Fst lexicon = build_lexicon_transducer(tok.vocab());
  for (auto _ : state) benchmark::DoNotOptimize(compose(a.fst(), lexicon));
}
BENCHMARK(BM_ComposeLexicon)->Arg(8)->Arg(32)->Arg(128);

void BM_CompilePattern(benchmark::State& state) {
  Vocabulary v = trained(8).vocab();
  for (auto _ : state) benchmark::DoNotOptimize(compile_pattern(kPattern, v));
}
BENCHMARK(BM_CompilePattern);

void BM_PromoteAgnostic(benchmark::State& state) {
  BpeTokenizer tok = trained(static_cast<std::size_t>(state.range(0)));
  Dfa a = compile_pattern(kPattern, tok.vocab());
  for (auto _ : state) benchmark::DoNotOptimize(promote_agnostic(a, tok.vocab()));
}
BENCHMARK(BM_PromoteAgnostic)->Arg(8)->Arg(32)->Arg(128);

void BM_PromoteMaxMatch(benchmark::State& state) {
  BpeTokenizer tok = trained(static_cast<std::size_t>(state.range(0)));
  Dfa a = compile_pattern(kPattern, tok.vocab());
  for (auto _ : state) benchmark::DoNotOptimize(promote_maxmatch(a, tok.vocab()));
}
BENCHMARK(BM_PromoteMaxMatch)->Arg(8)->Arg(32)->Arg(128);

void BM_PromoteBpe(benchmark::State& state) {
  BpeTokenizer tok = trained(static_cast<std::size_t>(state.range(0)));
  Dfa a = compile_pattern(kPattern, tok.vocab());
  for (auto _ : state) benchmark::DoNotOptimize(promote_bpe(a, tok));
}
BENCHMARK(BM_PromoteBpe)->Arg(4)->Arg(16)->Arg(32);

}  // namespace
}  // namespace subfst

BENCHMARK_MAIN();
