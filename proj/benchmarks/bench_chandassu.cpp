/*
 * Copyright 2026 The Chandassu Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <fstream>
#include <iterator>
#include <string>

#include <benchmark/benchmark.h>

#include "chandassu/padya_bhedam.hpp"
#include "chandassu/prosody.hpp"
#include "chandassu/tokenizer.hpp"

namespace {

const std::string& padyam() {
  static const std::string text = [] {
    std::ifstream in(CHANDASSU_FIXTURE_DIR "/vutpalamaala_ganapati.txt");
    return std::string(std::istreambuf_iterator<char>(in), {});
  }();
  return text;
}

void BM_Tokenize(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(chandassu::tokenize(padyam()));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * padyam().size()));
}
BENCHMARK(BM_Tokenize);

void BM_GenerateLg(benchmark::State& state) {
  const auto tokens = chandassu::tokenize(padyam());
  for (auto _ : state) {
    benchmark::DoNotOptimize(chandassu::generate_lg(std::span<const chandassu::AksharamToken>(tokens)));
  }
}
BENCHMARK(BM_GenerateLg);

void BM_Evaluate(benchmark::State& state) {
  const chandassu::Evaluator evaluator;
  for (auto _ : state) benchmark::DoNotOptimize(evaluator.evaluate(padyam(), "vutpalamaala"));
}
BENCHMARK(BM_Evaluate);

void BM_EvaluateAuto(benchmark::State& state) {
  const chandassu::Evaluator evaluator;
  for (auto _ : state) benchmark::DoNotOptimize(evaluator.evaluate_auto(padyam()));
}
BENCHMARK(BM_EvaluateAuto);

}  // namespace

BENCHMARK_MAIN();
