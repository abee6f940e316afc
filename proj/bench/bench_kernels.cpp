// Copyright 2026 The HaS Gateway Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against their OpenMP counterparts on the same
// synthetic corpus.

#include <benchmark/benchmark.h>

#include "has/dataset.hpp"
#include "has/kernels.hpp"

namespace {

struct Fixture {
  has::Recognizer recognizer;
  std::vector<std::string> corpus = has::dataset::texts(has::dataset::synth_news(400, 7));
  has::HideConfig hide{has::HideStrategy::generative(), {}};
  has::InversionAttacker attacker{
      has::train_inversion(has::collect_pairs(corpus, recognizer, hide))};
  has::llm::EchoBackend echo;
  std::vector<has::kernels::TextPair> pairs;

  Fixture() {
    for (std::size_t i = 0; i + 1 < corpus.size(); ++i) pairs.emplace_back(corpus[i], corpus[i + 1]);
  }
  has::kernels::RoundTripJob job() const {
    has::kernels::RoundTripJob j;
    j.recognizer = &recognizer;
    j.hide = hide;
    j.backend = &echo;
    return j;
  }
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

void BM_ProtectionSerial(benchmark::State& state) {
  const Fixture& f = fixture();
  for (auto _ : state) {
    benchmark::DoNotOptimize(has::kernels::serial::protection(f.corpus, f.recognizer, f.hide, f.attacker));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(f.corpus.size()));
}

void BM_ProtectionOmp(benchmark::State& state) {
  const Fixture& f = fixture();
  for (auto _ : state) {
    benchmark::DoNotOptimize(has::kernels::omp::protection(f.corpus, f.recognizer, f.hide, f.attacker));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(f.corpus.size()));
  state.counters["threads"] = has::kernels::omp::max_threads();
}

void BM_RoundTripSerial(benchmark::State& state) {
  const Fixture& f = fixture();
  const auto job = f.job();
  for (auto _ : state) benchmark::DoNotOptimize(has::kernels::serial::round_trip(f.corpus, job));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(f.corpus.size()));
}

void BM_RoundTripOmp(benchmark::State& state) {
  const Fixture& f = fixture();
  const auto job = f.job();
  for (auto _ : state) benchmark::DoNotOptimize(has::kernels::omp::round_trip(f.corpus, job));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(f.corpus.size()));
}

void BM_SimilaritySerial(benchmark::State& state) {
  const Fixture& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(has::kernels::serial::similarities(f.pairs));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(f.pairs.size()));
}

void BM_SimilarityOmp(benchmark::State& state) {
  const Fixture& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(has::kernels::omp::similarities(f.pairs));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(f.pairs.size()));
}

BENCHMARK(BM_ProtectionSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProtectionOmp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RoundTripSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RoundTripOmp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimilaritySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimilarityOmp)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
