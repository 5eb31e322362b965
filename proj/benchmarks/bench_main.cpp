// Copyright 2026 The twir Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <cstdint>

#include "twir/bell_channel.hpp"
#include "twir/bitseq.hpp"
#include "twir/keyrate.hpp"
#include "twir/linear_code.hpp"
#include "twir/quantum_oracle.hpp"
#include "twir/rng.hpp"
#include "twir/toeplitz.hpp"

namespace {

twir::BitSeq random_bits(std::size_t n, double p, twir::Rng& rng) {
  twir::BitSeq b(n);
  for (std::size_t i = 0; i < n; ++i) b.set(i, rng.uniform() < p);
  return b;
}

void BM_PegBuild(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto h = twir::peg_code(n / 2, n, twir::LdpcProfile::irregular(), seed++);
    benchmark::DoNotOptimize(h);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_PegBuild)->Arg(1000)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);

void BM_BpDecode(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const double p = 0.08;
  const auto h = twir::peg_code(n / 2, n, twir::LdpcProfile::irregular(), 7);
  twir::Rng rng(11);
  for (auto _ : state) {
    state.PauseTiming();
    const auto t = twir::syndrome(h, random_bits(n, p, rng));
    state.ResumeTiming();
    benchmark::DoNotOptimize(twir::bp_decode(h, t, p));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_BpDecode)->Arg(1000)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);

void BM_ToeplitzHash(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::size_t ell = n / 2;
  twir::Rng rng(3);
  const auto seed = random_bits(n + ell - 1, 0.5, rng);
  const auto input = random_bits(n, 0.5, rng);
  for (auto _ : state) benchmark::DoNotOptimize(twir::toeplitz_hash(seed, input, ell));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(n / 8));
}
BENCHMARK(BM_ToeplitzHash)->Arg(1 << 10)->Arg(1 << 14)->Arg(100000)->Unit(benchmark::kMicrosecond);

void BM_RateSixState(benchmark::State& state) {
  double e = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(twir::sixstate_rates(e));
    e = e >= 0.35 ? 0.0 : e + 1e-3;
  }
}
BENCHMARK(BM_RateSixState);

void BM_RateBb84(benchmark::State& state) {
  double e = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(twir::bb84_rates(e));
    e = e >= 0.25 ? 0.0 : e + 1e-3;
  }
}
BENCHMARK(BM_RateBb84)->Unit(benchmark::kMicrosecond);

void BM_CcqAssembly(benchmark::State& state) {
  const auto p = twir::six_state_point(0.05);
  for (auto _ : state) benchmark::DoNotOptimize(twir::assemble_two_copy_ccq(p));
}
BENCHMARK(BM_CcqAssembly)->Unit(benchmark::kMicrosecond);

void BM_Theorem3Direct(benchmark::State& state) {
  const auto p = twir::six_state_point(0.05);
  for (auto _ : state) benchmark::DoNotOptimize(twir::theorem3_direct(p));
}
BENCHMARK(BM_Theorem3Direct)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
