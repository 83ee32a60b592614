/*
 * Copyright (c) 2026 vvjack contributors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Microbenchmarks for the hot paths: coefficient arithmetic, graph walks,
// polynomial construction and the pairing.

#include <benchmark/benchmark.h>

#include "vvjack/jack.hpp"

using namespace vvjack;

namespace {

// Canonicalizing rational-function arithmetic is the inner loop of every
// construction; chain products and sums of linear factors.
void BM_AlphaFracChain(benchmark::State& state) {
    for (auto _ : state) {
        AlphaFrac acc(1);
        for (long k = 1; k <= 12; ++k) {
            acc = acc * AlphaFrac::linear(1, k) / AlphaFrac::linear(k, -1);
            acc += AlphaFrac::linear(0, k);
        }
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_AlphaFracChain);

void BM_Component(benchmark::State& state) {
    const Filling T{{3, 2}, {{0, 0, 1}, {1, 2}}};
    for (auto _ : state) {
        ComponentHT c = component(T);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_Component);

void BM_NonsymmetricJack(benchmark::State& state) {
    const Tableau& tau = ShapeContext::get({2, 2}).tableau(0);
    const Weight v{0, 2, 1, 1};
    for (auto _ : state) {
        VvPoly j = nonsymmetric_jack(v, tau);
        benchmark::DoNotOptimize(j);
    }
}
BENCHMARK(BM_NonsymmetricJack);

void BM_ShiftedJack(benchmark::State& state) {
    const Tableau& tau = ShapeContext::get({2, 2}).tableau(0);
    const Weight v{0, 2, 1, 1};
    for (auto _ : state) {
        VvPoly j = shifted_jack(v, tau);
        benchmark::DoNotOptimize(j);
    }
}
BENCHMARK(BM_ShiftedJack);

void BM_Pairing(benchmark::State& state) {
    const Tableau& tau = ShapeContext::get({2, 2}).tableau(0);
    const VvPoly j = nonsymmetric_jack({0, 2, 1, 1}, tau);
    for (auto _ : state) {
        AlphaFrac n = pairing(j, j);
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_Pairing);

void BM_SymmetricJack(benchmark::State& state) {
    const MinimalIndex m = minimal_symmetric({2, 2});
    for (auto _ : state) {
        VvPoly j = symmetric_jack(m.filling);
        benchmark::DoNotOptimize(j);
    }
}
BENCHMARK(BM_SymmetricJack);

}  // namespace

BENCHMARK_MAIN();
