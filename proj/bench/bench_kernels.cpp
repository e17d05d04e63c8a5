/*
 *   Copyright 2026 The biorder authors
 *
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

// Serial reference kernels against their OpenMP counterparts.
//
//   ./bench_kernels --benchmark_filter=closure
//
// Arguments: 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include "biorder/biorder.hpp"
#include "biorder/catalog.hpp"
#include "biorder/oplus.hpp"
#include "biorder/pl_semigroup.hpp"
#include "biorder/ring_coord.hpp"

namespace {

  using namespace biorder;

  Exec mode(benchmark::State const& state) {
    return state.range(0) == 0 ? Exec::serial : Exec::parallel;
  }

  void label(benchmark::State& state) {
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
  }

  void closure_F2_3(benchmark::State& state) {
    auto const     L = subspace_lattice(2, 3);
    ClosureOptions opts;
    opts.exec = mode(state);
    for (auto _ : state) {
      benchmark::DoNotOptimize(generate_PL(L, opts).size());
    }
    label(state);
  }
  BENCHMARK(closure_F2_3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

  void closure_F2_4(benchmark::State& state) {
    auto const     L = subspace_lattice(2, 4);
    ClosureOptions opts;
    opts.exec = mode(state);
    for (auto _ : state) {
      benchmark::DoNotOptimize(generate_PL(L, opts).size());
    }
    label(state);
  }
  BENCHMARK(closure_F2_4)->Arg(0)->Arg(1)->Unit(benchmark::kSecond)->Iterations(1);

  void axioms_F2_4(benchmark::State& state) {
    auto const E = build_biorder(subspace_lattice(2, 4));
    for (auto _ : state) {
      benchmark::DoNotOptimize(check_biorder_axioms(E.set, mode(state)).all_passed());
    }
    label(state);
  }
  BENCHMARK(axioms_F2_4)->Arg(0)->Arg(1)->Unit(benchmark::kSecond)->Iterations(1);

  void distances_F2_4(benchmark::State& state) {
    auto const E = build_biorder(subspace_lattice(2, 4));
    for (auto _ : state) {
      benchmark::DoNotOptimize(distance_matrix(E.set, mode(state)).size());
    }
    label(state);
  }
  BENCHMARK(distances_F2_4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

  void basis_search_F2_4(benchmark::State& state) {
    auto const    E = build_biorder(subspace_lattice(2, 4));
    SearchOptions opts;
    opts.exec = mode(state);
    for (auto _ : state) {
      benchmark::DoNotOptimize(find_E0_subsets(E, 4, opts).size());
    }
    label(state);
  }
  BENCHMARK(basis_search_F2_4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

  void idempotents_M4F2(benchmark::State& state) {
    auto const R = FiniteRing::matrix_ring(2, 4);
    for (auto _ : state) {
      benchmark::DoNotOptimize(ring_idempotents(R, mode(state)).size());
    }
    label(state);
  }
  BENCHMARK(idempotents_M4F2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

  void regularity_M4F2(benchmark::State& state) {
    auto const R = FiniteRing::matrix_ring(2, 4);
    for (auto _ : state) {
      benchmark::DoNotOptimize(find_irregular(R, mode(state)));
    }
    label(state);
  }
  BENCHMARK(regularity_M4F2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
