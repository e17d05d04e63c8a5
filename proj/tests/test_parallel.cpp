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

// The parallel kernels must reproduce the serial reference exactly.

#include "doctest.h"

#include "biorder/exec.hpp"
#include "biorder/oplus.hpp"
#include "biorder/ring_coord.hpp"

#include "helpers.hpp"

using namespace testing;

namespace {
  struct Threads {
    explicit Threads(int n) : saved(thread_count()) {
      set_thread_count(n);
    }
    ~Threads() {
      set_thread_count(saved);
    }
    int saved;
  };

  bool same(AxiomReport const& a, AxiomReport const& b) {
    if (a.results.size() != b.results.size()) return false;
    for (std::size_t i = 0; i < a.results.size(); ++i) {
      auto const& x = a.results[i];
      auto const& y = b.results[i];
      if (x.name != y.name || x.passed != y.passed || x.witness != y.witness) return false;
    }
    return true;
  }
}  // namespace

TEST_CASE("closure") {
  Threads t(4);
  for (auto const& name : {"M3", "B3", "F3^2", "F2^3"}) {
    CAPTURE(name);
    auto const L = catalog_lattice(name);
    ClosureOptions s, p;
    s.exec = Exec::serial;
    p.exec = Exec::parallel;
    auto const a = generate_PL(L, s);
    auto const b = generate_PL(L, p);
    CHECK(a.elements() == b.elements());
    CHECK(a.idempotents() == b.idempotents());
    CHECK(a.regularity_certificate() == b.regularity_certificate());
  }
}

TEST_CASE("biorder kernels") {
  Threads t(3);
  for (auto const& name : {"M3", "M4", "F2^3"}) {
    CAPTURE(name);
    auto const E = build_biorder(catalog_lattice(name));
    CHECK(same(check_biorder_axioms(E.set, Exec::serial), check_biorder_axioms(E.set, Exec::parallel)));
    CHECK(distance_matrix(E.set, Exec::serial) == distance_matrix(E.set, Exec::parallel));
    CHECK(all_sandwich_sets(E.set, Exec::serial) == all_sandwich_sets(E.set, Exec::parallel));
    for (std::size_t N : {2u, 3u}) {
      SearchOptions s, p;
      s.exec = Exec::serial;
      p.exec = Exec::parallel;
      CHECK(find_E0_subsets(E, N, s) == find_E0_subsets(E, N, p));
    }
  }
  // witnesses agree on a failing structure too
  auto E = build_biorder(diamond(3));
  E.set.erase_product(1, 2);
  E.set.erase_product(5, 6);
  CHECK(same(check_biorder_axioms(E.set, Exec::serial), check_biorder_axioms(E.set, Exec::parallel)));
}

TEST_CASE("ring kernels") {
  Threads t(4);
  auto const R = FiniteRing::matrix_ring(2, 3);
  CHECK(ring_idempotents(R, Exec::serial) == ring_idempotents(R, Exec::parallel));
  CHECK(find_irregular(R, Exec::serial) == find_irregular(R, Exec::parallel));
  RingTables z8;
  z8.n = 8;
  z8.add.assign(8, std::vector<RElem>(8));
  z8.mul.assign(8, std::vector<RElem>(8));
  for (RElem a = 0; a < 8; ++a)
    for (RElem b = 0; b < 8; ++b) {
      z8.add[a][b] = (a + b) % 8;
      z8.mul[a][b] = (a * b) % 8;
    }
  z8.one = 1;
  auto const Z8 = FiniteRing::from_tables(z8);
  CHECK(find_irregular(Z8, Exec::serial) == find_irregular(Z8, Exec::parallel));
  CHECK(find_irregular(Z8, Exec::serial) == RElem{2});

  auto const a = build_ring_biorder(R, Exec::serial);
  auto const b = build_ring_biorder(R, Exec::parallel);
  CHECK(a.idempotents == b.idempotents);
  CHECK(same(verify_ring_biorder_axioms(a, Exec::serial), verify_ring_biorder_axioms(b, Exec::parallel)));
  auto const W  = build_omega_lattice(a);
  auto const T  = build_biorder(W.lattice);
  auto const es = verify_epsilon_iso(a, W, T, Exec::serial);
  auto const ep = verify_epsilon_iso(a, W, T, Exec::parallel);
  CHECK(es.ok() == ep.ok());
  CHECK(es.witness == ep.witness);
}
