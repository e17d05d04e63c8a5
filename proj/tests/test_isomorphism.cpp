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

#include "doctest.h"

#include <numeric>
#include <random>

#include "biorder/isomorphism.hpp"

#include "helpers.hpp"

using namespace testing;

namespace {
  // The same lattice with its elements renumbered by `perm`.
  FiniteLattice relabel(FiniteLattice const& L, std::vector<Elem> const& perm) {
    std::vector<std::pair<Elem, Elem>> covers;
    for (auto [a, b] : L.covers()) covers.emplace_back(perm[a], perm[b]);
    std::vector<std::string> labels(L.size());
    for (Elem a = 0; a < L.size(); ++a) labels[perm[a]] = "x" + L.label(a);
    return build_lattice(L.size(), covers, labels);
  }
}  // namespace

TEST_CASE("isomorphism search") {
  std::mt19937 rng(7);
  for (auto const& name : {"point", "chain3", "B2", "B3", "M3", "M4", "N5", "F3^2", "F2^3", "F2^4"}) {
    CAPTURE(name);
    auto const L = catalog_lattice(name);
    std::vector<Elem> perm(L.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto const K   = relabel(L, perm);
    auto const iso = find_lattice_isomorphism(L, K);
    REQUIRE(iso.has_value());
    CHECK(is_lattice_isomorphism(L, K, *iso));
  }
}

TEST_CASE("non-isomorphic lattices") {
  CHECK_FALSE(find_lattice_isomorphism(boolean_lattice(2), diamond(3)).has_value());
  CHECK_FALSE(find_lattice_isomorphism(pentagon(), diamond(3)).has_value());
  CHECK_FALSE(find_lattice_isomorphism(chain(4), boolean_lattice(2)).has_value());
  CHECK_FALSE(find_lattice_isomorphism(diamond(4), boolean_lattice(3)).has_value());
  CHECK_FALSE(find_lattice_isomorphism(subspace_lattice(2, 3), boolean_lattice(4)).has_value());
  // four points on the projective line over F3
  CHECK(find_lattice_isomorphism(diamond(4), subspace_lattice(3, 2)).has_value());
}

TEST_CASE("map validation") {
  auto const M3 = diamond(3);
  std::vector<Elem> id{0, 1, 2, 3, 4};
  CHECK(is_lattice_isomorphism(M3, M3, id));
  CHECK(is_lattice_isomorphism(M3, M3, {0, 2, 3, 1, 4}));
  CHECK_FALSE(is_lattice_isomorphism(M3, M3, {4, 1, 2, 3, 0}));
  CHECK_FALSE(is_lattice_isomorphism(M3, M3, {0, 1, 1, 3, 4}));
  CHECK_FALSE(is_lattice_isomorphism(M3, M3, {0, 1, 2}));
}
