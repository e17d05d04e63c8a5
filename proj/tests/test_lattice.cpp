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

#include "biorder/catalog.hpp"
#include "biorder/lattice.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

using namespace testing;

TEST_CASE("build_lattice from covers") {
  SUBCASE("four-element boolean lattice") {
    std::vector<std::pair<Elem, Elem>> covers{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    auto L = build_lattice(4, covers);
    CHECK(L.size() == 4);
    CHECK(L.bottom() == 0);
    CHECK(L.top() == 3);
    CHECK(L.join(1, 2) == 3);
    CHECK(L.meet(1, 2) == 0);
  }
  SUBCASE("diamond") {
    std::vector<std::pair<Elem, Elem>> covers{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
    auto L = build_lattice(5, covers);
    CHECK(L.top() == 4);
    for (Elem a = 1; a <= 3; ++a)
      for (Elem b = 1; b <= 3; ++b)
        if (a != b) {
          CHECK(L.join(a, b) == 4);
          CHECK(L.meet(a, b) == 0);
        }
  }
  SUBCASE("missing top is not a lattice") {
    std::vector<std::pair<Elem, Elem>> covers{{0, 1}, {0, 2}, {1, 3}, {2, 4}};
    CHECK(kind_of([&] { build_lattice(5, covers); }) == ErrorKind::NotALattice);
  }
  SUBCASE("cycle") {
    std::vector<std::pair<Elem, Elem>> covers{{0, 1}, {1, 2}, {2, 1}};
    CHECK(kind_of([&] { build_lattice(3, covers); }) == ErrorKind::NotAPoset);
  }
  SUBCASE("empty") {
    CHECK(kind_of([&] { build_lattice(0, {}); }) == ErrorKind::Unbounded);
  }
  SUBCASE("one element") {
    auto L = build_lattice(1, {});
    CHECK(L.bottom() == L.top());
    CHECK(is_complemented_modular(L));
  }
}

TEST_CASE("meet and join are greatest lower and least upper bounds") {
  for (auto const& name : small_catalog()) {
    CAPTURE(name);
    auto const L      = catalog_lattice(name);
    auto [meet, join] = oracle::meet_join(L.size(), [&](Elem a, Elem b) { return L.leq(a, b); });
    for (Elem a = 0; a < L.size(); ++a) {
      CHECK(L.leq(L.bottom(), a));
      CHECK(L.leq(a, L.top()));
      for (Elem b = 0; b < L.size(); ++b) {
        CHECK(L.meet(a, b) == meet[a * L.size() + b]);
        CHECK(L.join(a, b) == join[a * L.size() + b]);
      }
    }
  }
}

TEST_CASE("modularity") {
  CHECK(is_modular(catalog_lattice("M3")));
  CHECK(is_modular(catalog_lattice("chain5")));
  auto const N5  = pentagon();
  auto const bad = find_modularity_violation(N5);
  REQUIRE(bad.has_value());
  CHECK((*bad)[0] == at(N5, "x"));
  CHECK((*bad)[1] == at(N5, "y"));
  CHECK((*bad)[2] == at(N5, "z"));

  // agrees with the law evaluated directly
  for (auto const& name : {"N5", "M3", "B3", "chain4", "F2^3", "M4"}) {
    auto const L      = catalog_lattice(name);
    bool       direct = true;
    for (Elem a = 0; a < L.size(); ++a)
      for (Elem b = 0; b < L.size(); ++b)
        for (Elem c = 0; c < L.size(); ++c)
          if (L.leq(a, c) && L.meet(L.join(a, b), c) != L.join(a, L.meet(b, c))) direct = false;
    CHECK(is_modular(L) == direct);
  }
}

TEST_CASE("complemented") {
  CHECK(is_complemented(catalog_lattice("M3")));
  CHECK(is_complemented(catalog_lattice("B2")));
  auto const C   = chain(3);
  auto const bad = find_uncomplemented(C);
  REQUIRE(bad.has_value());
  CHECK(*bad == at(C, "c1"));
}

TEST_CASE("complements") {
  auto const M3 = diamond(3);
  CHECK(as_set(complements(M3, at(M3, "a1"))) == elems(M3, {"a2", "a3"}));
  for (auto const& name : small_catalog()) {
    auto const L = catalog_lattice(name);
    CHECK(complements(L, L.bottom()) == std::vector<Elem>{L.top()});
    for (Elem a = 0; a < L.size(); ++a) {
      CHECK(complements(L, a) == relative_complements(L, a, {L.bottom(), L.top()}));
    }
  }
  auto const C = chain(3);
  CHECK(complements(C, at(C, "c1")).empty());
}

TEST_CASE("relative complements") {
  auto const M3 = diamond(3);
  Elem const a2 = at(M3, "a2");
  CHECK(as_set(relative_complements(M3, a2, {a2, M3.top()})) == elems(M3, {"1"}));
  CHECK(as_set(relative_complements(M3, M3.bottom(), {M3.bottom(), a2})) == elems(M3, {"a2"}));
  CHECK(kind_of([&] { relative_complements(M3, at(M3, "a1"), {M3.bottom(), a2}); })
        == ErrorKind::OutOfInterval);

  auto const F = subspace_lattice(2, 3);
  CHECK(as_set(relative_complements(F, at(F, "<100>"), {F.bottom(), at(F, "<100,010>")}))
        == elems(F, {"<010>", "<110>"}));
}

TEST_CASE("independence") {
  auto const M3 = diamond(3);
  std::vector<Elem> two{at(M3, "a1"), at(M3, "a2")};
  std::vector<Elem> three{at(M3, "a1"), at(M3, "a2"), at(M3, "a3")};
  CHECK(is_independent(M3, two));
  CHECK_FALSE(is_independent(M3, three));
  CHECK(find_dependent(M3, three).has_value());
  for (Elem x = 1; x < M3.size(); ++x) {
    std::vector<Elem> one{x};
    CHECK(is_independent(M3, one));
  }
}

TEST_CASE("perspectivity") {
  auto const M3 = diamond(3);
  CHECK(as_set(perspectivity_axes(M3, at(M3, "a1"), at(M3, "a2"))) == elems(M3, {"a3"}));
  for (auto const& name : small_catalog()) {
    auto const L = catalog_lattice(name);
    for (Elem a = 0; a < L.size(); ++a) {
      auto const self = perspectivity_axes(L, a, a);
      CHECK(std::find(self.begin(), self.end(), L.bottom()) != self.end());
      for (Elem b = 0; b < L.size(); ++b) {
        CHECK(perspectivity_axes(L, a, b) == perspectivity_axes(L, b, a));
      }
    }
  }
  auto const B2 = boolean_lattice(2);
  CHECK(perspectivity_axes(B2, at(B2, "a"), at(B2, "b")).empty());
  CHECK_FALSE(are_perspective(B2, at(B2, "a"), at(B2, "b")));
}

TEST_CASE("find by label or index") {
  auto const M3 = diamond(3);
  CHECK(M3.find("a2") == 2u);
  CHECK(M3.find("3") == 3u);
  CHECK_FALSE(M3.find("zz").has_value());
  // labels win over indices
  auto const C = build_lattice(2, std::vector<std::pair<Elem, Elem>>{{0, 1}}, {"1", "0"});
  CHECK(C.find("1") == 0u);
  auto const D = build_lattice(2, std::vector<std::pair<Elem, Elem>>{{0, 1}}, {"x", "x"});
  CHECK(kind_of([&] { (void) D.find("x"); }) == ErrorKind::UnknownElement);
}

TEST_CASE("catalog sizes") {
  CHECK(catalog_lattice("point").size() == 1);
  CHECK(catalog_lattice("chain3").size() == 3);
  CHECK(catalog_lattice("B3").size() == 8);
  CHECK(catalog_lattice("M4").size() == 6);
  CHECK(catalog_lattice("N5").size() == 5);
  CHECK(catalog_lattice("F3^2").size() == 6);
  CHECK(catalog_lattice("F2^3").size() == oracle::f2_subspaces(3).size());
  CHECK(catalog_lattice("F2^4").size() == oracle::f2_subspaces(4).size());
  CHECK(oracle::f2_subspaces(4).size() == 67);
  CHECK(kind_of([] { catalog_lattice("nope"); }) == ErrorKind::ParseError);
  for (auto const& name : small_catalog()) {
    CHECK(is_complemented_modular(catalog_lattice(name)));
  }
}

TEST_CASE("subspace lattice matches the brute-force subspace order") {
  for (unsigned k : {2u, 3u}) {
    auto const L    = subspace_lattice(2, k);
    auto const subs = oracle::f2_subspaces(k);
    // count of elements per height equals the gaussian binomial
    std::vector<std::size_t> per_height(k + 1, 0);
    for (Elem a = 0; a < L.size(); ++a) per_height[L.height(a)]++;
    for (unsigned r = 0; r <= k; ++r) {
      CHECK(per_height[r] == oracle::gaussian_binomial(k, r, 2));
    }
    std::size_t comparable = 0, comparable_oracle = 0;
    for (Elem a = 0; a < L.size(); ++a)
      for (Elem b = 0; b < L.size(); ++b) comparable += L.leq(a, b);
    for (auto a : subs)
      for (auto b : subs) comparable_oracle += (a & b) == a;
    CHECK(comparable == comparable_oracle);
  }
}

TEST_CASE("subspace meet and join are intersection and span") {
  for (unsigned k : {2u, 3u}) {
    auto const L = subspace_lattice(2, k);
    std::set<std::uint32_t> masks;
    for (Elem a = 0; a < L.size(); ++a) masks.insert(oracle::f2_mask(L.label(a), k));
    CHECK(masks.size() == L.size());
    for (Elem a = 0; a < L.size(); ++a)
      for (Elem b = 0; b < L.size(); ++b) {
        auto const ma = oracle::f2_mask(L.label(a), k), mb = oracle::f2_mask(L.label(b), k);
        CHECK(oracle::f2_mask(L.label(L.meet(a, b)), k) == (ma & mb));
        CHECK(oracle::f2_mask(L.label(L.join(a, b)), k) == oracle::f2_span(ma, mb, k));
      }
  }
}
