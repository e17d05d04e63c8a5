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

#include "biorder/biorder.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

using namespace testing;

namespace {
  NVPair pair_of(FiniteLattice const& L, char const* n, char const* v) {
    return {at(L, n), at(L, v)};
  }

  std::set<NVPair> pset(std::vector<NVPair> const& ps) {
    return {ps.begin(), ps.end()};
  }

  std::set<std::pair<Elem, Elem>> raw(std::vector<NVPair> const& ps) {
    std::set<std::pair<Elem, Elem>> out;
    for (auto p : ps) out.emplace(p.n, p.v);
    return out;
  }

  NVPair const zero_of(FiniteLattice const& L) {
    return {L.top(), L.bottom()};
  }
  NVPair const one_of(FiniteLattice const& L) {
    return {L.bottom(), L.top()};
  }
}  // namespace

TEST_CASE("build_biorder relations") {
  SUBCASE("B2") {
    auto const E = build_biorder(boolean_lattice(2));
    auto const& L = E.lattice;
    CHECK(E.size() == 4);
    Idx const ab = E.index(pair_of(L, "a", "b"));
    CHECK(E.set.omega(ab, E.index(one_of(L))));
    CHECK(E.set.omega(E.index(zero_of(L)), ab));
  }
  SUBCASE("M3") {
    auto const E = build_biorder(diamond(3));
    auto const& L = E.lattice;
    CHECK(E.size() == 8);
    CHECK(E.set.R(E.index(pair_of(L, "a1", "a2")), E.index(pair_of(L, "a1", "a3"))));
    CHECK(E.set.L(E.index(pair_of(L, "a1", "a2")), E.index(pair_of(L, "a3", "a2"))));
  }
  SUBCASE("F2^3") {
    CHECK(build_biorder(subspace_lattice(2, 3)).size() == 58);
  }
  SUBCASE("preconditions") {
    CHECK(kind_of([] { build_biorder(pentagon()); }) == ErrorKind::NotComplementedModular);
  }
  SUBCASE("point") {
    auto const E = build_biorder(catalog_lattice("point"));
    CHECK(E.size() == 1);
    CHECK(check_biorder_axioms(E.set).all_passed());
  }
}

TEST_CASE("relations read off the maps") {
  for (auto const& name : small_catalog()) {
    CAPTURE(name);
    auto const E = build_biorder(catalog_lattice(name));
    auto const& L = E.lattice;
    for (Idx e = 0; e < E.size(); ++e) {
      auto const te = oracle::nv_table(L, E.pairs[e].n, E.pairs[e].v);
      for (Idx f = 0; f < E.size(); ++f) {
        auto const tf = oracle::nv_table(L, E.pairs[f].n, E.pairs[f].v);
        CHECK(E.set.omega_l(e, f) == (oracle::then(te, tf) == te));
        CHECK(E.set.omega_r(e, f) == (oracle::then(tf, te) == te));
        CHECK(E.set.R(e, f) == (E.pairs[e].n == E.pairs[f].n));
        CHECK(E.set.L(e, f) == (E.pairs[e].v == E.pairs[f].v));
        // inverse exchanges the two quasi-orders
        Idx const ei = E.index(inverse(E.pairs[e]));
        Idx const fi = E.index(inverse(E.pairs[f]));
        CHECK(E.set.omega_l(e, f) == E.set.omega_r(fi, ei));
      }
      // e e' = e' e = zero, through composition
      auto const ti = oracle::nv_table(L, E.pairs[e].v, E.pairs[e].n);
      auto const z  = oracle::nv_table(L, L.top(), L.bottom());
      CHECK(oracle::then(te, ti) == z);
      CHECK(oracle::then(ti, te) == z);
    }
  }
}

TEST_CASE("basic products") {
  auto const M3 = diamond(3);
  CHECK(basic_product(M3, pair_of(M3, "a1", "a2"), pair_of(M3, "a1", "a3"))
        == pair_of(M3, "a1", "a3"));
  CHECK(kind_of([&] { basic_product(M3, pair_of(M3, "a1", "a2"), pair_of(M3, "a2", "a1")); })
        == ErrorKind::UndefinedProduct);
  auto const B2 = boolean_lattice(2);
  CHECK(basic_product(B2, one_of(B2), pair_of(B2, "a", "b")) == pair_of(B2, "a", "b"));
  for (auto p : idempotent_pairs(B2)) {
    CHECK(basic_product(B2, zero_of(B2), p) == zero_of(B2));
    CHECK(basic_product(B2, p, zero_of(B2)) == zero_of(B2));
    CHECK(basic_product(B2, one_of(B2), p) == p);
    CHECK(basic_product(B2, p, one_of(B2)) == p);
  }
}

TEST_CASE("basic products agree with composition on the domain") {
  for (auto const& name : small_catalog()) {
    CAPTURE(name);
    auto const E = build_biorder(catalog_lattice(name));
    auto const& L = E.lattice;
    for (Idx e = 0; e < E.size(); ++e) {
      auto const te = oracle::nv_table(L, E.pairs[e].n, E.pairs[e].v);
      for (Idx f = 0; f < E.size(); ++f) {
        auto const prod = E.set.product(e, f);
        REQUIRE(prod.has_value() == E.set.in_domain(e, f));
        if (!prod) continue;
        auto const tf = oracle::nv_table(L, E.pairs[f].n, E.pairs[f].v);
        NVPair const p = E.pairs[*prod];
        CHECK(is_complementary(L, p));
        CHECK(oracle::nv_table(L, p.n, p.v) == oracle::then(te, tf));
        CHECK(basic_product(L, E.pairs[e], E.pairs[f]) == p);
      }
    }
  }
}

TEST_CASE("M-sets") {
  auto const E3 = build_biorder(diamond(3));
  auto const& M3 = E3.lattice;
  auto members = [&](LatticeBiorder const& E, NVPair e, NVPair f) {
    std::set<NVPair> out;
    for (Idx g : m_set(E.set, E.index(e), E.index(f)).members) out.insert(E.pairs[g]);
    return out;
  };
  CHECK(members(E3, pair_of(M3, "a1", "a2"), pair_of(M3, "a2", "a1")).count(zero_of(M3)) == 1);
  CHECK(members(E3, pair_of(M3, "a1", "a2"), pair_of(M3, "a1", "a3")).count(pair_of(M3, "a1", "a2"))
        == 1);
  auto const E2 = build_biorder(boolean_lattice(2));
  auto const& B2 = E2.lattice;
  CHECK(members(E2, pair_of(B2, "a", "b"), pair_of(B2, "b", "a")) == std::set<NVPair>{zero_of(B2)});

  // members are exactly omega_l(e) meet omega_r(f)
  for (Idx e = 0; e < E3.size(); ++e)
    for (Idx f = 0; f < E3.size(); ++f) {
      auto const M = m_set(E3.set, e, f);
      std::vector<Idx> want;
      for (Idx g = 0; g < E3.size(); ++g)
        if (E3.set.omega_l(g, e) && E3.set.omega_r(g, f)) want.push_back(g);
      CHECK(M.members == want);
    }
}

TEST_CASE("sandwich sets") {
  auto const E2 = build_biorder(boolean_lattice(2));
  auto const& B2 = E2.lattice;
  CHECK(pset(sandwich_set(E2, pair_of(B2, "a", "b"), pair_of(B2, "b", "a")))
        == std::set<NVPair>{zero_of(B2)});
  auto const E3 = build_biorder(diamond(3));
  auto const& M3 = E3.lattice;
  CHECK(pset(sandwich_set(E3, pair_of(M3, "a1", "a2"), pair_of(M3, "a1", "a3")))
        == std::set<NVPair>{pair_of(M3, "a1", "a2")});
  for (auto p : E3.pairs) {
    CHECK(sandwich_set(E3, p, p) == std::vector<NVPair>{p});
  }
}

TEST_CASE("sandwich via relative complements") {
  auto const M3 = diamond(3);
  CHECK(sandwich_via_complements(M3, pair_of(M3, "a1", "a2"), pair_of(M3, "a2", "a1"))
        == std::vector<NVPair>{zero_of(M3)});
  CHECK(sandwich_via_complements(M3, pair_of(M3, "a1", "a2"), pair_of(M3, "a1", "a3"))
        == std::vector<NVPair>{pair_of(M3, "a1", "a2")});
  CHECK(sandwich_via_complements(M3, one_of(M3), one_of(M3)) == std::vector<NVPair>{one_of(M3)});
}

TEST_CASE("sandwich sets agree with the composition oracle") {
  for (auto const& name : {"point", "chain2", "B2", "M3", "F3^2", "B3"}) {
    CAPTURE(name);
    auto const E = build_biorder(catalog_lattice(name));
    for (auto e : E.pairs)
      for (auto f : E.pairs) {
        auto const S = sandwich_set(E, e, f);
        CHECK(std::is_sorted(S.begin(), S.end()));
        CHECK(raw(S) == oracle::sandwich(E.lattice, {e.n, e.v}, {f.n, f.v}));
        CHECK(S == sandwich_via_complements(E.lattice, e, f));
      }
  }
}

TEST_CASE("sandwich sets with only the zero") {
  for (auto const& name : small_catalog()) {
    CAPTURE(name);
    auto const E = build_biorder(catalog_lattice(name));
    auto const& L = E.lattice;
    std::vector<NVPair> const zero{zero_of(L)};
    for (auto e : E.pairs)
      for (auto f : E.pairs) {
        bool const both = sandwich_set(E, e, f) == zero && sandwich_set(E, f, e) == zero;
        CHECK(both == (L.leq(e.v, f.n) && L.leq(f.v, e.n)));
        CHECK((sandwich_set(E, e, f) == zero) == L.leq(e.v, f.n));
      }
  }
}

TEST_CASE("axiom suite") {
  for (auto const& name : small_catalog()) {
    CAPTURE(name);
    auto const E  = build_biorder(catalog_lattice(name));
    auto const ax = check_biorder_axioms(E.set);
    for (auto const& r : ax.results) {
      CAPTURE(r.name);
      CHECK(r.passed);
    }
    CHECK(ax.find("regular") != nullptr);
    CHECK(ax.find("B4*") != nullptr);
  }
  SUBCASE("a dropped product is caught") {
    auto E = build_biorder(diamond(3));
    Idx const e = E.index(pair_of(E.lattice, "a1", "a2"));
    Idx const f = E.index(pair_of(E.lattice, "a1", "a3"));
    E.set.erase_product(e, f);
    auto const ax = check_biorder_axioms(E.set);
    CHECK_FALSE(ax.all_passed());
    auto const* b1 = ax.find("B1 domain");
    REQUIRE(b1 != nullptr);
    CHECK_FALSE(b1->passed);
    CHECK_FALSE(b1->witness.empty());
  }
  SUBCASE("a wrong product is caught") {
    auto const E0 = build_biorder(diamond(3));
    std::size_t const m = E0.size();
    std::vector<std::uint8_t> wl(m * m), wr(m * m);
    std::vector<Idx> prod(m * m);
    std::vector<std::string> labels;
    for (Idx e = 0; e < m; ++e) {
      labels.push_back(E0.set.label(e));
      for (Idx f = 0; f < m; ++f) {
        wl[e * m + f]   = E0.set.omega_l(e, f);
        wr[e * m + f]   = E0.set.omega_r(e, f);
        prod[e * m + f] = E0.set.product(e, f).value_or(BiorderedSet::undefined);
      }
    }
    Idx const e = E0.index(pair_of(E0.lattice, "a1", "a2"));
    Idx const f = E0.index(pair_of(E0.lattice, "a1", "a3"));
    prod[e * m + f] = e;  // should be f
    BiorderedSet const bad(m, wl, wr, prod, labels);
    CHECK_FALSE(check_biorder_axioms(bad).all_passed());
  }
}

TEST_CASE("E-sequence distance") {
  auto const E = build_biorder(diamond(3));
  auto const& L = E.lattice;
  for (Idx e = 0; e < E.size(); ++e) CHECK(e_distance(E.set, e, e) == 1);
  Idx const a = E.index(pair_of(L, "a1", "a2"));
  Idx const b = E.index(pair_of(L, "a2", "a1"));
  CHECK(e_distance(E.set, a, b) == 3);
  auto const path = e_sequence(E.set, a, b);
  REQUIRE(path.size() == 4);
  CHECK(path.front() == a);
  CHECK(path.back() == b);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    CHECK((E.set.L(path[i], path[i + 1]) || E.set.R(path[i], path[i + 1])));
  }

  // the two-chain: identity and zero are not linked
  auto const C = build_biorder(chain(2));
  REQUIRE(C.size() == 2);
  std::vector<std::pair<Elem, Elem>> cps{{C.pairs[0].n, C.pairs[0].v}, {C.pairs[1].n, C.pairs[1].v}};
  CHECK(e_distance(C.set, 0, 1) == oracle::distance(cps, 0, 1));
  CHECK(e_distance(C.set, 0, 1) == 0);
  CHECK(e_sequence(C.set, 0, 1).empty());
}

TEST_CASE("distance matrix matches breadth-first oracle") {
  for (auto const& name : small_catalog()) {
    CAPTURE(name);
    auto const E = build_biorder(catalog_lattice(name));
    std::vector<std::pair<Elem, Elem>> ps;
    for (auto p : E.pairs) ps.emplace_back(p.n, p.v);
    auto const D = distance_matrix(E.set);
    for (Idx e = 0; e < E.size(); ++e)
      for (Idx f = 0; f < E.size(); ++f) {
        CHECK(D[e * E.size() + f] == oracle::distance(ps, e, f));
      }
  }
}

TEST_CASE("DOT export") {
  auto const E   = build_biorder(diamond(3));
  auto const lr  = lr_graph_dot(E.set);
  auto const ord = omega_diagram_dot(E.set);
  CHECK(lr.find("graph") != std::string::npos);
  CHECK(lr.find("(a1;a2)") != std::string::npos);
  CHECK(ord.find("digraph") != std::string::npos);
  CHECK(lr == lr_graph_dot(E.set));
}

TEST_CASE("lookup errors") {
  auto const E = build_biorder(diamond(3));
  CHECK(kind_of([&] { (void) E.index({0, 0}); }) == ErrorKind::UnknownElement);
  CHECK_FALSE(E.find({1, 1}).has_value());
}
