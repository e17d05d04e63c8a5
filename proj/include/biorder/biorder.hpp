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

// Biordered sets: quasi-orders w^l and w^r, the basic partial product on
// D_E, M-sets and sandwich sets, the axiom checker, and E-sequence distance.
//
// Conventions: e w^l f iff ef = e, e w^r f iff fe = e. Distances follow the
// E-sequence definition literally: d(e, e) = 1 and d(e, f) = 0 when no
// E-sequence joins e to f.

#ifndef BIORDER_BIORDER_HPP_
#define BIORDER_BIORDER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biorder/exec.hpp"
#include "biorder/lattice.hpp"
#include "biorder/pl_semigroup.hpp"

namespace biorder {

  using Idx = std::uint32_t;

  class BiorderedSet {
   public:
    static constexpr Idx undefined = static_cast<Idx>(-1);

    BiorderedSet() = default;
    //! Relations and the product table are row-major m*m; product entries
    //! off D_E must be `undefined`.
    BiorderedSet(std::size_t               m,
                 std::vector<std::uint8_t> omega_l,
                 std::vector<std::uint8_t> omega_r,
                 std::vector<Idx>          product,
                 std::vector<std::string>  labels);

    [[nodiscard]] std::size_t size() const noexcept {
      return _m;
    }
    [[nodiscard]] bool omega_l(Idx e, Idx f) const noexcept {
      return _omega_l[e * _m + f] != 0;
    }
    [[nodiscard]] bool omega_r(Idx e, Idx f) const noexcept {
      return _omega_r[e * _m + f] != 0;
    }
    [[nodiscard]] bool omega(Idx e, Idx f) const noexcept {
      return omega_l(e, f) && omega_r(e, f);
    }
    [[nodiscard]] bool L(Idx e, Idx f) const noexcept {
      return omega_l(e, f) && omega_l(f, e);
    }
    [[nodiscard]] bool R(Idx e, Idx f) const noexcept {
      return omega_r(e, f) && omega_r(f, e);
    }
    //! (e, f) in (w^r u w^l) u (w^r u w^l)^-1.
    [[nodiscard]] bool in_domain(Idx e, Idx f) const noexcept {
      return omega_l(e, f) || omega_r(e, f) || omega_l(f, e) || omega_r(f, e);
    }
    [[nodiscard]] std::optional<Idx> product(Idx e, Idx f) const noexcept {
      Idx p = _product[e * _m + f];
      if (p == undefined) {
        return std::nullopt;
      }
      return p;
    }
    [[nodiscard]] std::string const& label(Idx e) const {
      return _labels[e];
    }

    //! Removes one product entry; used to build negative instances.
    void erase_product(Idx e, Idx f) {
      _product[e * _m + f] = undefined;
    }

   private:
    std::size_t               _m = 0;
    std::vector<std::uint8_t> _omega_l;
    std::vector<std::uint8_t> _omega_r;
    std::vector<Idx>          _product;
    std::vector<std::string>  _labels;
  };

  struct MSet {
    std::vector<Idx> members;
    //! precedes[i * k + j]: members[i] < members[j], with k = members.size().
    std::vector<std::uint8_t> precedes;
  };

  MSet             m_set(BiorderedSet const& E, Idx e, Idx f);
  std::vector<Idx> sandwich_set(BiorderedSet const& E, Idx e, Idx f);
  //! S(e, f) for every ordered pair, row-major.
  std::vector<std::vector<Idx>> all_sandwich_sets(BiorderedSet const& E,
                                                  Exec exec = Exec::parallel);

  struct AxiomResult {
    std::string name;
    bool        passed = true;
    std::string witness;
    std::string note;
  };

  struct AxiomReport {
    std::vector<AxiomResult> results;

    [[nodiscard]] bool all_passed() const;
    [[nodiscard]] AxiomResult const* find(std::string const& name) const;
  };

  AxiomReport check_biorder_axioms(BiorderedSet const& E,
                                   Exec                exec = Exec::parallel);

  std::size_t e_distance(BiorderedSet const& E, Idx e, Idx f);
  //! A shortest E-sequence from e to f (inclusive); empty when unreachable.
  std::vector<Idx> e_sequence(BiorderedSet const& E, Idx e, Idx f);
  //! All pairwise distances, row-major.
  std::vector<std::uint32_t> distance_matrix(BiorderedSet const& E,
                                             Exec exec = Exec::parallel);

  //! Undirected (L u R) graph, edges labelled L or R.
  std::string lr_graph_dot(BiorderedSet const& E);
  //! Covering edges of the strict parts of w^l and w^r, labelled l and r.
  std::string omega_diagram_dot(BiorderedSet const& E);

  //! E_{P(L)} together with the pairs it indexes.
  struct LatticeBiorder {
    FiniteLattice       lattice;
    std::vector<NVPair> pairs;
    BiorderedSet        set;
    std::vector<Idx>    lookup;  // n * |L| + v -> index or undefined

    [[nodiscard]] std::optional<Idx> find(NVPair p) const;
    //! Throws UnknownElement.
    [[nodiscard]] Idx index(NVPair p) const;
    [[nodiscard]] std::size_t size() const noexcept {
      return pairs.size();
    }
  };

  //! Throws NotComplementedModular.
  LatticeBiorder build_biorder(FiniteLattice const& L);

  //! The basic product of two complementary pairs; throws UndefinedProduct
  //! off D_E.
  NVPair basic_product(FiniteLattice const& L, NVPair e, NVPair f);

  std::vector<NVPair> sandwich_set(LatticeBiorder const& E, NVPair e, NVPair f);
  //! S(e, f) from relative complements: n a complement of v1 v n2 in
  //! [n2, 1], v a complement of v1 ^ n2 in [0, v1].
  std::vector<NVPair> sandwich_via_complements(FiniteLattice const& L,
                                               NVPair               e,
                                               NVPair               f);

}  // namespace biorder

#endif  // BIORDER_BIORDER_HPP_
