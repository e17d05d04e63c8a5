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

// The biordered set E_R of a finite regular ring, the lattice of principal
// biorder ideals w^l(e), the map e -> (w^l(1 - e); w^l(e)) into E_{P(Omega_L)},
// and the orthogonal-idempotent basis check.

#ifndef BIORDER_RING_COORD_HPP_
#define BIORDER_RING_COORD_HPP_

#include <optional>
#include <string>
#include <vector>

#include "biorder/biorder.hpp"
#include "biorder/oplus.hpp"
#include "biorder/ring.hpp"

namespace biorder {

  //! E_R with e w^l f iff ef = e, e w^r f iff fe = e, and ring products on
  //! D_E.
  struct RingBiorder {
    FiniteRing         ring;
    std::vector<RElem> idempotents;
    BiorderedSet       set;

    [[nodiscard]] std::optional<Idx> find(RElem e) const;
    //! Throws NotIdempotent.
    [[nodiscard]] Idx index(RElem e) const;
  };

  RingBiorder build_ring_biorder(FiniteRing const& R, Exec exec = Exec::parallel);

  struct OmegaIdeal {
    RElem            base;
    std::vector<Idx> members;  // positions in RingBiorder::idempotents
  };

  //! {f : fe = f}. Throws NotIdempotent.
  OmegaIdeal omega_l_ideal(RingBiorder const& E, RElem e);
  //! {f : ef = f}. Throws NotIdempotent.
  OmegaIdeal omega_r_ideal(RingBiorder const& E, RElem e);

  struct OmegaLattice {
    FiniteLattice                 lattice;
    std::vector<std::vector<Idx>> ideals;          // member set per element
    std::vector<Elem>             of_idempotent;   // E_R position -> element
    bool                          modular       = false;
    bool                          complemented  = false;
  };

  //! Distinct w^l ideals ordered by inclusion. Throws NotALattice if the
  //! inclusion order is not a lattice.
  OmegaLattice build_omega_lattice(RingBiorder const& E);

  //! (w^l(1 - e); w^l(e)). Throws NotIdempotent, or NotComplementary if the
  //! pair fails to be complementary in Omega_L.
  NVPair epsilon(RingBiorder const& E, OmegaLattice const& W, RElem e);

  struct EpsilonReport {
    std::size_t ring_idempotents   = 0;
    std::size_t lattice_pairs      = 0;
    bool        complementary      = true;
    bool        injective          = true;
    bool        surjective         = true;
    bool        preserves_omega_l  = true;
    bool        preserves_omega_r  = true;
    bool        preserves_products = true;
    bool        preserves_distance = true;
    std::string witness;

    [[nodiscard]] bool ok() const noexcept {
      return complementary && injective && surjective && preserves_omega_l
             && preserves_omega_r && preserves_products && preserves_distance;
    }
  };

  EpsilonReport verify_epsilon_iso(RingBiorder const&    E,
                                   OmegaLattice const&   W,
                                   LatticeBiorder const& target,
                                   Exec                  exec = Exec::parallel);

  struct OrthogonalBasisReport {
    std::vector<RElem> es;
    //! e_i e_j = 0 for i != j.
    bool        orthogonal = true;
    //! The M-set reading: M(e_i, e_j) = {0} for i != j.
    bool        m_sets_zero = true;
    //! d(e_i, e_j) for i < j, row by row.
    std::vector<std::uint32_t> distances;
    bool                       distances_at_most3 = true;
    bool                       sum_is_one         = true;
    //! w^l(e_1) v ... v w^l(e_N) = w^l(e_1 + ... + e_N).
    bool        join_is_ideal_of_sum = true;
    std::string failed_hypothesis;
    std::optional<HomogeneousBasis> basis;
    std::string                     basis_failure;

    [[nodiscard]] bool hypotheses_hold() const noexcept {
      return failed_hypothesis.empty();
    }
    [[nodiscard]] bool ok() const noexcept {
      return hypotheses_hold() && basis.has_value();
    }
  };

  //! Checks orthogonality, d <= 3 and e_1 + ... + e_N = 1, then certifies
  //! {w^l(e_i)} as a homogeneous basis of Omega_L.
  OrthogonalBasisReport verify_orthogonal_basis(RingBiorder const&        E,
                                        OmegaLattice const&       W,
                                        std::vector<RElem> const& es);

  AxiomReport verify_ring_biorder_axioms(RingBiorder const& E,
                                         Exec               exec = Exec::parallel);

}  // namespace biorder

#endif  // BIORDER_RING_COORD_HPP_
