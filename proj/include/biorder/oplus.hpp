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

// The sum (n_i; v_i) (+) (n_j; v_j) = (n_i ^ n_j; v_i v v_j) on compatible
// pairs, its algebraic laws, the search for distinguished families of
// E_{P(L)} and the homogeneous bases they carry.

#ifndef BIORDER_OPLUS_HPP_
#define BIORDER_OPLUS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "biorder/biorder.hpp"

namespace biorder {

  //! v_i <= n_j and v_j <= n_i.
  bool compatible(FiniteLattice const& L, NVPair a, NVPair b);

  //! Throws IncompatiblePair.
  NVPair oplus(FiniteLattice const& L, NVPair a, NVPair b);

  struct CheckResult {
    bool        passed = true;
    std::string witness;
  };

  //! Both summands lie under the sum in w, and the sum is the least
  //! w^l (resp. w^r) upper bound among elements of E above both.
  CheckResult verify_oplus_bounds(LatticeBiorder const& E, NVPair a, NVPair b);

  //! a (+) b = a (+) c iff b = c. Throws IncompatiblePair unless a is
  //! compatible with both b and c.
  bool verify_cancellation(FiniteLattice const& L, NVPair a, NVPair b, NVPair c);

  //! e (+) (v; n) = (0; 1), and (v; n) is the only compatible partner of e
  //! summing to (0; 1).
  bool oplus_inverse_check(LatticeBiorder const& E, NVPair e);

  using Family = std::vector<NVPair>;

  bool is_compatible_family(FiniteLattice const& L, Family const& fam);

  //! Independence of the v-components, with the offending index on failure.
  std::optional<std::size_t> family_dependence(FiniteLattice const& L,
                                               Family const&        fam);
  inline bool family_independence(FiniteLattice const& L, Family const& fam) {
    return !family_dependence(L, fam).has_value();
  }

  struct FoldResult {
    NVPair value;
    //! Every ordering of the family folds to `value`.
    bool        order_independent = true;
    std::size_t orders_checked    = 0;
  };

  //! Left fold of (+). Orders are checked exhaustively up to six members and
  //! by rotations and reversal beyond. Throws IncompatiblePair naming the
  //! failing step.
  FoldResult oplus_fold(FiniteLattice const& L, Family const& fam);

  enum class DistanceMode {
    exact3,  // d(e_i, e_j) = 3
    at_most3 // d(e_i, e_j) <= 3
  };

  struct SearchOptions {
    DistanceMode mode  = DistanceMode::exact3;
    std::size_t  limit = 0;  // 0 = all families
    Exec         exec  = Exec::parallel;
  };

  //! All N-element families (as sorted sets) with v_i <= n_j for i != j,
  //! fold (0; 1), and the pairwise distance condition. Canonically sorted.
  std::vector<Family> find_E0_subsets(LatticeBiorder const& E,
                                      std::size_t           N,
                                      SearchOptions         opts = {});

  struct PerspectivityAxis {
    std::size_t i;
    std::size_t j;
    Elem        axis;
  };

  struct HomogeneousBasis {
    std::vector<Elem>              elements;
    std::vector<PerspectivityAxis> axes;

    [[nodiscard]] std::size_t order() const noexcept {
      return elements.size();
    }
  };

  //! Certifies independence, join = top and pairwise perspectivity of the
  //! given elements. Throws NotABasis naming the failed condition.
  HomogeneousBasis certify_homogeneous_basis(FiniteLattice const&     L,
                                             std::vector<Elem> const& xs);
  //! The basis {v_i} of a family.
  HomogeneousBasis extract_homogeneous_basis(FiniteLattice const& L,
                                             Family const&        fam);

  struct CoordinatizationReport {
    std::size_t                     N = 0;
    DistanceMode                    mode = DistanceMode::exact3;
    std::size_t                     family_count = 0;
    std::optional<Family>           family;
    std::optional<HomogeneousBasis> basis;
    std::string                     basis_failure;
    //! Nonempty search and N >= 4, as the coordinatization hypothesis asks.
    bool hypothesis_holds = false;
  };

  CoordinatizationReport coordinatization_conditions(LatticeBiorder const& E,
                                                     std::size_t           N,
                                                     SearchOptions opts = {});

}  // namespace biorder

#endif  // BIORDER_OPLUS_HPP_
