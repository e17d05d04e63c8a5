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

// Named lattices used by the tests, the acceptance suite and the CLI's
// `catalog:` inputs.

#ifndef BIORDER_CATALOG_HPP_
#define BIORDER_CATALOG_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "biorder/lattice.hpp"

namespace biorder {

  //! 0 < c1 < ... < 1 with n elements (n = 1 gives the one-point lattice).
  FiniteLattice chain(std::size_t n);
  //! Subsets of {a, b, c, ...}; bottom is labelled "0" and top "1".
  FiniteLattice boolean_lattice(unsigned atoms);
  //! M_k: bottom "0", atoms "a1".."ak", top "1".
  FiniteLattice diamond(unsigned atoms);
  //! N5 with 0 < x < z < 1 and 0 < y < 1, indexed 0, x, y, z, 1.
  FiniteLattice pentagon();
  //! Subspaces of F_q^k for prime q, ordered by dimension. Labels are the
  //! reduced row echelon rows, e.g. "<100,011>"; the zero space is "0".
  FiniteLattice subspace_lattice(unsigned q, unsigned k);

  //! Accepts point, chainN, Bk, Mk, N5 and Fq^k (for example F2^3).
  FiniteLattice catalog_lattice(std::string_view name);

  //! Label of the subspace spanned by `rows` (digit strings) in
  //! subspace_lattice(q, k).
  std::string subspace_label(unsigned q, std::vector<std::string> const& rows);

}  // namespace biorder

#endif  // BIORDER_CATALOG_HPP_
