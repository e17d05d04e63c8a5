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

#ifndef BIORDER_ISOMORPHISM_HPP_
#define BIORDER_ISOMORPHISM_HPP_

#include <optional>
#include <vector>

#include "biorder/lattice.hpp"

namespace biorder {

  //! A lattice isomorphism A -> B as the image of each element of A, found
  //! by backtracking over elements with matching height and up/down-set
  //! sizes; every assignment propagates through meets and joins with the
  //! elements already placed.
  std::optional<std::vector<Elem>> find_lattice_isomorphism(FiniteLattice const& A,
                                                            FiniteLattice const& B);

  bool is_lattice_isomorphism(FiniteLattice const&     A,
                              FiniteLattice const&     B,
                              std::vector<Elem> const& map);

}  // namespace biorder

#endif  // BIORDER_ISOMORPHISM_HPP_
