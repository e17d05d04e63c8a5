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

// JSON formats for lattices and rings.
//
//   lattice: { "n": int, "labels": [string], "covers": [[int, int]] }
//   ring:    { "n": int, "add": [[int]], "mul": [[int]], "zero": int, "one": int }
//            or { "matrix_ring": { "q": int, "k": int } }

#ifndef BIORDER_IO_HPP_
#define BIORDER_IO_HPP_

#include <optional>
#include <string>

#include "json.hpp"

#include "biorder/lattice.hpp"
#include "biorder/ring.hpp"

namespace biorder {

  using ordered_json = nlohmann::ordered_json;

  FiniteLattice lattice_from_json(nlohmann::json const& j);
  ordered_json  lattice_to_json(FiniteLattice const& L);

  FiniteRing   ring_from_json(nlohmann::json const& j,
                              std::size_t cap = default_ring_cap);
  ordered_json ring_to_json(FiniteRing const& R);

  //! FNV-1a 64-bit digest, hex encoded.
  std::string digest(std::string_view bytes);

  struct Input {
    std::string                  source;
    std::string                  digest;
    std::optional<FiniteLattice> lattice;
    std::optional<FiniteRing>    ring;
  };

  //! Reads a lattice or ring from a JSON file, `catalog:<name>` (a catalog
  //! lattice) or `matrix:<q>:<k>` (the matrix ring M_k(F_q)). Throws
  //! ParseError on malformed input.
  Input load_input(std::string const& source, std::size_t cap = default_ring_cap);

}  // namespace biorder

#endif  // BIORDER_IO_HPP_
