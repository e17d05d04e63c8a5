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

// Finite rings with identity, either from explicit addition and
// multiplication tables or as full matrix rings M_k(F_q) whose arithmetic is
// computed on the fly.

#ifndef BIORDER_RING_HPP_
#define BIORDER_RING_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biorder/exec.hpp"

namespace biorder {

  using RElem = std::uint32_t;

  struct RingTables {
    std::size_t                     n = 0;
    std::vector<std::vector<RElem>> add;
    std::vector<std::vector<RElem>> mul;
    RElem                           zero = 0;
    RElem                           one  = 0;
  };

  struct MatrixShape {
    unsigned q = 0;
    unsigned k = 0;
  };

  inline constexpr std::size_t default_ring_cap = std::size_t{1} << 16;

  class FiniteRing {
   public:
    //! Validates every ring axiom exhaustively; throws NotARing.
    static FiniteRing from_tables(RingTables t);
    //! M_k(F_q) with entries in row-major digit order, the (0, 0) entry most
    //! significant. Throws TooLarge past `cap` elements.
    static FiniteRing matrix_ring(unsigned q, unsigned k,
                                  std::size_t cap = default_ring_cap);

    [[nodiscard]] std::size_t size() const noexcept {
      return _n;
    }
    [[nodiscard]] RElem zero() const noexcept {
      return _zero;
    }
    [[nodiscard]] RElem one() const noexcept {
      return _one;
    }
    [[nodiscard]] RElem add(RElem a, RElem b) const;
    [[nodiscard]] RElem mul(RElem a, RElem b) const;
    [[nodiscard]] RElem neg(RElem a) const;
    [[nodiscard]] RElem sub(RElem a, RElem b) const {
      return add(a, neg(b));
    }

    [[nodiscard]] std::optional<MatrixShape> matrix_shape() const noexcept {
      return _matrix;
    }
    //! Tables as given, or nullopt for matrix rings.
    [[nodiscard]] RingTables const* tables() const noexcept {
      return _matrix ? nullptr : &_tables;
    }
    [[nodiscard]] std::string label(RElem a) const;

    //! Entry-wise encoding for matrix rings; `rows` is k x k.
    [[nodiscard]] RElem encode(std::vector<std::vector<unsigned>> const& rows) const;
    [[nodiscard]] std::vector<std::vector<unsigned>> decode(RElem a) const;
    //! The matrix unit E_ij (0-based).
    [[nodiscard]] RElem matrix_unit(unsigned i, unsigned j) const;

   private:
    std::size_t                _n    = 0;
    RElem                      _zero = 0;
    RElem                      _one  = 0;
    RingTables                 _tables;
    std::vector<RElem>         _neg;
    std::optional<MatrixShape> _matrix;
  };

  //! First element a with no x such that axa = a. Table rings are scanned
  //! exhaustively; matrix rings get an explicit generalized inverse built by
  //! Gaussian elimination and checked.
  std::optional<RElem> find_irregular(FiniteRing const& R,
                                      Exec              exec = Exec::parallel);
  inline bool is_regular_ring(FiniteRing const& R, Exec exec = Exec::parallel) {
    return !find_irregular(R, exec).has_value();
  }

  //! An x with axa = a for a matrix ring element, from rank normal form.
  RElem generalized_inverse(FiniteRing const& R, RElem a);

  std::vector<RElem> ring_idempotents(FiniteRing const& R,
                                      Exec              exec = Exec::parallel);

}  // namespace biorder

#endif  // BIORDER_RING_HPP_
