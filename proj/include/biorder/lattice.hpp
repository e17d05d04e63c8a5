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

// Finite bounded lattices on indexed elements, with precomputed order,
// meet and join tables, and the order-theoretic predicates used throughout
// (modularity, complements, relative complements, independence,
// perspectivity).

#ifndef BIORDER_LATTICE_HPP_
#define BIORDER_LATTICE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace biorder {

  using Elem = std::uint32_t;

  class FiniteLattice {
   public:
    FiniteLattice() = default;

    [[nodiscard]] std::size_t size() const noexcept {
      return _n;
    }
    [[nodiscard]] Elem bottom() const noexcept {
      return _bottom;
    }
    [[nodiscard]] Elem top() const noexcept {
      return _top;
    }
    [[nodiscard]] bool leq(Elem a, Elem b) const noexcept {
      return _leq[a * _n + b] != 0;
    }
    [[nodiscard]] bool lt(Elem a, Elem b) const noexcept {
      return a != b && leq(a, b);
    }
    [[nodiscard]] Elem meet(Elem a, Elem b) const noexcept {
      return _meet[a * _n + b];
    }
    [[nodiscard]] Elem join(Elem a, Elem b) const noexcept {
      return _join[a * _n + b];
    }

    [[nodiscard]] std::string const& label(Elem a) const {
      return _labels[a];
    }
    [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    //! Looks up an element by label, falling back to a decimal index.
    //! Returns nullopt when neither matches; throws UnknownElement when a
    //! label is ambiguous.
    [[nodiscard]] std::optional<Elem> find(std::string_view name) const;

    //! Length of the longest chain from bottom to `a`.
    [[nodiscard]] std::size_t height(Elem a) const {
      return _height[a];
    }
    //! Hasse diagram, sorted.
    [[nodiscard]] std::vector<std::pair<Elem, Elem>> covers() const;

    [[nodiscard]] Elem join_all(std::span<Elem const> xs) const;
    [[nodiscard]] Elem meet_all(std::span<Elem const> xs) const;

    friend bool operator==(FiniteLattice const&, FiniteLattice const&)
        = default;

   private:
    friend FiniteLattice lattice_from_order(std::size_t,
                                            std::vector<std::uint8_t>,
                                            std::vector<std::string>);

    std::size_t               _n = 0;
    std::vector<std::string>  _labels;
    std::vector<std::uint8_t> _leq;
    std::vector<Elem>         _meet;
    std::vector<Elem>         _join;
    std::vector<std::size_t>  _height;
    Elem                      _bottom = 0;
    Elem                      _top    = 0;
  };

  struct Interval {
    Elem lo;
    Elem hi;
  };

  //! Builds a lattice from its cover relation. Labels default to the
  //! decimal indices. Throws NotAPoset, NotALattice or Unbounded.
  FiniteLattice build_lattice(std::size_t                          n,
                              std::span<std::pair<Elem, Elem> const> covers,
                              std::vector<std::string> labels = {});

  //! Builds a lattice from a full order matrix (row-major, n*n, reflexive
  //! closure is taken). Used for lattices given by inclusion.
  FiniteLattice lattice_from_order(std::size_t               n,
                                   std::vector<std::uint8_t> leq,
                                   std::vector<std::string>  labels = {});

  using Triple = std::array<Elem, 3>;

  //! First triple (a, b, c) with a <= c and (a v b) ^ c != a v (b ^ c), in
  //! index order.
  std::optional<Triple> find_modularity_violation(FiniteLattice const& L);
  //! First element without a complement.
  std::optional<Elem> find_uncomplemented(FiniteLattice const& L);

  inline bool is_modular(FiniteLattice const& L) {
    return !find_modularity_violation(L).has_value();
  }
  inline bool is_complemented(FiniteLattice const& L) {
    return !find_uncomplemented(L).has_value();
  }
  inline bool is_complemented_modular(FiniteLattice const& L) {
    return is_modular(L) && is_complemented(L);
  }

  std::vector<Elem> complements(FiniteLattice const& L, Elem a);

  //! {z in [lo, hi] : a v z = hi, a ^ z = lo}. Throws OutOfInterval.
  std::vector<Elem> relative_complements(FiniteLattice const& L,
                                         Elem                 a,
                                         Interval             I);

  bool is_independent(FiniteLattice const& L, std::span<Elem const> xs);

  //! First index i with (join of the others) ^ xs[i] != bottom.
  std::optional<std::size_t> find_dependent(FiniteLattice const& L,
                                            std::span<Elem const> xs);

  std::vector<Elem> perspectivity_axes(FiniteLattice const& L, Elem a, Elem b);

  inline bool are_perspective(FiniteLattice const& L, Elem a, Elem b) {
    return !perspectivity_axes(L, a, b).empty();
  }

}  // namespace biorder

#endif  // BIORDER_LATTICE_HPP_
