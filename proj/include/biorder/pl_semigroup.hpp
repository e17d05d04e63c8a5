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

// The normal mappings x -> v ^ (n v x) of a complemented modular lattice and
// the semigroup P(L) they generate, acting on the right: x(fg) = (xf)g.

#ifndef BIORDER_PL_SEMIGROUP_HPP_
#define BIORDER_PL_SEMIGROUP_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "biorder/exec.hpp"
#include "biorder/lattice.hpp"

namespace biorder {

  //! A complementary pair (n; v): n v v = 1 and n ^ v = 0.
  struct NVPair {
    Elem n;
    Elem v;

    friend auto operator<=>(NVPair const&, NVPair const&) = default;
  };

  //! The pair (v; n).
  constexpr NVPair inverse(NVPair p) noexcept {
    return {p.v, p.n};
  }

  bool        is_complementary(FiniteLattice const& L, NVPair p);
  std::string to_string(FiniteLattice const& L, NVPair p);

  //! All complementary ordered pairs, sorted by (n, v).
  std::vector<NVPair> idempotent_pairs(FiniteLattice const& L);

  class LatticeMap {
   public:
    using value_type = std::uint16_t;

    LatticeMap() = default;
    explicit LatticeMap(std::vector<value_type> table)
        : _table(std::move(table)) {}

    static LatticeMap identity(std::size_t n);
    static LatticeMap constant(std::size_t n, Elem c);

    [[nodiscard]] Elem operator()(Elem x) const noexcept {
      return _table[x];
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _table.size();
    }
    [[nodiscard]] std::span<value_type const> table() const noexcept {
      return _table;
    }

    friend auto operator<=>(LatticeMap const&, LatticeMap const&) = default;
    friend bool operator==(LatticeMap const&, LatticeMap const&)  = default;

   private:
    std::vector<value_type> _table;
  };

  struct LatticeMapHash {
    std::size_t operator()(LatticeMap const& f) const noexcept;
  };

  //! x -> v ^ (n v x). Throws NotComplementary.
  LatticeMap make_nv(FiniteLattice const& L, NVPair p);
  //! x -> n v (v ^ x), the dual generator.
  LatticeMap make_nv_dual(FiniteLattice const& L, NVPair p);

  //! Right-operator product: x(fg) = (xf)g, i.e. apply f, then g.
  LatticeMap compose(LatticeMap const& f, LatticeMap const& g);

  bool is_isotone(FiniteLattice const& L, LatticeMap const& f);
  //! Describes the first failed normality condition, if any.
  std::optional<std::string> normal_mapping_violation(FiniteLattice const& L,
                                                      LatticeMap const&    f);
  inline bool is_normal_mapping(FiniteLattice const& L, LatticeMap const& f) {
    return !normal_mapping_violation(L, f).has_value();
  }

  struct ClosureOptions {
    std::size_t cap  = 1'000'000;
    Exec        exec = Exec::parallel;
  };

  //! The semigroup generated by the maps make_nv(L, p), p complementary.
  //! Elements are sorted by their tables. Products are computed on demand;
  //! a full Cayley table is not stored.
  class SemigroupPL {
   public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    [[nodiscard]] std::size_t size() const noexcept {
      return _elements.size();
    }
    [[nodiscard]] LatticeMap const& at(std::size_t i) const {
      return _elements[i];
    }
    [[nodiscard]] std::vector<LatticeMap> const& elements() const noexcept {
      return _elements;
    }
    [[nodiscard]] std::optional<std::size_t> index_of(LatticeMap const& f) const;
    [[nodiscard]] std::size_t product(std::size_t i, std::size_t j) const;

    //! Generators, one per complementary pair, aligned with `generator_pairs`.
    [[nodiscard]] std::vector<NVPair> const& generator_pairs() const noexcept {
      return _pairs;
    }
    [[nodiscard]] std::vector<std::size_t> const& generators() const noexcept {
      return _generators;
    }
    [[nodiscard]] bool is_idempotent(std::size_t i) const {
      return _idempotent[i] != 0;
    }
    [[nodiscard]] std::vector<std::size_t> idempotents() const;

    //! For every element f, an element g with fgf = f, or npos when none
    //! exists (P(L) is then not regular).
    [[nodiscard]] std::vector<std::size_t> const& regularity_certificate()
        const noexcept {
      return _inverse;
    }
    [[nodiscard]] bool is_regular() const;
    //! How many certificates needed the exhaustive fallback search.
    [[nodiscard]] std::size_t fallback_searches() const noexcept {
      return _fallbacks;
    }

   private:
    friend SemigroupPL generate_PL(FiniteLattice const&, ClosureOptions);

    std::vector<LatticeMap>                                 _elements;
    std::unordered_map<LatticeMap, std::size_t, LatticeMapHash> _index;
    std::vector<NVPair>                                     _pairs;
    std::vector<std::size_t>                                _generators;
    std::vector<std::uint8_t>                               _idempotent;
    std::vector<std::size_t>                                _inverse;
    std::size_t                                             _fallbacks = 0;
  };

  //! Throws NotComplementedModular when L is not complemented modular and
  //! CapExceeded when the closure grows past `opts.cap`.
  SemigroupPL generate_PL(FiniteLattice const& L, ClosureOptions opts = {});

}  // namespace biorder

#endif  // BIORDER_PL_SEMIGROUP_HPP_
