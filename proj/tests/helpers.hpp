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

#ifndef BIORDER_TESTS_HELPERS_HPP_
#define BIORDER_TESTS_HELPERS_HPP_

#include <set>
#include <string>
#include <vector>

#include "biorder/catalog.hpp"
#include "biorder/error.hpp"
#include "biorder/lattice.hpp"

namespace testing {

  using namespace biorder;

  inline Elem at(FiniteLattice const& L, std::string const& name) {
    auto x = L.find(name);
    if (!x) {
      throw Error(ErrorKind::UnknownElement, name);
    }
    return *x;
  }

  inline std::set<Elem> elems(FiniteLattice const&            L,
                              std::vector<std::string> const& names) {
    std::set<Elem> out;
    for (auto const& n : names) {
      out.insert(at(L, n));
    }
    return out;
  }

  inline std::set<Elem> as_set(std::vector<Elem> const& xs) {
    return {xs.begin(), xs.end()};
  }

  // Lattices small enough for exhaustive checks of every kind.
  inline std::vector<std::string> const& small_catalog() {
    static std::vector<std::string> const names{
        "point", "chain2", "B2", "B3", "M3", "M4", "F3^2", "F2^3"};
    return names;
  }

  inline ErrorKind kind_of(auto&& fn) {
    try {
      fn();
    } catch (Error const& e) {
      return e.kind();
    }
    return static_cast<ErrorKind>(-1);
  }

}  // namespace testing

#endif  // BIORDER_TESTS_HELPERS_HPP_
