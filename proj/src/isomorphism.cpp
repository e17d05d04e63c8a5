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

#include "biorder/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace biorder {

  namespace {

    using Signature = std::tuple<std::size_t, std::size_t, std::size_t>;

    std::vector<Signature> signatures(FiniteLattice const& L) {
      std::vector<Signature> out(L.size());
      for (Elem a = 0; a < L.size(); ++a) {
        std::size_t down = 0, up = 0;
        for (Elem b = 0; b < L.size(); ++b) {
          down += L.leq(b, a);
          up += L.leq(a, b);
        }
        out[a] = {L.height(a), down, up};
      }
      return out;
    }

    constexpr Elem none = static_cast<Elem>(-1);

    class Search {
     public:
      Search(FiniteLattice const& A, FiniteLattice const& B)
          : _A(A), _B(B), _sa(signatures(A)), _sb(signatures(B)),
            _fwd(A.size(), none), _bwd(B.size(), none) {
        _order.resize(A.size());
        std::iota(_order.begin(), _order.end(), Elem{0});
        std::stable_sort(_order.begin(), _order.end(), [&](Elem x, Elem y) {
          return A.height(x) < A.height(y);
        });
      }

      std::optional<std::vector<Elem>> run() {
        if (_A.size() != _B.size()) {
          return std::nullopt;
        }
        auto a = _sa, b = _sb;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
          return std::nullopt;
        }
        if (!assign(_A.bottom(), _B.bottom()) || !assign(_A.top(), _B.top())) {
          return std::nullopt;
        }
        if (!descend()) {
          return std::nullopt;
        }
        return _fwd;
      }

     private:
      bool descend() {
        auto it = std::find_if(_order.begin(), _order.end(), [&](Elem x) {
          return _fwd[x] == none;
        });
        if (it == _order.end()) {
          return true;
        }
        Elem const x = *it;
        for (Elem y = 0; y < _B.size(); ++y) {
          if (_bwd[y] != none || _sa[x] != _sb[y]) {
            continue;
          }
          std::size_t const mark = _trail.size();
          if (assign(x, y) && descend()) {
            return true;
          }
          undo(mark);
        }
        return false;
      }

      // Places x -> y and everything forced by meets and joins with the
      // already placed elements; false on a contradiction (the trail keeps
      // what must be undone).
      bool assign(Elem x, Elem y) {
        std::vector<std::pair<Elem, Elem>> queue{{x, y}};
        while (!queue.empty()) {
          auto [a, b] = queue.back();
          queue.pop_back();
          if (_fwd[a] != none || _bwd[b] != none) {
            if (_fwd[a] != b || _bwd[b] != a) {
              return false;
            }
            continue;
          }
          if (_sa[a] != _sb[b]) {
            return false;
          }
          _fwd[a] = b;
          _bwd[b] = a;
          _trail.push_back(a);
          for (Elem c : _trail) {
            Elem const d = _fwd[c];
            if (_A.leq(a, c) != _B.leq(b, d) || _A.leq(c, a) != _B.leq(d, b)) {
              return false;
            }
            queue.emplace_back(_A.join(a, c), _B.join(b, d));
            queue.emplace_back(_A.meet(a, c), _B.meet(b, d));
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          Elem a = _trail.back();
          _trail.pop_back();
          _bwd[_fwd[a]] = none;
          _fwd[a]       = none;
        }
      }

      FiniteLattice const&   _A;
      FiniteLattice const&   _B;
      std::vector<Signature> _sa, _sb;
      std::vector<Elem>      _fwd, _bwd, _order, _trail;
    };

  }  // namespace

  std::optional<std::vector<Elem>> find_lattice_isomorphism(FiniteLattice const& A,
                                                            FiniteLattice const& B) {
    return Search(A, B).run();
  }

  bool is_lattice_isomorphism(FiniteLattice const&     A,
                              FiniteLattice const&     B,
                              std::vector<Elem> const& map) {
    if (A.size() != B.size() || map.size() != A.size()) {
      return false;
    }
    std::vector<bool> hit(B.size(), false);
    for (Elem y : map) {
      if (y >= B.size() || hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    for (Elem a = 0; a < A.size(); ++a) {
      for (Elem b = 0; b < A.size(); ++b) {
        if (A.leq(a, b) != B.leq(map[a], map[b])) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace biorder
