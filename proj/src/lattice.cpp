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

#include "biorder/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "biorder/error.hpp"

namespace biorder {

  namespace {
    std::string pair_str(FiniteLattice const& L, Elem a, Elem b) {
      return "(" + L.label(a) + ", " + L.label(b) + ")";
    }

    std::vector<std::string> default_labels(std::size_t n) {
      std::vector<std::string> out(n);
      for (std::size_t i = 0; i < n; ++i) {
        out[i] = std::to_string(i);
      }
      return out;
    }
  }  // namespace

  std::optional<Elem> FiniteLattice::find(std::string_view name) const {
    std::optional<Elem> hit;
    for (Elem i = 0; i < _n; ++i) {
      if (_labels[i] == name) {
        if (hit) {
          throw Error(ErrorKind::UnknownElement,
                      "label '" + std::string(name) + "' is ambiguous");
        }
        hit = i;
      }
    }
    if (hit) {
      return hit;
    }
    std::size_t idx = 0;
    auto [p, ec]    = std::from_chars(name.data(), name.data() + name.size(), idx);
    if (ec == std::errc() && p == name.data() + name.size() && idx < _n) {
      return static_cast<Elem>(idx);
    }
    return std::nullopt;
  }

  std::vector<std::pair<Elem, Elem>> FiniteLattice::covers() const {
    std::vector<std::pair<Elem, Elem>> out;
    for (Elem a = 0; a < _n; ++a) {
      for (Elem b = 0; b < _n; ++b) {
        if (!lt(a, b)) {
          continue;
        }
        bool cover = true;
        for (Elem c = 0; c < _n && cover; ++c) {
          cover = !(lt(a, c) && lt(c, b));
        }
        if (cover) {
          out.emplace_back(a, b);
        }
      }
    }
    return out;
  }

  Elem FiniteLattice::join_all(std::span<Elem const> xs) const {
    Elem acc = _bottom;
    for (Elem x : xs) {
      acc = join(acc, x);
    }
    return acc;
  }

  Elem FiniteLattice::meet_all(std::span<Elem const> xs) const {
    Elem acc = _top;
    for (Elem x : xs) {
      acc = meet(acc, x);
    }
    return acc;
  }

  FiniteLattice build_lattice(std::size_t                          n,
                              std::span<std::pair<Elem, Elem> const> covers,
                              std::vector<std::string>             labels) {
    std::vector<std::uint8_t> leq(n * n, 0);
    for (auto [lo, hi] : covers) {
      if (lo >= n || hi >= n) {
        throw Error(ErrorKind::NotAPoset,
                    "cover (" + std::to_string(lo) + ", " + std::to_string(hi)
                        + ") out of range for n = " + std::to_string(n));
      }
      if (lo == hi) {
        throw Error(ErrorKind::NotAPoset,
                    "cover (" + std::to_string(lo) + ", " + std::to_string(hi)
                        + ") is a loop");
      }
      leq[lo * n + hi] = 1;
    }
    return lattice_from_order(n, std::move(leq), std::move(labels));
  }

  FiniteLattice lattice_from_order(std::size_t               n,
                                   std::vector<std::uint8_t> leq,
                                   std::vector<std::string>  labels) {
    if (n == 0) {
      throw Error(ErrorKind::Unbounded, "empty lattice");
    }
    if (leq.size() != n * n) {
      throw Error(ErrorKind::NotAPoset, "order matrix has the wrong size");
    }
    if (labels.empty()) {
      labels = default_labels(n);
    } else if (labels.size() != n) {
      throw Error(ErrorKind::NotAPoset, "label count differs from n");
    }
    for (std::size_t i = 0; i < n; ++i) {
      leq[i * n + i] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!leq[i * n + k]) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          leq[i * n + j] |= leq[k * n + j];
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (leq[i * n + j] && leq[j * n + i]) {
          throw Error(ErrorKind::NotAPoset,
                      "cycle through " + labels[i] + " and " + labels[j]);
        }
      }
    }

    FiniteLattice L;
    L._n      = n;
    L._labels = std::move(labels);
    L._leq    = std::move(leq);
    L._meet.assign(n * n, 0);
    L._join.assign(n * n, 0);

    std::vector<std::size_t> down(n, 0), up(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        down[i] += L._leq[j * n + i];
        up[i] += L._leq[i * n + j];
      }
    }

    // The greatest common lower bound, if any, has the largest down-set.
    auto bound = [&](Elem a, Elem b, bool lower) -> std::optional<Elem> {
      std::optional<Elem> best;
      auto                is_bound = [&](Elem c) {
        return lower ? (L.leq(c, a) && L.leq(c, b))
                                    : (L.leq(a, c) && L.leq(b, c));
      };
      auto const& size = lower ? down : up;
      for (Elem c = 0; c < n; ++c) {
        if (is_bound(c) && (!best || size[c] > size[*best])) {
          best = c;
        }
      }
      if (!best) {
        return std::nullopt;
      }
      for (Elem c = 0; c < n; ++c) {
        if (is_bound(c) && !(lower ? L.leq(c, *best) : L.leq(*best, c))) {
          return std::nullopt;
        }
      }
      return best;
    };

    for (Elem a = 0; a < n; ++a) {
      for (Elem b = a; b < n; ++b) {
        auto m = bound(a, b, true);
        if (!m) {
          throw Error(ErrorKind::NotALattice,
                      "no meet for " + pair_str(L, a, b));
        }
        auto j = bound(a, b, false);
        if (!j) {
          throw Error(ErrorKind::NotALattice,
                      "no join for " + pair_str(L, a, b));
        }
        L._meet[a * n + b] = L._meet[b * n + a] = *m;
        L._join[a * n + b] = L._join[b * n + a] = *j;
      }
    }

    auto lo = std::find(down.begin(), down.end(), std::size_t{1});
    auto hi = std::find(up.begin(), up.end(), std::size_t{1});
    if (lo == down.end() || hi == up.end() || up[lo - down.begin()] != n
        || down[hi - up.begin()] != n) {
      throw Error(ErrorKind::Unbounded, "no least or greatest element");
    }
    L._bottom = static_cast<Elem>(lo - down.begin());
    L._top    = static_cast<Elem>(hi - up.begin());

    std::vector<Elem> order(n);
    std::iota(order.begin(), order.end(), Elem{0});
    std::stable_sort(order.begin(), order.end(), [&](Elem x, Elem y) {
      return down[x] < down[y];
    });
    L._height.assign(n, 0);
    for (Elem x : order) {
      for (Elem y = 0; y < n; ++y) {
        if (L.lt(y, x)) {
          L._height[x] = std::max(L._height[x], L._height[y] + 1);
        }
      }
    }
    return L;
  }

  std::optional<Triple> find_modularity_violation(FiniteLattice const& L) {
    auto const n = static_cast<Elem>(L.size());
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          if (L.leq(a, c)
              && L.meet(L.join(a, b), c) != L.join(a, L.meet(b, c))) {
            return Triple{a, b, c};
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Elem> find_uncomplemented(FiniteLattice const& L) {
    for (Elem a = 0; a < L.size(); ++a) {
      if (complements(L, a).empty()) {
        return a;
      }
    }
    return std::nullopt;
  }

  std::vector<Elem> complements(FiniteLattice const& L, Elem a) {
    return relative_complements(L, a, {L.bottom(), L.top()});
  }

  std::vector<Elem> relative_complements(FiniteLattice const& L,
                                         Elem                 a,
                                         Interval             I) {
    if (!L.leq(I.lo, a) || !L.leq(a, I.hi)) {
      throw Error(ErrorKind::OutOfInterval,
                  L.label(a) + " not in [" + L.label(I.lo) + ", "
                      + L.label(I.hi) + "]");
    }
    std::vector<Elem> out;
    for (Elem z = 0; z < L.size(); ++z) {
      if (L.leq(I.lo, z) && L.leq(z, I.hi) && L.join(a, z) == I.hi
          && L.meet(a, z) == I.lo) {
        out.push_back(z);
      }
    }
    return out;
  }

  std::optional<std::size_t> find_dependent(FiniteLattice const& L,
                                            std::span<Elem const> xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      Elem rest = L.bottom();
      for (std::size_t j = 0; j < xs.size(); ++j) {
        if (j != i) {
          rest = L.join(rest, xs[j]);
        }
      }
      if (L.meet(rest, xs[i]) != L.bottom()) {
        return i;
      }
    }
    return std::nullopt;
  }

  bool is_independent(FiniteLattice const& L, std::span<Elem const> xs) {
    return !find_dependent(L, xs).has_value();
  }

  std::vector<Elem> perspectivity_axes(FiniteLattice const& L, Elem a, Elem b) {
    std::vector<Elem> out;
    for (Elem x = 0; x < L.size(); ++x) {
      if (L.join(a, x) == L.join(b, x) && L.meet(a, x) == L.bottom()
          && L.meet(b, x) == L.bottom()) {
        out.push_back(x);
      }
    }
    return out;
  }

}  // namespace biorder
