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

#include "biorder/pl_semigroup.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_set>

#include "biorder/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace biorder {

  namespace {

    using MapSet = std::unordered_set<LatticeMap, LatticeMapHash>;

    void require_complementary(FiniteLattice const& L, NVPair p) {
      if (!is_complementary(L, p)) {
        throw Error(ErrorKind::NotComplementary, to_string(L, p));
      }
    }

    std::vector<LatticeMap> closure_serial(std::vector<LatticeMap> const& gens,
                                           std::size_t                    cap) {
      MapSet                 seen(gens.begin(), gens.end());
      std::deque<LatticeMap> work(seen.begin(), seen.end());
      while (!work.empty()) {
        LatticeMap f = std::move(work.front());
        work.pop_front();
        for (auto const& g : gens) {
          auto h = compose(f, g);
          if (seen.insert(h).second) {
            if (seen.size() > cap) {
              throw Error(ErrorKind::CapExceeded,
                          "P(L) exceeds " + std::to_string(cap) + " elements");
            }
            work.push_back(std::move(h));
          }
        }
      }
      return {seen.begin(), seen.end()};
    }

    // Frontier-synchronous closure: each round multiplies the newest
    // elements by every generator against a read-only snapshot of `seen`.
    std::vector<LatticeMap> closure_parallel(std::vector<LatticeMap> const& gens,
                                             std::size_t                    cap) {
      MapSet                  seen(gens.begin(), gens.end());
      std::vector<LatticeMap> frontier(seen.begin(), seen.end());
      while (!frontier.empty()) {
        std::vector<MapSet> found(static_cast<std::size_t>(thread_count()));
        auto const          m = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel
        {
#ifdef _OPENMP
          auto& local = found[static_cast<std::size_t>(omp_get_thread_num())];
#else
          auto& local = found[0];
#endif
#pragma omp for schedule(dynamic, 16)
          for (std::int64_t i = 0; i < m; ++i) {
            for (auto const& g : gens) {
              auto h = compose(frontier[static_cast<std::size_t>(i)], g);
              if (!seen.contains(h)) {
                local.insert(std::move(h));
              }
            }
          }
        }
        frontier.clear();
        for (auto& local : found) {
          for (auto const& h : local) {
            if (seen.insert(h).second) {
              frontier.push_back(h);
            }
          }
        }
        if (seen.size() > cap) {
          throw Error(ErrorKind::CapExceeded,
                      "P(L) exceeds " + std::to_string(cap) + " elements");
        }
      }
      return {seen.begin(), seen.end()};
    }

    // Builds g with fgf = f from the normality of f: f restricts to an
    // isomorphism phi of some [0, z] onto [0, f(1)] = [0, m]; then
    // g = phi^-1 o (n; m) for a complement n of m is an inverse of f. Returns
    // nullopt if no such g lies in the semigroup.
    std::optional<std::size_t>
    constructive_inverse(FiniteLattice const&                L,
                         std::vector<std::vector<Elem>> const& down,
                         SemigroupPL const&                  S,
                         LatticeMap const&                   f) {
      auto const        n = static_cast<Elem>(L.size());
      Elem const        m = f(L.top());
      auto const&       dm = down[m];
      auto const        comps = complements(L, m);
      std::vector<Elem> phi_inv(n, std::numeric_limits<Elem>::max());
      for (Elem z = 0; z < n; ++z) {
        if (f(z) != m || down[z].size() != dm.size()) {
          continue;
        }
        std::fill(phi_inv.begin(), phi_inv.end(), std::numeric_limits<Elem>::max());
        bool ok = true;
        for (Elem x : down[z]) {
          Elem const y = f(x);
          if (!L.leq(y, m) || phi_inv[y] != std::numeric_limits<Elem>::max()) {
            ok = false;
            break;
          }
          phi_inv[y] = x;
        }
        for (std::size_t i = 0; ok && i < down[z].size(); ++i) {
          for (std::size_t j = 0; ok && j < down[z].size(); ++j) {
            Elem const x = down[z][i], y = down[z][j];
            ok = L.leq(x, y) == L.leq(f(x), f(y));
          }
        }
        if (!ok) {
          continue;
        }
        for (Elem c : comps) {
          std::vector<LatticeMap::value_type> t(n);
          for (Elem x = 0; x < n; ++x) {
            t[x] = static_cast<LatticeMap::value_type>(
                phi_inv[L.meet(m, L.join(c, x))]);
          }
          LatticeMap g(std::move(t));
          auto       gi = S.index_of(g);
          if (gi && compose(compose(f, g), f) == f) {
            return gi;
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace

  bool is_complementary(FiniteLattice const& L, NVPair p) {
    return p.n < L.size() && p.v < L.size() && L.join(p.n, p.v) == L.top()
           && L.meet(p.n, p.v) == L.bottom();
  }

  std::string to_string(FiniteLattice const& L, NVPair p) {
    return "(" + L.label(p.n) + ";" + L.label(p.v) + ")";
  }

  std::vector<NVPair> idempotent_pairs(FiniteLattice const& L) {
    std::vector<NVPair> out;
    for (Elem n = 0; n < L.size(); ++n) {
      for (Elem v = 0; v < L.size(); ++v) {
        if (is_complementary(L, {n, v})) {
          out.push_back({n, v});
        }
      }
    }
    return out;
  }

  LatticeMap LatticeMap::identity(std::size_t n) {
    std::vector<value_type> t(n);
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = static_cast<value_type>(i);
    }
    return LatticeMap(std::move(t));
  }

  LatticeMap LatticeMap::constant(std::size_t n, Elem c) {
    return LatticeMap(std::vector<value_type>(n, static_cast<value_type>(c)));
  }

  std::size_t LatticeMapHash::operator()(LatticeMap const& f) const noexcept {
    // FNV-1a over the table entries.
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : f.table()) {
      h = (h ^ x) * 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }

  LatticeMap make_nv(FiniteLattice const& L, NVPair p) {
    require_complementary(L, p);
    if (L.size() > std::numeric_limits<LatticeMap::value_type>::max()) {
      throw Error(ErrorKind::TooLarge, "lattice too large for map tables");
    }
    std::vector<LatticeMap::value_type> t(L.size());
    for (Elem x = 0; x < L.size(); ++x) {
      t[x] = static_cast<LatticeMap::value_type>(L.meet(p.v, L.join(p.n, x)));
    }
    return LatticeMap(std::move(t));
  }

  LatticeMap make_nv_dual(FiniteLattice const& L, NVPair p) {
    require_complementary(L, p);
    std::vector<LatticeMap::value_type> t(L.size());
    for (Elem x = 0; x < L.size(); ++x) {
      t[x] = static_cast<LatticeMap::value_type>(L.join(p.n, L.meet(p.v, x)));
    }
    return LatticeMap(std::move(t));
  }

  LatticeMap compose(LatticeMap const& f, LatticeMap const& g) {
    auto                                tf = f.table();
    auto                                tg = g.table();
    std::vector<LatticeMap::value_type> t(tf.size());
    for (std::size_t x = 0; x < tf.size(); ++x) {
      t[x] = tg[tf[x]];
    }
    return LatticeMap(std::move(t));
  }

  bool is_isotone(FiniteLattice const& L, LatticeMap const& f) {
    for (Elem x = 0; x < L.size(); ++x) {
      for (Elem y = 0; y < L.size(); ++y) {
        if (L.leq(x, y) && !L.leq(f(x), f(y))) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<std::string> normal_mapping_violation(FiniteLattice const& L,
                                                      LatticeMap const&    f) {
    auto const n = static_cast<Elem>(L.size());
    if (f.size() != n) {
      return "map is not total on the lattice";
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (L.leq(x, y) && !L.leq(f(x), f(y))) {
          return "not isotone at " + L.label(x) + " <= " + L.label(y);
        }
      }
    }
    // Isotone, so the image is a principal ideal only as [0, f(1)].
    Elem const        m = f(L.top());
    std::vector<bool> in_image(n, false);
    for (Elem x = 0; x < n; ++x) {
      in_image[f(x)] = true;
    }
    for (Elem y = 0; y < n; ++y) {
      if (in_image[y] != L.leq(y, m)) {
        return "image is not the principal ideal [" + L.label(L.bottom()) + ", "
               + L.label(m) + "]";
      }
    }
    for (Elem x = 0; x < n; ++x) {
      Elem const y     = f(x);
      bool       found = false;
      for (Elem z = 0; z < n && !found; ++z) {
        if (!L.leq(z, x) || f(z) != y) {
          continue;
        }
        std::vector<Elem> dz;
        std::size_t       dy = 0;
        for (Elem w = 0; w < n; ++w) {
          if (L.leq(w, z)) {
            dz.push_back(w);
          }
          dy += L.leq(w, y);
        }
        if (dz.size() != dy) {
          continue;
        }
        found = true;
        for (std::size_t i = 0; i < dz.size() && found; ++i) {
          for (std::size_t j = 0; j < dz.size() && found; ++j) {
            bool const same = f(dz[i]) == f(dz[j]);
            found = (i == j || !same)
                    && L.leq(dz[i], dz[j]) == L.leq(f(dz[i]), f(dz[j]));
          }
        }
      }
      if (!found) {
        return "no z <= " + L.label(x) + " mapping [0, z] isomorphically onto [0, "
               + L.label(y) + "]";
      }
    }
    return std::nullopt;
  }

  std::optional<std::size_t> SemigroupPL::index_of(LatticeMap const& f) const {
    auto it = _index.find(f);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t SemigroupPL::product(std::size_t i, std::size_t j) const {
    return _index.at(compose(_elements[i], _elements[j]));
  }

  bool SemigroupPL::is_regular() const {
    return std::find(_inverse.begin(), _inverse.end(), npos) == _inverse.end();
  }

  std::vector<std::size_t> SemigroupPL::idempotents() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (_idempotent[i]) {
        out.push_back(i);
      }
    }
    return out;
  }

  SemigroupPL generate_PL(FiniteLattice const& L, ClosureOptions opts) {
    if (auto w = find_modularity_violation(L)) {
      throw Error(ErrorKind::NotComplementedModular,
                  "modular law fails at (" + L.label((*w)[0]) + ", "
                      + L.label((*w)[1]) + ", " + L.label((*w)[2]) + ")");
    }
    if (auto w = find_uncomplemented(L)) {
      throw Error(ErrorKind::NotComplementedModular,
                  L.label(*w) + " has no complement");
    }
    SemigroupPL S;
    S._pairs = idempotent_pairs(L);
    std::vector<LatticeMap> gens;
    for (auto p : S._pairs) {
      gens.push_back(make_nv(L, p));
    }
    S._elements = opts.exec == Exec::serial ? closure_serial(gens, opts.cap)
                                            : closure_parallel(gens, opts.cap);
    std::sort(S._elements.begin(), S._elements.end());
    S._index.reserve(S._elements.size());
    for (std::size_t i = 0; i < S._elements.size(); ++i) {
      S._index.emplace(S._elements[i], i);
    }
    for (auto const& g : gens) {
      S._generators.push_back(S._index.at(g));
    }

    auto const size = static_cast<std::int64_t>(S._elements.size());
    S._idempotent.assign(S._elements.size(), 0);
    S._inverse.assign(S._elements.size(), 0);
    std::vector<std::vector<Elem>> down(L.size());
    for (Elem x = 0; x < L.size(); ++x) {
      for (Elem w = 0; w < L.size(); ++w) {
        if (L.leq(w, x)) {
          down[x].push_back(w);
        }
      }
    }
    std::vector<std::uint8_t> missing(S._elements.size(), 0);
    bool const                par = opts.exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic, 64) if (par)
    for (std::int64_t i = 0; i < size; ++i) {
      auto const& f = S._elements[static_cast<std::size_t>(i)];
      S._idempotent[static_cast<std::size_t>(i)] = compose(f, f) == f;
      if (auto g = constructive_inverse(L, down, S, f)) {
        S._inverse[static_cast<std::size_t>(i)] = *g;
      } else {
        missing[static_cast<std::size_t>(i)] = 1;
      }
    }
    for (std::size_t i = 0; i < S._elements.size(); ++i) {
      if (!missing[i]) {
        continue;
      }
      ++S._fallbacks;
      auto const& f     = S._elements[i];
      bool        found = false;
      for (std::size_t j = 0; j < S._elements.size() && !found; ++j) {
        if (compose(compose(f, S._elements[j]), f) == f) {
          S._inverse[i] = j;
          found         = true;
        }
      }
      if (!found) {
        S._inverse[i] = SemigroupPL::npos;
      }
    }
    return S;
  }

}  // namespace biorder
