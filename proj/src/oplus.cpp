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

#include "biorder/oplus.hpp"

#include <algorithm>
#include <numeric>

#include "biorder/error.hpp"

namespace biorder {

  bool compatible(FiniteLattice const& L, NVPair a, NVPair b) {
    return L.leq(a.v, b.n) && L.leq(b.v, a.n);
  }

  NVPair oplus(FiniteLattice const& L, NVPair a, NVPair b) {
    if (!compatible(L, a, b)) {
      throw Error(ErrorKind::IncompatiblePair,
                  to_string(L, a) + " (+) " + to_string(L, b));
    }
    return {L.meet(a.n, b.n), L.join(a.v, b.v)};
  }

  CheckResult verify_oplus_bounds(LatticeBiorder const& E, NVPair a, NVPair b) {
    auto const& L   = E.lattice;
    auto const  sum = oplus(L, a, b);
    Idx const   i = E.index(a), j = E.index(b), s = E.index(sum);
    auto const& B = E.set;
    auto fail = [&](std::string const& why) {
      return CheckResult{false, to_string(L, a) + " (+) " + to_string(L, b) + ": " + why};
    };
    if (!B.omega(i, s) || !B.omega(j, s)) {
      return fail("a summand is not w-below the sum");
    }
    for (Idx r = 0; r < B.size(); ++r) {
      if (B.omega_l(i, r) && B.omega_l(j, r) && !B.omega_l(s, r)) {
        return fail("sum not w^l-below " + B.label(r));
      }
      if (B.omega_r(i, r) && B.omega_r(j, r) && !B.omega_r(s, r)) {
        return fail("sum not w^r-below " + B.label(r));
      }
    }
    return {};
  }

  bool verify_cancellation(FiniteLattice const& L, NVPair a, NVPair b, NVPair c) {
    return (oplus(L, a, b) == oplus(L, a, c)) == (b == c);
  }

  bool oplus_inverse_check(LatticeBiorder const& E, NVPair e) {
    auto const&  L = E.lattice;
    NVPair const unit{L.bottom(), L.top()};
    if (oplus(L, e, inverse(e)) != unit) {
      return false;
    }
    for (auto f : E.pairs) {
      if (compatible(L, e, f) && oplus(L, e, f) == unit && f != inverse(e)) {
        return false;
      }
    }
    return true;
  }

  bool is_compatible_family(FiniteLattice const& L, Family const& fam) {
    for (std::size_t i = 0; i < fam.size(); ++i) {
      for (std::size_t j = i + 1; j < fam.size(); ++j) {
        if (!compatible(L, fam[i], fam[j])) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<std::size_t> family_dependence(FiniteLattice const& L,
                                               Family const&        fam) {
    std::vector<Elem> vs;
    for (auto p : fam) {
      vs.push_back(p.v);
    }
    return find_dependent(L, vs);
  }

  FoldResult oplus_fold(FiniteLattice const& L, Family const& fam) {
    if (fam.empty()) {
      throw Error(ErrorKind::IncompatiblePair, "empty family");
    }
    auto fold = [&](std::vector<std::size_t> const& order) {
      NVPair acc = fam[order[0]];
      for (std::size_t k = 1; k < order.size(); ++k) {
        if (!compatible(L, acc, fam[order[k]])) {
          throw Error(ErrorKind::IncompatiblePair,
                      "fold step " + std::to_string(k) + ": " + to_string(L, acc)
                          + " (+) " + to_string(L, fam[order[k]]));
        }
        acc = oplus(L, acc, fam[order[k]]);
      }
      return acc;
    };
    std::vector<std::size_t> order(fam.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    FoldResult r{fold(order), true, 1};
    auto       check = [&] {
      r.order_independent = r.order_independent && fold(order) == r.value;
      ++r.orders_checked;
    };
    if (fam.size() <= 6) {
      while (std::next_permutation(order.begin(), order.end())) {
        check();
      }
    } else {
      for (std::size_t k = 1; k < fam.size(); ++k) {
        std::rotate(order.begin(), order.begin() + 1, order.end());
        check();
      }
      std::reverse(order.begin(), order.end());
      check();
    }
    return r;
  }

  std::vector<Family> find_E0_subsets(LatticeBiorder const& E,
                                      std::size_t           N,
                                      SearchOptions         opts) {
    std::vector<Family> out;
    std::size_t const   m = E.size();
    if (N == 0 || m == 0) {
      return out;
    }
    auto const&  L = E.lattice;
    NVPair const unit{L.bottom(), L.top()};
    auto const   dist = distance_matrix(E.set, opts.exec);
    auto         linked = [&](Idx a, Idx b) {
      auto const d = dist[a * m + b];
      bool const near = opts.mode == DistanceMode::exact3 ? d == 3 : (d >= 1 && d <= 3);
      return near && compatible(L, E.pairs[a], E.pairs[b]);
    };

    // Depth-first over increasing indices starting from `first`.
    auto search_from = [&](Idx first, std::vector<Family>& found, std::size_t limit) {
      std::vector<Idx> chosen{first};
      auto rec = [&](auto& self, Idx next) -> bool {
        if (chosen.size() == N) {
          Family fam;
          for (Idx c : chosen) {
            fam.push_back(E.pairs[c]);
          }
          if (oplus_fold(L, fam).value == unit) {
            found.push_back(std::move(fam));
            if (limit && found.size() >= limit) {
              return false;
            }
          }
          return true;
        }
        for (Idx x = next; x < m; ++x) {
          bool ok = true;
          for (std::size_t k = 0; k < chosen.size() && ok; ++k) {
            ok = linked(chosen[k], x);
          }
          if (!ok) {
            continue;
          }
          chosen.push_back(x);
          bool const go_on = self(self, x + 1);
          chosen.pop_back();
          if (!go_on) {
            return false;
          }
        }
        return true;
      };
      return rec(rec, first + 1);
    };

    if (opts.limit > 0 || opts.exec == Exec::serial) {
      for (Idx first = 0; first < m; ++first) {
        if (!search_from(first, out, opts.limit ? opts.limit : 0)) {
          break;
        }
      }
      return out;
    }
    std::vector<std::vector<Family>> per_first(m);
    auto const                       size = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < size; ++i) {
      search_from(static_cast<Idx>(i), per_first[static_cast<std::size_t>(i)], 0);
    }
    for (auto& fams : per_first) {
      std::move(fams.begin(), fams.end(), std::back_inserter(out));
    }
    return out;
  }

  HomogeneousBasis certify_homogeneous_basis(FiniteLattice const&     L,
                                             std::vector<Elem> const& xs) {
    if (auto i = find_dependent(L, xs)) {
      throw Error(ErrorKind::NotABasis,
                  "not independent at " + L.label(xs[*i]));
    }
    if (L.join_all(xs) != L.top()) {
      throw Error(ErrorKind::NotABasis, "join is not the top element");
    }
    HomogeneousBasis B{xs, {}};
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        auto axes = perspectivity_axes(L, xs[i], xs[j]);
        if (axes.empty()) {
          throw Error(ErrorKind::NotABasis,
                      L.label(xs[i]) + " and " + L.label(xs[j]) + " are not perspective");
        }
        B.axes.push_back({i, j, axes.front()});
      }
    }
    return B;
  }

  HomogeneousBasis extract_homogeneous_basis(FiniteLattice const& L,
                                             Family const&        fam) {
    std::vector<Elem> vs;
    for (auto p : fam) {
      vs.push_back(p.v);
    }
    return certify_homogeneous_basis(L, vs);
  }

  CoordinatizationReport coordinatization_conditions(LatticeBiorder const& E,
                                                     std::size_t           N,
                                                     SearchOptions         opts) {
    CoordinatizationReport rep;
    rep.N    = N;
    rep.mode = opts.mode;
    auto const fams  = find_E0_subsets(E, N, opts);
    rep.family_count = fams.size();
    if (!fams.empty()) {
      rep.family = fams.front();
      try {
        rep.basis = extract_homogeneous_basis(E.lattice, fams.front());
      } catch (Error const& err) {
        rep.basis_failure = err.what();
      }
    }
    rep.hypothesis_holds = N >= 4 && rep.basis.has_value();
    return rep;
  }

}  // namespace biorder
