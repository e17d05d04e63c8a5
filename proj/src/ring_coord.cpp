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

#include "biorder/ring_coord.hpp"

#include <algorithm>
#include <map>

#include "biorder/error.hpp"

namespace biorder {

  std::optional<Idx> RingBiorder::find(RElem e) const {
    auto it = std::lower_bound(idempotents.begin(), idempotents.end(), e);
    if (it == idempotents.end() || *it != e) {
      return std::nullopt;
    }
    return static_cast<Idx>(it - idempotents.begin());
  }

  Idx RingBiorder::index(RElem e) const {
    if (auto i = find(e)) {
      return *i;
    }
    throw Error(ErrorKind::NotIdempotent, ring.label(e));
  }

  RingBiorder build_ring_biorder(FiniteRing const& R, Exec exec) {
    RingBiorder E{R, ring_idempotents(R, exec), {}};
    std::size_t const         m = E.idempotents.size();
    std::vector<RElem>        prod(m * m);
    auto const                size = static_cast<std::int64_t>(m * m);
    bool const                par  = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t u = 0; u < size; ++u) {
      auto const i = static_cast<std::size_t>(u) / m, j = static_cast<std::size_t>(u) % m;
      prod[static_cast<std::size_t>(u)] = R.mul(E.idempotents[i], E.idempotents[j]);
    }
    std::vector<std::uint8_t> wl(m * m), wr(m * m);
    std::vector<Idx>          table(m * m, BiorderedSet::undefined);
    std::vector<std::string>  labels;
    for (std::size_t i = 0; i < m; ++i) {
      labels.push_back(R.label(E.idempotents[i]));
      for (std::size_t j = 0; j < m; ++j) {
        wl[i * m + j] = prod[i * m + j] == E.idempotents[i];
        wr[i * m + j] = prod[j * m + i] == E.idempotents[i];
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (wl[i * m + j] || wr[i * m + j] || wl[j * m + i] || wr[j * m + i]) {
          if (auto p = E.find(prod[i * m + j])) {
            table[i * m + j] = *p;
          }
        }
      }
    }
    E.set = BiorderedSet(m, std::move(wl), std::move(wr), std::move(table),
                         std::move(labels));
    return E;
  }

  OmegaIdeal omega_l_ideal(RingBiorder const& E, RElem e) {
    Idx const  i = E.index(e);
    OmegaIdeal I{e, {}};
    for (Idx f = 0; f < E.idempotents.size(); ++f) {
      if (E.set.omega_l(f, i)) {
        I.members.push_back(f);
      }
    }
    return I;
  }

  OmegaIdeal omega_r_ideal(RingBiorder const& E, RElem e) {
    Idx const  i = E.index(e);
    OmegaIdeal I{e, {}};
    for (Idx f = 0; f < E.idempotents.size(); ++f) {
      if (E.set.omega_r(f, i)) {
        I.members.push_back(f);
      }
    }
    return I;
  }

  OmegaLattice build_omega_lattice(RingBiorder const& E) {
    std::map<std::vector<Idx>, RElem> distinct;
    std::vector<std::vector<Idx>>     member_of(E.idempotents.size());
    for (Idx i = 0; i < E.idempotents.size(); ++i) {
      auto I       = omega_l_ideal(E, E.idempotents[i]);
      member_of[i] = I.members;
      distinct.emplace(std::move(I.members), I.base);
    }
    std::vector<std::pair<std::vector<Idx>, RElem>> sets(distinct.begin(), distinct.end());
    std::stable_sort(sets.begin(), sets.end(), [](auto const& a, auto const& b) {
      return a.first.size() < b.first.size();
    });
    std::size_t const         n = sets.size();
    std::vector<std::uint8_t> leq(n * n, 0);
    std::vector<std::string>  labels;
    for (std::size_t a = 0; a < n; ++a) {
      labels.push_back("wl" + E.ring.label(sets[a].second));
      for (std::size_t b = 0; b < n; ++b) {
        leq[a * n + b] = std::includes(sets[b].first.begin(), sets[b].first.end(),
                                       sets[a].first.begin(), sets[a].first.end());
      }
    }
    OmegaLattice W;
    W.lattice = lattice_from_order(n, std::move(leq), std::move(labels));
    for (auto& s : sets) {
      W.ideals.push_back(std::move(s.first));
    }
    for (auto const& members : member_of) {
      auto it = std::find(W.ideals.begin(), W.ideals.end(), members);
      W.of_idempotent.push_back(static_cast<Elem>(it - W.ideals.begin()));
    }
    W.modular      = is_modular(W.lattice);
    W.complemented = is_complemented(W.lattice);
    return W;
  }

  NVPair epsilon(RingBiorder const& E, OmegaLattice const& W, RElem e) {
    auto const&  R = E.ring;
    Idx const    i = E.index(e);
    Idx const    c = E.index(R.sub(R.one(), e));
    NVPair const p{W.of_idempotent[c], W.of_idempotent[i]};
    if (!is_complementary(W.lattice, p)) {
      throw Error(ErrorKind::NotComplementary,
                  "epsilon(" + R.label(e) + ") = " + to_string(W.lattice, p));
    }
    return p;
  }

  EpsilonReport verify_epsilon_iso(RingBiorder const&    E,
                                   OmegaLattice const&   W,
                                   LatticeBiorder const& target,
                                   Exec                  exec) {
    EpsilonReport     rep;
    std::size_t const m = E.idempotents.size();
    rep.ring_idempotents = m;
    rep.lattice_pairs    = target.size();
    auto note = [&](bool& flag, std::string const& why) {
      if (flag && rep.witness.empty()) {
        rep.witness = why;
      }
      flag = false;
    };

    std::vector<Idx> img(m, BiorderedSet::undefined);
    for (Idx i = 0; i < m; ++i) {
      auto const& R = E.ring;
      NVPair      p{W.of_idempotent[E.index(R.sub(R.one(), E.idempotents[i]))],
               W.of_idempotent[i]};
      if (auto t = target.find(p)) {
        img[i] = *t;
      } else {
        note(rep.complementary, "epsilon(" + R.label(E.idempotents[i]) + ") is not complementary");
      }
    }
    if (!rep.complementary) {
      rep.injective = rep.surjective = false;
      rep.preserves_omega_l = rep.preserves_omega_r = false;
      rep.preserves_products = rep.preserves_distance = false;
      return rep;
    }
    std::vector<Idx> sorted = img;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      note(rep.injective, "two idempotents share an image");
    }
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() != target.size()) {
      note(rep.surjective, std::to_string(sorted.size()) + " of "
                               + std::to_string(target.size()) + " pairs are hit");
    }

    auto const& A = E.set;
    auto const& B = target.set;
    for (Idx i = 0; i < m; ++i) {
      for (Idx j = 0; j < m; ++j) {
        std::string const at = " at (" + A.label(i) + ", " + A.label(j) + ")";
        if (A.omega_l(i, j) != B.omega_l(img[i], img[j])) {
          note(rep.preserves_omega_l, "w^l differs" + at);
        }
        if (A.omega_r(i, j) != B.omega_r(img[i], img[j])) {
          note(rep.preserves_omega_r, "w^r differs" + at);
        }
        auto const p = A.product(i, j);
        auto const q = B.product(img[i], img[j]);
        if (p.has_value() != q.has_value() || (p && img[*p] != *q)) {
          note(rep.preserves_products, "product differs" + at);
        }
      }
    }
    auto const dA = distance_matrix(A, exec);
    auto const dB = distance_matrix(B, exec);
    for (Idx i = 0; i < m && rep.preserves_distance; ++i) {
      for (Idx j = 0; j < m; ++j) {
        if (dA[i * m + j] != dB[img[i] * target.size() + img[j]]) {
          note(rep.preserves_distance,
               "distance differs at (" + A.label(i) + ", " + A.label(j) + ")");
          break;
        }
      }
    }
    return rep;
  }

  OrthogonalBasisReport verify_orthogonal_basis(RingBiorder const&        E,
                                        OmegaLattice const&       W,
                                        std::vector<RElem> const& es) {
    OrthogonalBasisReport rep;
    rep.es       = es;
    auto const& R = E.ring;
    auto fail = [&](bool& flag, std::string const& why) {
      flag = false;
      if (rep.failed_hypothesis.empty()) {
        rep.failed_hypothesis = why;
      }
    };
    std::vector<Idx> idx;
    for (RElem e : es) {
      auto i = E.find(e);
      if (!i) {
        rep.failed_hypothesis = R.label(e) + " is not idempotent";
        return rep;
      }
      idx.push_back(*i);
    }
    Idx const zero = E.index(R.zero());
    for (std::size_t i = 0; i < es.size(); ++i) {
      for (std::size_t j = 0; j < es.size(); ++j) {
        if (i == j) {
          continue;
        }
        if (R.mul(es[i], es[j]) != R.zero()) {
          fail(rep.orthogonal, "e_i e_j != 0 for " + R.label(es[i]) + ", " + R.label(es[j]));
        }
        if (m_set(E.set, idx[i], idx[j]).members != std::vector<Idx>{zero}) {
          rep.m_sets_zero = false;
        }
      }
    }
    for (std::size_t i = 0; i < es.size(); ++i) {
      for (std::size_t j = i + 1; j < es.size(); ++j) {
        auto d = static_cast<std::uint32_t>(e_distance(E.set, idx[i], idx[j]));
        rep.distances.push_back(d);
        if (d == 0 || d > 3) {
          fail(rep.distances_at_most3, "d(" + R.label(es[i]) + ", " + R.label(es[j])
                                           + ") = " + std::to_string(d));
        }
      }
    }
    RElem sum = R.zero();
    for (RElem e : es) {
      sum = R.add(sum, e);
    }
    if (sum != R.one()) {
      fail(rep.sum_is_one, "sum is " + R.label(sum));
    }
    std::vector<Elem> xs;
    for (Idx i : idx) {
      xs.push_back(W.of_idempotent[i]);
    }
    if (auto s = E.find(sum)) {
      rep.join_is_ideal_of_sum = W.lattice.join_all(xs) == W.of_idempotent[*s];
    } else {
      rep.join_is_ideal_of_sum = false;
    }
    if (!rep.hypotheses_hold()) {
      return rep;
    }
    try {
      rep.basis = certify_homogeneous_basis(W.lattice, xs);
    } catch (Error const& err) {
      rep.basis_failure = err.what();
    }
    return rep;
  }

  AxiomReport verify_ring_biorder_axioms(RingBiorder const& E, Exec exec) {
    return check_biorder_axioms(E.set, exec);
  }

}  // namespace biorder
