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

#include "biorder/biorder.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "biorder/error.hpp"

namespace biorder {

  namespace {

    using Witness = std::optional<std::string>;

    // Runs `fn` for every outer index and keeps the witness with the
    // smallest index, so serial and parallel runs report the same one.
    template <typename Fn>
    AxiomResult scan(std::string name, std::size_t m, Exec exec, Fn&& fn) {
      std::vector<Witness> found(m);
      auto const           size = static_cast<std::int64_t>(m);
      bool const           par  = exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic) if (par)
      for (std::int64_t i = 0; i < size; ++i) {
        found[static_cast<std::size_t>(i)] = fn(static_cast<Idx>(i));
      }
      AxiomResult r{std::move(name), true, {}, {}};
      for (auto& w : found) {
        if (w) {
          r.passed  = false;
          r.witness = std::move(*w);
          break;
        }
      }
      return r;
    }

    std::string set_str(BiorderedSet const& E, std::vector<Idx> const& xs) {
      std::string out = "{";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? ", " : "") + E.label(xs[i]);
      }
      return out + "}";
    }

    std::vector<std::vector<Idx>> adjacency(BiorderedSet const& E) {
      std::vector<std::vector<Idx>> adj(E.size());
      for (Idx x = 0; x < E.size(); ++x) {
        for (Idx y = 0; y < E.size(); ++y) {
          if (x != y && (E.L(x, y) || E.R(x, y))) {
            adj[x].push_back(y);
          }
        }
      }
      return adj;
    }

    // BFS parents from `src`; parent[src] = src, unreachable = undefined.
    std::vector<Idx> bfs(std::vector<std::vector<Idx>> const& adj, Idx src) {
      std::vector<Idx> parent(adj.size(), BiorderedSet::undefined);
      std::deque<Idx>  queue{src};
      parent[src] = src;
      while (!queue.empty()) {
        Idx x = queue.front();
        queue.pop_front();
        for (Idx y : adj[x]) {
          if (parent[y] == BiorderedSet::undefined) {
            parent[y] = x;
            queue.push_back(y);
          }
        }
      }
      return parent;
    }

    std::vector<std::uint32_t> bfs_depth(std::vector<std::vector<Idx>> const& adj,
                                         Idx src) {
      std::vector<std::uint32_t> depth(adj.size(), 0);
      std::vector<std::uint8_t>  seen(adj.size(), 0);
      std::deque<Idx>            queue{src};
      seen[src] = 1;
      while (!queue.empty()) {
        Idx x = queue.front();
        queue.pop_front();
        for (Idx y : adj[x]) {
          if (!seen[y]) {
            seen[y]  = 1;
            depth[y] = depth[x] + 1;
            queue.push_back(y);
          }
        }
      }
      depth[src] = 1;
      return depth;
    }

    std::string quote(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + "\"";
    }

  }  // namespace

  BiorderedSet::BiorderedSet(std::size_t               m,
                             std::vector<std::uint8_t> omega_l,
                             std::vector<std::uint8_t> omega_r,
                             std::vector<Idx>          product,
                             std::vector<std::string>  labels)
      : _m(m),
        _omega_l(std::move(omega_l)),
        _omega_r(std::move(omega_r)),
        _product(std::move(product)),
        _labels(std::move(labels)) {
    if (_omega_l.size() != m * m || _omega_r.size() != m * m
        || _product.size() != m * m || _labels.size() != m) {
      throw Error(ErrorKind::ParseError, "biordered set tables have the wrong size");
    }
  }

  MSet m_set(BiorderedSet const& E, Idx e, Idx f) {
    MSet M;
    for (Idx g = 0; g < E.size(); ++g) {
      if (E.omega_l(g, e) && E.omega_r(g, f)) {
        M.members.push_back(g);
      }
    }
    std::size_t const k = M.members.size();
    M.precedes.assign(k * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        Idx const g = M.members[i], h = M.members[j];
        auto      eg = E.product(e, g), eh = E.product(e, h);
        auto      gf = E.product(g, f), hf = E.product(h, f);
        M.precedes[i * k + j] = eg && eh && gf && hf && E.omega_r(*eg, *eh)
                                && E.omega_l(*gf, *hf);
      }
    }
    return M;
  }

  std::vector<Idx> sandwich_set(BiorderedSet const& E, Idx e, Idx f) {
    auto const        M = m_set(E, e, f);
    std::size_t const k = M.members.size();
    std::vector<Idx>  out;
    for (std::size_t j = 0; j < k; ++j) {
      bool greatest = true;
      for (std::size_t i = 0; i < k && greatest; ++i) {
        greatest = M.precedes[i * k + j] != 0;
      }
      if (greatest) {
        out.push_back(M.members[j]);
      }
    }
    return out;
  }

  std::vector<std::vector<Idx>> all_sandwich_sets(BiorderedSet const& E,
                                                  Exec                exec) {
    std::size_t const             m = E.size();
    std::vector<std::vector<Idx>> out(m * m);
    auto const                    size = static_cast<std::int64_t>(m * m);
    bool const                    par  = exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic, 16) if (par)
    for (std::int64_t i = 0; i < size; ++i) {
      auto const u = static_cast<std::size_t>(i);
      out[u] = sandwich_set(E, static_cast<Idx>(u / m), static_cast<Idx>(u % m));
    }
    return out;
  }

  bool AxiomReport::all_passed() const {
    return std::all_of(results.begin(), results.end(), [](auto const& r) {
      return r.passed;
    });
  }

  AxiomResult const* AxiomReport::find(std::string const& name) const {
    for (auto const& r : results) {
      if (r.name == name) {
        return &r;
      }
    }
    return nullptr;
  }

  AxiomReport check_biorder_axioms(BiorderedSet const& E, Exec exec) {
    std::size_t const m = E.size();
    auto const        lab = [&](Idx x) { return E.label(x); };
    auto const        prod = [&](Idx a, Idx b) { return E.product(a, b); };
    AxiomReport       rep;

    rep.results.push_back(scan("B1 quasi-orders", m, exec, [&](Idx e) -> Witness {
      if (!E.omega_l(e, e) || !E.omega_r(e, e)) {
        return "not reflexive at " + lab(e);
      }
      for (Idx f = 0; f < m; ++f) {
        for (Idx g = 0; g < m; ++g) {
          if (E.omega_l(e, f) && E.omega_l(f, g) && !E.omega_l(e, g)) {
            return "w^l not transitive: " + lab(e) + ", " + lab(f) + ", " + lab(g);
          }
          if (E.omega_r(e, f) && E.omega_r(f, g) && !E.omega_r(e, g)) {
            return "w^r not transitive: " + lab(e) + ", " + lab(f) + ", " + lab(g);
          }
        }
      }
      return std::nullopt;
    }));

    rep.results.push_back(scan("B1 domain", m, exec, [&](Idx e) -> Witness {
      for (Idx f = 0; f < m; ++f) {
        bool const defined = prod(e, f).has_value();
        if (defined != E.in_domain(e, f)) {
          return "product of " + lab(e) + " and " + lab(f)
                 + (defined ? " defined outside D_E" : " undefined on D_E");
        }
        if (!defined) {
          continue;
        }
        // The quasi-orders must agree with the product: e w^l f iff ef = e,
        // and e w^r f iff fe = e.
        if ((*prod(e, f) == e) != E.omega_l(e, f)) {
          return "ef = e disagrees with w^l at " + lab(e) + ", " + lab(f);
        }
        if (auto fe = prod(f, e); !fe || ((*fe == e) != E.omega_r(e, f))) {
          return "fe = e disagrees with w^r at " + lab(e) + ", " + lab(f);
        }
      }
      return std::nullopt;
    }));

    rep.results.push_back(scan("B21", m, exec, [&](Idx e) -> Witness {
      for (Idx f = 0; f < m; ++f) {
        if (!E.omega_r(f, e)) {
          continue;
        }
        auto fe = prod(f, e);
        if (!fe || !E.R(f, *fe) || !E.omega(*fe, e)) {
          return "e=" + lab(e) + ", f=" + lab(f);
        }
      }
      return std::nullopt;
    }));
    rep.results.push_back(scan("B21*", m, exec, [&](Idx e) -> Witness {
      for (Idx f = 0; f < m; ++f) {
        if (!E.omega_l(f, e)) {
          continue;
        }
        auto ef = prod(e, f);
        if (!ef || !E.L(f, *ef) || !E.omega(*ef, e)) {
          return "e=" + lab(e) + ", f=" + lab(f);
        }
      }
      return std::nullopt;
    }));

    rep.results.push_back(scan("B22", m, exec, [&](Idx e) -> Witness {
      for (Idx f = 0; f < m; ++f) {
        if (!E.omega_r(f, e)) {
          continue;
        }
        for (Idx g = 0; g < m; ++g) {
          if (!E.omega_r(g, e) || !E.omega_l(g, f)) {
            continue;
          }
          auto ge = prod(g, e), fe = prod(f, e);
          if (!ge || !fe || !E.omega_l(*ge, *fe)) {
            return "e=" + lab(e) + ", f=" + lab(f) + ", g=" + lab(g);
          }
        }
      }
      return std::nullopt;
    }));
    rep.results.push_back(scan("B22*", m, exec, [&](Idx e) -> Witness {
      for (Idx f = 0; f < m; ++f) {
        if (!E.omega_l(f, e)) {
          continue;
        }
        for (Idx g = 0; g < m; ++g) {
          if (!E.omega_l(g, e) || !E.omega_r(g, f)) {
            continue;
          }
          auto eg = prod(e, g), ef = prod(e, f);
          if (!eg || !ef || !E.omega_r(*eg, *ef)) {
            return "e=" + lab(e) + ", f=" + lab(f) + ", g=" + lab(g);
          }
        }
      }
      return std::nullopt;
    }));

    rep.results.push_back(scan("B31", m, exec, [&](Idx e) -> Witness {
      for (Idx f = 0; f < m; ++f) {
        if (!E.omega_r(f, e)) {
          continue;
        }
        for (Idx g = 0; g < m; ++g) {
          if (!E.omega_r(g, f)) {
            continue;
          }
          auto gf  = prod(g, f);
          auto ge  = prod(g, e);
          auto gef = ge ? prod(*ge, f) : std::nullopt;
          if (!gf || !gef || *gf != *gef) {
            return "e=" + lab(e) + ", f=" + lab(f) + ", g=" + lab(g);
          }
        }
      }
      return std::nullopt;
    }));
    rep.results.push_back(scan("B31*", m, exec, [&](Idx e) -> Witness {
      for (Idx f = 0; f < m; ++f) {
        if (!E.omega_l(f, e)) {
          continue;
        }
        for (Idx g = 0; g < m; ++g) {
          if (!E.omega_l(g, f)) {
            continue;
          }
          auto fg  = prod(f, g);
          auto eg  = prod(e, g);
          auto feg = eg ? prod(f, *eg) : std::nullopt;
          if (!fg || !feg || *fg != *feg) {
            return "e=" + lab(e) + ", f=" + lab(f) + ", g=" + lab(g);
          }
        }
      }
      return std::nullopt;
    }));

    rep.results.push_back(scan("B32", m, exec, [&](Idx e) -> Witness {
      for (Idx f = 0; f < m; ++f) {
        if (!E.omega_r(f, e)) {
          continue;
        }
        for (Idx g = 0; g < m; ++g) {
          if (!E.omega_r(g, e) || !E.omega_l(g, f)) {
            continue;
          }
          auto fg  = prod(f, g);
          auto fge = fg ? prod(*fg, e) : std::nullopt;
          auto fe = prod(f, e), ge = prod(g, e);
          auto rhs = fe && ge ? prod(*fe, *ge) : std::nullopt;
          if (!fge || !rhs || *fge != *rhs) {
            return "e=" + lab(e) + ", f=" + lab(f) + ", g=" + lab(g);
          }
        }
      }
      return std::nullopt;
    }));
    rep.results.push_back(scan("B32*", m, exec, [&](Idx e) -> Witness {
      for (Idx f = 0; f < m; ++f) {
        if (!E.omega_l(f, e)) {
          continue;
        }
        for (Idx g = 0; g < m; ++g) {
          if (!E.omega_l(g, e) || !E.omega_r(g, f)) {
            continue;
          }
          auto gf  = prod(g, f);
          auto egf = gf ? prod(e, *gf) : std::nullopt;
          auto eg = prod(e, g), ef = prod(e, f);
          auto rhs = eg && ef ? prod(*eg, *ef) : std::nullopt;
          if (!egf || !rhs || *egf != *rhs) {
            return "e=" + lab(e) + ", f=" + lab(f) + ", g=" + lab(g);
          }
        }
      }
      return std::nullopt;
    }));

    auto const sandwich = all_sandwich_sets(E, exec);
    auto const S        = [&](Idx a, Idx b) -> std::vector<Idx> const& {
      return sandwich[a * m + b];
    };

    // S(f, g)e = S(fe, ge) for f, g in w^r(e), and dually.
    auto b4 = [&](bool dual) {
      return [&, dual](Idx e) -> Witness {
        for (Idx f = 0; f < m; ++f) {
          if (!(dual ? E.omega_l(f, e) : E.omega_r(f, e))) {
            continue;
          }
          for (Idx g = 0; g < m; ++g) {
            if (!(dual ? E.omega_l(g, e) : E.omega_r(g, e))) {
              continue;
            }
            std::vector<Idx> lhs;
            bool             ok = true;
            for (Idx h : S(f, g)) {
              auto he = dual ? prod(e, h) : prod(h, e);
              ok      = ok && he.has_value();
              if (he) {
                lhs.push_back(*he);
              }
            }
            auto fe = dual ? prod(e, f) : prod(f, e);
            auto ge = dual ? prod(e, g) : prod(g, e);
            if (!ok || !fe || !ge) {
              return "undefined product at e=" + lab(e) + ", f=" + lab(f)
                     + ", g=" + lab(g);
            }
            std::sort(lhs.begin(), lhs.end());
            lhs.erase(std::unique(lhs.begin(), lhs.end()), lhs.end());
            if (lhs != S(*fe, *ge)) {
              return "e=" + lab(e) + ", f=" + lab(f) + ", g=" + lab(g) + ": "
                     + set_str(E, lhs) + " != " + set_str(E, S(*fe, *ge));
            }
          }
        }
        return std::nullopt;
      };
    };
    rep.results.push_back(scan("B4", m, exec, b4(false)));
    rep.results.push_back(scan("B4*", m, exec, b4(true)));

    rep.results.push_back(scan("omega partial order", m, exec, [&](Idx e) -> Witness {
      for (Idx f = 0; f < m; ++f) {
        if (e != f && E.omega(e, f) && E.omega(f, e)) {
          return lab(e) + " and " + lab(f);
        }
      }
      return std::nullopt;
    }));

    rep.results.push_back(scan("regular", m, exec, [&](Idx e) -> Witness {
      for (Idx f = 0; f < m; ++f) {
        if (S(e, f).empty()) {
          return "S(" + lab(e) + ", " + lab(f) + ") is empty";
        }
      }
      return std::nullopt;
    }));

    for (auto& r : rep.results) {
      if (r.name.back() == '*') {
        r.note = "dual: w^l and w^r swapped and products reversed";
      }
    }
    return rep;
  }

  std::size_t e_distance(BiorderedSet const& E, Idx e, Idx f) {
    auto const path = e_sequence(E, e, f);
    if (path.empty()) {
      return 0;
    }
    return e == f ? 1 : path.size() - 1;
  }

  std::vector<Idx> e_sequence(BiorderedSet const& E, Idx e, Idx f) {
    if (e == f) {
      return {e};
    }
    auto const parent = bfs(adjacency(E), e);
    if (parent[f] == BiorderedSet::undefined) {
      return {};
    }
    std::vector<Idx> path{f};
    while (path.back() != e) {
      path.push_back(parent[path.back()]);
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  std::vector<std::uint32_t> distance_matrix(BiorderedSet const& E, Exec exec) {
    std::size_t const          m   = E.size();
    auto const                 adj = adjacency(E);
    std::vector<std::uint32_t> out(m * m);
    auto const                 size = static_cast<std::int64_t>(m);
    bool const                 par  = exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic) if (par)
    for (std::int64_t i = 0; i < size; ++i) {
      auto const d = bfs_depth(adj, static_cast<Idx>(i));
      std::copy(d.begin(), d.end(), out.begin() + i * static_cast<std::int64_t>(m));
    }
    return out;
  }

  std::string lr_graph_dot(BiorderedSet const& E) {
    std::ostringstream os;
    os << "graph LR {\n";
    for (Idx x = 0; x < E.size(); ++x) {
      os << "  n" << x << " [label=" << quote(E.label(x)) << "];\n";
    }
    for (Idx x = 0; x < E.size(); ++x) {
      for (Idx y = x + 1; y < E.size(); ++y) {
        if (E.L(x, y)) {
          os << "  n" << x << " -- n" << y << " [label=\"L\"];\n";
        }
        if (E.R(x, y)) {
          os << "  n" << x << " -- n" << y << " [label=\"R\"];\n";
        }
      }
    }
    os << "}\n";
    return os.str();
  }

  std::string omega_diagram_dot(BiorderedSet const& E) {
    std::ostringstream os;
    os << "digraph omega {\n  rankdir=BT;\n";
    for (Idx x = 0; x < E.size(); ++x) {
      os << "  n" << x << " [label=" << quote(E.label(x)) << "];\n";
    }
    auto emit = [&](auto rel, char const* name) {
      auto strict = [&](Idx a, Idx b) { return rel(a, b) && !rel(b, a); };
      for (Idx x = 0; x < E.size(); ++x) {
        for (Idx y = 0; y < E.size(); ++y) {
          if (!strict(x, y)) {
            continue;
          }
          bool cover = true;
          for (Idx z = 0; z < E.size() && cover; ++z) {
            cover = !(strict(x, z) && strict(z, y));
          }
          if (cover) {
            os << "  n" << x << " -> n" << y << " [label=\"" << name << "\"];\n";
          }
        }
      }
    };
    emit([&](Idx a, Idx b) { return E.omega_l(a, b); }, "l");
    emit([&](Idx a, Idx b) { return E.omega_r(a, b); }, "r");
    os << "}\n";
    return os.str();
  }

  std::optional<Idx> LatticeBiorder::find(NVPair p) const {
    std::size_t const n = lattice.size();
    if (p.n >= n || p.v >= n || lookup[p.n * n + p.v] == BiorderedSet::undefined) {
      return std::nullopt;
    }
    return lookup[p.n * n + p.v];
  }

  Idx LatticeBiorder::index(NVPair p) const {
    if (auto i = find(p)) {
      return *i;
    }
    throw Error(ErrorKind::UnknownElement,
                "(" + std::to_string(p.n) + ";" + std::to_string(p.v)
                    + ") is not a complementary pair");
  }

  NVPair basic_product(FiniteLattice const& L, NVPair e, NVPair f) {
    bool const e_l_f = L.leq(e.v, f.v), e_r_f = L.leq(f.n, e.n);
    bool const f_l_e = L.leq(f.v, e.v), f_r_e = L.leq(e.n, f.n);
    if (e_l_f) {
      return e;
    }
    if (f_r_e) {
      return f;
    }
    if (e_r_f) {
      return {e.n, L.meet(f.v, L.join(f.n, e.v))};
    }
    if (f_l_e) {
      return {L.join(e.n, L.meet(e.v, f.n)), f.v};
    }
    throw Error(ErrorKind::UndefinedProduct,
                to_string(L, e) + " and " + to_string(L, f) + " are not in D_E");
  }

  LatticeBiorder build_biorder(FiniteLattice const& L) {
    if (!is_complemented_modular(L)) {
      throw Error(ErrorKind::NotComplementedModular,
                  "E_P(L) needs a complemented modular lattice");
    }
    LatticeBiorder B;
    B.lattice         = L;
    B.pairs           = idempotent_pairs(L);
    std::size_t const n = L.size(), m = B.pairs.size();
    B.lookup.assign(n * n, BiorderedSet::undefined);
    std::vector<std::string> labels;
    for (Idx i = 0; i < m; ++i) {
      B.lookup[B.pairs[i].n * n + B.pairs[i].v] = i;
      labels.push_back(to_string(L, B.pairs[i]));
    }
    std::vector<std::uint8_t> wl(m * m), wr(m * m);
    std::vector<Idx>          prod(m * m, BiorderedSet::undefined);
    for (Idx i = 0; i < m; ++i) {
      for (Idx j = 0; j < m; ++j) {
        auto const e = B.pairs[i], f = B.pairs[j];
        wl[i * m + j] = L.leq(e.v, f.v);
        wr[i * m + j] = L.leq(f.n, e.n);
      }
    }
    for (Idx i = 0; i < m; ++i) {
      for (Idx j = 0; j < m; ++j) {
        if (wl[i * m + j] || wr[i * m + j] || wl[j * m + i] || wr[j * m + i]) {
          prod[i * m + j] = B.index(basic_product(L, B.pairs[i], B.pairs[j]));
        }
      }
    }
    B.set = BiorderedSet(m, std::move(wl), std::move(wr), std::move(prod),
                         std::move(labels));
    return B;
  }

  std::vector<NVPair> sandwich_set(LatticeBiorder const& E, NVPair e, NVPair f) {
    std::vector<NVPair> out;
    for (Idx h : sandwich_set(E.set, E.index(e), E.index(f))) {
      out.push_back(E.pairs[h]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<NVPair> sandwich_via_complements(FiniteLattice const& L,
                                               NVPair               e,
                                               NVPair               f) {
    auto const ns = relative_complements(L, L.join(e.v, f.n), {f.n, L.top()});
    auto const vs = relative_complements(L, L.meet(e.v, f.n), {L.bottom(), e.v});
    std::vector<NVPair> out;
    for (Elem n : ns) {
      for (Elem v : vs) {
        if (is_complementary(L, {n, v})) {
          out.push_back({n, v});
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace biorder
