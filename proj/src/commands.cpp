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

#include "biorder/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "biorder/biorder.hpp"
#include "biorder/error.hpp"
#include "biorder/isomorphism.hpp"
#include "biorder/oplus.hpp"
#include "biorder/ring_coord.hpp"

namespace biorder {

  namespace {
    template <typename Fn>
    auto timed(RunReport& rep, std::string name, Fn&& fn) {
      auto const start = std::chrono::steady_clock::now();
      if constexpr (std::is_void_v<decltype(fn())>) {
        fn();
        rep.timings.emplace_back(
            std::move(name),
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count());
      } else {
        auto result = fn();
        rep.timings.emplace_back(
            std::move(name),
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count());
        return result;
      }
    }

    Input load(RunReport& rep, std::string const& path, CommandOptions const& opts) {
      Input in = load_input(path, opts.ring_cap());
      rep.inputs.push_back({in.source, in.digest});
      return in;
    }

    FiniteLattice const& need_lattice(Input const& in) {
      if (!in.lattice) {
        throw Error(ErrorKind::ParseError, in.source + ": expected a lattice");
      }
      return *in.lattice;
    }

    FiniteRing const& need_ring(Input const& in) {
      if (!in.ring) {
        throw Error(ErrorKind::ParseError, in.source + ": expected a ring");
      }
      return *in.ring;
    }

    void write_file(std::string const& path, std::string const& text) {
      std::ofstream out(path, std::ios::binary);
      if (!out) {
        throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
      }
      out << text;
    }

    std::string triple_text(FiniteLattice const& L, Triple const& t) {
      return "(" + L.label(t[0]) + ", " + L.label(t[1]) + ", " + L.label(t[2]) + ")";
    }

    void lattice_checks(RunReport& rep, FiniteLattice const& L) {
      auto const viol = find_modularity_violation(L);
      rep.check("modular", !viol, viol ? "a <= c but a v (b ^ c) != (a v b) ^ c at (a, b, c) = "
                                             + triple_text(L, *viol)
                                       : "");
      auto const unc = find_uncomplemented(L);
      rep.check("complemented", !unc, unc ? "no complement for " + L.label(*unc) : "");
    }

    ordered_json relation_rows(BiorderedSet const& E, bool left) {
      ordered_json rows = ordered_json::array();
      for (Idx e = 0; e < E.size(); ++e) {
        std::string row(E.size(), '0');
        for (Idx f = 0; f < E.size(); ++f) {
          if (left ? E.omega_l(e, f) : E.omega_r(e, f)) {
            row[f] = '1';
          }
        }
        rows.push_back(row);
      }
      return rows;
    }

    ordered_json element_labels(BiorderedSet const& E) {
      ordered_json out = ordered_json::array();
      for (Idx e = 0; e < E.size(); ++e) {
        out.push_back(E.label(e));
      }
      return out;
    }

    ordered_json pair_labels(FiniteLattice const& L, std::vector<NVPair> const& ps) {
      ordered_json out = ordered_json::array();
      for (auto p : ps) {
        out.push_back(to_string(L, p));
      }
      return out;
    }

    void axiom_checks(RunReport& rep, AxiomReport const& ax) {
      for (auto const& r : ax.results) {
        rep.check(r.name, r.passed, r.witness, r.note);
      }
    }

    std::string trim(std::string s) {
      auto const b = s.find_first_not_of(" \t");
      auto const e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    }

    Elem resolve(FiniteLattice const& L, std::string const& name) {
      auto const x = L.find(trim(name));
      if (!x) {
        throw Error(ErrorKind::UnknownElement, "no element '" + trim(name) + "'");
      }
      return *x;
    }

    std::string render(ordered_json const& v) {
      if (v.is_string()) {
        return v.get<std::string>();
      }
      return v.dump();
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // RunReport
  ////////////////////////////////////////////////////////////////////////

  void RunReport::check(std::string name, bool passed, std::string witness,
                        std::string note) {
    if (passed) {
      witness.clear();
    } else if (witness.empty()) {
      witness = "(unspecified)";
    }
    checks.push_back({std::move(name), passed, std::move(witness), std::move(note)});
  }

  bool RunReport::all_passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(),
                       [](auto const& c) { return c.passed; });
  }

  ordered_json RunReport::to_json(bool with_timings) const {
    ordered_json j;
    j["command"] = command;
    j["inputs"]  = ordered_json::array();
    for (auto const& in : inputs) {
      j["inputs"].push_back({{"source", in.source}, {"fnv1a64", in.digest}});
    }
    j["passed"] = all_passed();
    j["checks"] = ordered_json::array();
    for (auto const& c : checks) {
      ordered_json cj = {{"name", c.name}, {"passed", c.passed}};
      if (!c.witness.empty()) {
        cj["witness"] = c.witness;
      }
      if (!c.note.empty()) {
        cj["note"] = c.note;
      }
      j["checks"].push_back(std::move(cj));
    }
    j["data"] = data;
    if (with_timings) {
      j["timings"] = ordered_json::object();
      for (auto const& [name, secs] : timings) {
        j["timings"][name] = secs;
      }
    }
    return j;
  }

  std::string RunReport::to_text(bool with_timings) const {
    std::ostringstream out;
    out << "command: " << command << '\n';
    for (auto const& in : inputs) {
      out << "input: " << in.source << " (fnv1a64 " << in.digest << ")\n";
    }
    for (auto const& [key, value] : data.items()) {
      std::string const text = render(value);
      if (text.size() <= 240) {
        out << key << ": " << text << '\n';
      } else if (value.is_array()) {
        out << key << ": " << value.size() << " entries (see --json)\n";
      } else {
        out << key << ": (see --json)\n";
      }
    }
    for (auto const& c : checks) {
      out << (c.passed ? "PASS  " : "FAIL  ") << c.name;
      if (!c.witness.empty()) {
        out << "  witness: " << c.witness;
      }
      if (!c.note.empty()) {
        out << "  [" << c.note << "]";
      }
      out << '\n';
    }
    if (with_timings) {
      for (auto const& [name, secs] : timings) {
        out << "time " << name << ": " << secs << " s\n";
      }
    }
    out << (all_passed() ? "result: pass" : "result: FAIL") << '\n';
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Options
  ////////////////////////////////////////////////////////////////////////

  Exec CommandOptions::exec() const noexcept {
    return parallel == 0 ? Exec::serial : Exec::parallel;
  }

  std::size_t CommandOptions::ring_cap() const noexcept {
    return cap.value_or(default_ring_cap);
  }

  std::size_t CommandOptions::closure_cap() const noexcept {
    return cap.value_or(ClosureOptions{}.cap);
  }

  NVPair parse_pair(FiniteLattice const& L, std::string const& text) {
    std::string s = trim(text);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
      s = s.substr(1, s.size() - 2);
    }
    std::size_t split = s.find(';');
    if (split == std::string::npos) {
      // A comma outside brackets separates n from v; subspace labels
      // contain commas inside <...>.
      int depth = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        char const c = s[i];
        if (c == '<' || c == '(' || c == '[') {
          ++depth;
        } else if (c == '>' || c == ')' || c == ']') {
          --depth;
        } else if (c == ',' && depth == 0) {
          if (split != std::string::npos) {
            throw Error(ErrorKind::UnknownElement, "ambiguous pair '" + text + "'");
          }
          split = i;
        }
      }
    }
    if (split == std::string::npos) {
      throw Error(ErrorKind::UnknownElement, "expected n;v, got '" + text + "'");
    }
    NVPair const p{resolve(L, s.substr(0, split)), resolve(L, s.substr(split + 1))};
    if (!is_complementary(L, p)) {
      throw Error(ErrorKind::UnknownElement,
                  to_string(L, p) + " is not a complementary pair");
    }
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // Commands
  ////////////////////////////////////////////////////////////////////////

  RunReport cmd_validate(std::string const& path, CommandOptions const& opts) {
    RunReport rep;
    rep.command = "validate";
    Input in    = load(rep, path, opts);
    if (in.lattice) {
      auto const& L        = *in.lattice;
      rep.data["kind"]     = "lattice";
      rep.data["elements"] = L.size();
      rep.check("lattice", true);
      lattice_checks(rep, L);
    } else {
      auto const& R        = *in.ring;
      rep.data["kind"]     = "ring";
      rep.data["elements"] = R.size();
      rep.check("ring axioms", true);
      auto const bad = timed(rep, "regularity", [&] { return find_irregular(R, opts.exec()); });
      rep.check("regular", !bad, bad ? "no x with a x a = a for a = " + R.label(*bad) : "");
    }
    return rep;
  }

  RunReport cmd_biorder(std::string const& path, CommandOptions const& opts) {
    RunReport rep;
    rep.command           = "biorder";
    Input in              = load(rep, path, opts);
    auto const& L         = need_lattice(in);
    LatticeBiorder const E = timed(rep, "build", [&] { return build_biorder(L); });
    rep.data["lattice_elements"] = L.size();
    rep.data["elements"]         = E.size();
    rep.data["labels"]           = element_labels(E.set);
    rep.data["omega_l"]          = relation_rows(E.set, true);
    rep.data["omega_r"]          = relation_rows(E.set, false);
    auto const ax = timed(rep, "axioms", [&] { return check_biorder_axioms(E.set, opts.exec()); });
    axiom_checks(rep, ax);
    if (opts.dot_path) {
      write_file(*opts.dot_path, lr_graph_dot(E.set) + omega_diagram_dot(E.set));
      rep.data["dot"] = *opts.dot_path;
    }
    return rep;
  }

  RunReport cmd_sandwich(std::string const&    path,
                         std::string const&    e_text,
                         std::string const&    f_text,
                         CommandOptions const& opts) {
    RunReport rep;
    rep.command   = "sandwich";
    Input in      = load(rep, path, opts);
    auto const& L = need_lattice(in);
    auto const E  = build_biorder(L);
    NVPair const e = parse_pair(L, e_text);
    NVPair const f = parse_pair(L, f_text);

    auto const M = m_set(E.set, E.index(e), E.index(f));
    std::vector<NVPair> members;
    for (Idx g : M.members) {
      members.push_back(E.pairs[g]);
    }
    auto const direct = sandwich_set(E, e, f);
    auto const via    = sandwich_via_complements(L, e, f);

    rep.data["e"]                = to_string(L, e);
    rep.data["f"]                = to_string(L, f);
    rep.data["m_set"]            = pair_labels(L, members);
    rep.data["sandwich"]         = pair_labels(L, direct);
    rep.data["via_complements"]  = pair_labels(L, via);
    rep.check("constructions agree", direct == via,
              "maximal elements " + pair_labels(L, direct).dump()
                  + " vs relative complements " + pair_labels(L, via).dump());
    rep.check("nonempty", !direct.empty(), "S(e, f) is empty");
    return rep;
  }

  RunReport cmd_basis_search(std::string const&    path,
                             std::size_t           N,
                             CommandOptions const& opts) {
    RunReport rep;
    rep.command   = "basis-search";
    Input in      = load(rep, path, opts);
    auto const& L = need_lattice(in);
    auto const E  = build_biorder(L);

    SearchOptions so;
    so.mode  = opts.dle3 ? DistanceMode::at_most3 : DistanceMode::exact3;
    so.limit = opts.limit;
    so.exec  = opts.exec();
    auto const fams = timed(rep, "search", [&] { return find_E0_subsets(E, N, so); });

    rep.data["N"]                  = N;
    rep.data["distance_condition"] = opts.dle3 ? "1 <= d <= 3" : "d = 3";
    rep.data["family_count"]       = fams.size();
    if (!opts.dle3) {
      rep.data["note"] = "families use d = 3; the ring-side hypothesis uses d <= 3 (--dle3)";
    }
    ordered_json families = ordered_json::array();
    ordered_json bases    = ordered_json::array();
    bool         folds_ok = true;
    std::string  fold_witness;
    bool         bases_ok = true;
    std::string  basis_witness;
    for (auto const& fam : fams) {
      families.push_back(pair_labels(L, fam));
      FoldResult const fold = oplus_fold(L, fam);
      if ((!fold.order_independent || fold.value != NVPair{L.bottom(), L.top()})
          && folds_ok) {
        folds_ok     = false;
        fold_witness = pair_labels(L, fam).dump() + " folds to " + to_string(L, fold.value);
      }
      try {
        HomogeneousBasis const B = extract_homogeneous_basis(L, fam);
        ordered_json bj;
        bj["elements"] = ordered_json::array();
        for (Elem x : B.elements) {
          bj["elements"].push_back(L.label(x));
        }
        bj["axes"] = ordered_json::array();
        for (auto const& a : B.axes) {
          bj["axes"].push_back({{"i", a.i}, {"j", a.j}, {"axis", L.label(a.axis)}});
        }
        bases.push_back(std::move(bj));
      } catch (Error const& err) {
        if (bases_ok) {
          bases_ok      = false;
          basis_witness = pair_labels(L, fam).dump() + ": " + err.what();
        }
        bases.push_back(nullptr);
      }
    }
    rep.data["families"] = std::move(families);
    rep.data["bases"]    = std::move(bases);
    rep.check("folds order-independent to (0;1)", folds_ok, fold_witness);
    rep.check("bases certified", bases_ok, basis_witness);
    return rep;
  }

  RunReport cmd_coordinatize(std::string const&    lattice_path,
                             std::string const&    ring_path,
                             CommandOptions const& opts) {
    RunReport rep;
    rep.command   = "coordinatize";
    Input lin     = load(rep, lattice_path, opts);
    Input rin     = load(rep, ring_path, opts);
    auto const& L = need_lattice(lin);
    auto const& R = need_ring(rin);

    auto const bad = timed(rep, "regularity", [&] { return find_irregular(R, opts.exec()); });
    rep.check("ring regular", !bad, bad ? "no x with a x a = a for a = " + R.label(*bad) : "");

    auto const E = timed(rep, "ring biorder", [&] { return build_ring_biorder(R, opts.exec()); });
    auto const W = timed(rep, "omega lattice", [&] { return build_omega_lattice(E); });
    rep.data["lattice_elements"]  = L.size();
    rep.data["ring_elements"]     = R.size();
    rep.data["ring_idempotents"]  = E.idempotents.size();
    rep.data["omega_elements"]    = W.lattice.size();
    rep.check("omega lattice complemented modular", W.modular && W.complemented,
              W.modular ? "omega lattice not complemented" : "omega lattice not modular");

    auto const iso = timed(rep, "isomorphism", [&] { return find_lattice_isomorphism(L, W.lattice); });
    if (iso) {
      ordered_json map = ordered_json::object();
      for (Elem a = 0; a < L.size(); ++a) {
        map[L.label(a)] = W.lattice.label((*iso)[a]);
      }
      rep.data["isomorphism"] = std::move(map);
      rep.check("isomorphic", is_lattice_isomorphism(L, W.lattice, *iso),
                "search returned a map that is not an isomorphism");
    } else {
      rep.data["isomorphism"] = nullptr;
      rep.check("isomorphic", false,
                "NoIsomorphism: |L| = " + std::to_string(L.size())
                    + ", |Omega| = " + std::to_string(W.lattice.size()));
    }

    if (W.modular && W.complemented) {
      auto const target = build_biorder(W.lattice);
      rep.data["omega_biorder_elements"] = target.size();
      auto const er = timed(rep, "epsilon", [&] {
        return verify_epsilon_iso(E, W, target, opts.exec());
      });
      rep.check("epsilon bijective", er.complementary && er.injective && er.surjective,
                er.witness);
      rep.check("epsilon preserves omega_l", er.preserves_omega_l, er.witness);
      rep.check("epsilon preserves omega_r", er.preserves_omega_r, er.witness);
      rep.check("epsilon preserves products", er.preserves_products, er.witness);
      rep.check("epsilon preserves distance", er.preserves_distance, er.witness);
    }
    return rep;
  }

  RunReport cmd_ring_idempotents(std::string const& path, CommandOptions const& opts) {
    RunReport rep;
    rep.command   = "ring-idempotents";
    Input in      = load(rep, path, opts);
    auto const& R = need_ring(in);
    auto const es = timed(rep, "idempotents", [&] { return ring_idempotents(R, opts.exec()); });
    rep.data["ring_elements"] = R.size();
    rep.data["count"]         = es.size();
    ordered_json labels       = ordered_json::array();
    bool         ok           = true;
    std::string  witness;
    for (RElem e : es) {
      labels.push_back(R.label(e));
      if (R.mul(e, e) != e && ok) {
        ok      = false;
        witness = R.label(e);
      }
    }
    rep.data["idempotents"] = std::move(labels);
    rep.check("e * e = e", ok, witness);
    return rep;
  }

  RunReport cmd_omega_lattice(std::string const& path, CommandOptions const& opts) {
    RunReport rep;
    rep.command   = "omega-lattice";
    Input in      = load(rep, path, opts);
    auto const& R = need_ring(in);
    auto const E  = build_ring_biorder(R, opts.exec());
    auto const W  = timed(rep, "omega lattice", [&] { return build_omega_lattice(E); });
    rep.data["elements"] = W.lattice.size();
    rep.data["lattice"]  = lattice_to_json(W.lattice);
    lattice_checks(rep, W.lattice);
    if (opts.output_path) {
      write_file(*opts.output_path, lattice_to_json(W.lattice).dump(2) + "\n");
      rep.data["output"] = *opts.output_path;
    }
    return rep;
  }

  RunReport cmd_axioms(std::string const& path, CommandOptions const& opts) {
    RunReport rep;
    rep.command = "axioms";
    Input in    = load(rep, path, opts);
    if (in.lattice) {
      auto const E         = build_biorder(*in.lattice);
      rep.data["kind"]     = "lattice";
      rep.data["elements"] = E.size();
      axiom_checks(rep, timed(rep, "axioms", [&] {
                     return check_biorder_axioms(E.set, opts.exec());
                   }));
    } else {
      auto const E         = build_ring_biorder(*in.ring, opts.exec());
      rep.data["kind"]     = "ring";
      rep.data["elements"] = E.idempotents.size();
      axiom_checks(rep, timed(rep, "axioms", [&] {
                     return verify_ring_biorder_axioms(E, opts.exec());
                   }));
    }
    return rep;
  }

  RunReport cmd_semigroup(std::string const& path, CommandOptions const& opts) {
    RunReport rep;
    rep.command   = "semigroup";
    Input in      = load(rep, path, opts);
    auto const& L = need_lattice(in);
    ClosureOptions co;
    co.cap  = opts.closure_cap();
    co.exec = opts.exec();
    auto const S = timed(rep, "closure", [&] { return generate_PL(L, co); });

    auto const pairs = idempotent_pairs(L);
    auto const idem  = S.idempotents();
    rep.data["elements"]          = S.size();
    rep.data["idempotents"]       = idem.size();
    rep.data["complementary_pairs"] = pairs.size();

    bool        same = idem.size() == pairs.size();
    std::string witness;
    for (auto p : pairs) {
      auto const i = S.index_of(make_nv(L, p));
      if (!i || !S.is_idempotent(*i)) {
        same    = false;
        witness = to_string(L, p) + " is not an idempotent of the closure";
        break;
      }
    }
    if (!same && witness.empty()) {
      witness = std::to_string(idem.size()) + " idempotents vs "
                + std::to_string(pairs.size()) + " complementary pairs";
    }
    rep.check("idempotents are the complementary pairs", same, witness);
    std::string reg_witness;
    auto const& inv = S.regularity_certificate();
    for (std::size_t i = 0; i < S.size(); ++i) {
      if (inv[i] == SemigroupPL::npos) {
        reg_witness = "element " + std::to_string(i) + " has no inverse";
        break;
      }
    }
    rep.check("regular", reg_witness.empty(), reg_witness);
    return rep;
  }

}  // namespace biorder
