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

#include "biorder/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "biorder/error.hpp"

namespace biorder {

  namespace {

    using Vec = std::vector<unsigned>;

    // Reduced row echelon form over F_q of the given rows; zero rows dropped.
    std::vector<Vec> rref(std::vector<Vec> rows, unsigned q) {
      auto inverse = [q](unsigned a) {
        for (unsigned x = 1; x < q; ++x) {
          if (a * x % q == 1) {
            return x;
          }
        }
        return 0u;
      };
      std::size_t const cols = rows.empty() ? 0 : rows[0].size();
      std::size_t       r    = 0;
      for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        auto pivot = std::find_if(rows.begin() + r, rows.end(), [&](Vec const& v) {
          return v[c] != 0;
        });
        if (pivot == rows.end()) {
          continue;
        }
        std::iter_swap(rows.begin() + r, pivot);
        unsigned const s = inverse(rows[r][c]);
        for (auto& x : rows[r]) {
          x = x * s % q;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (i == r || rows[i][c] == 0) {
            continue;
          }
          unsigned const f = rows[i][c];
          for (std::size_t j = 0; j < cols; ++j) {
            rows[i][j] = (rows[i][j] + (q - f) * rows[r][j]) % q;
          }
        }
        ++r;
      }
      rows.resize(r);
      return rows;
    }

    std::string label_of(std::vector<Vec> const& basis) {
      if (basis.empty()) {
        return "0";
      }
      std::string out = "<";
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (i) {
          out += ',';
        }
        for (unsigned d : basis[i]) {
          out += static_cast<char>('0' + d);
        }
      }
      return out + ">";
    }

    bool is_prime(unsigned q) {
      if (q < 2) {
        return false;
      }
      for (unsigned d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  FiniteLattice chain(std::size_t n) {
    std::vector<std::pair<Elem, Elem>> covers;
    std::vector<std::string>           labels;
    for (std::size_t i = 0; i < n; ++i) {
      if (i + 1 < n) {
        covers.emplace_back(static_cast<Elem>(i), static_cast<Elem>(i + 1));
      }
      labels.push_back(i == 0 ? "0" : (i + 1 == n ? "1" : "c" + std::to_string(i)));
    }
    return build_lattice(n, covers, std::move(labels));
  }

  FiniteLattice boolean_lattice(unsigned atoms) {
    if (atoms > 12) {
      throw Error(ErrorKind::TooLarge, "boolean lattice too large");
    }
    std::size_t const                  n = std::size_t{1} << atoms;
    std::vector<std::pair<Elem, Elem>> covers;
    std::vector<std::string>           labels(n);
    for (std::size_t s = 0; s < n; ++s) {
      for (unsigned i = 0; i < atoms; ++i) {
        if (!(s >> i & 1)) {
          covers.emplace_back(static_cast<Elem>(s),
                              static_cast<Elem>(s | (std::size_t{1} << i)));
        } else {
          labels[s] += static_cast<char>('a' + i);
        }
      }
    }
    labels[0]     = "0";
    labels[n - 1] = "1";
    return build_lattice(n, covers, std::move(labels));
  }

  FiniteLattice diamond(unsigned atoms) {
    std::vector<std::pair<Elem, Elem>> covers;
    std::vector<std::string>           labels{"0"};
    Elem const                         top = atoms + 1;
    for (Elem i = 1; i <= atoms; ++i) {
      covers.emplace_back(0, i);
      covers.emplace_back(i, top);
      labels.push_back("a" + std::to_string(i));
    }
    labels.emplace_back("1");
    if (atoms == 0) {
      covers.emplace_back(0, 1);
    }
    return build_lattice(atoms + 2, covers, std::move(labels));
  }

  FiniteLattice pentagon() {
    std::vector<std::pair<Elem, Elem>> covers{{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}};
    return build_lattice(5, covers, {"0", "x", "y", "z", "1"});
  }

  FiniteLattice subspace_lattice(unsigned q, unsigned k) {
    if (!is_prime(q)) {
      throw Error(ErrorKind::TooLarge, "field order must be prime");
    }
    std::size_t nvec = 1;
    for (unsigned i = 0; i < k; ++i) {
      nvec *= q;
      if (nvec > 4096) {
        throw Error(ErrorKind::TooLarge, "subspace lattice too large");
      }
    }
    auto digits = [&](std::size_t v) {
      Vec d(k);
      for (unsigned i = k; i-- > 0;) {
        d[i] = v % q;
        v /= q;
      }
      return d;
    };
    auto index = [&](Vec const& d) {
      std::size_t v = 0;
      for (unsigned x : d) {
        v = v * q + x;
      }
      return v;
    };

    // Every subspace is the span of its RREF rows; enumerate the spans
    // reachable from {0} by adjoining one vector at a time.
    using Members = std::vector<std::uint8_t>;
    std::map<std::string, std::pair<std::vector<Vec>, Members>> spaces;
    auto span_of = [&](std::vector<Vec> const& basis) {
      Members           in(nvec, 0);
      std::vector<Vec>  span{Vec(k, 0)};
      for (auto const& b : basis) {
        std::vector<Vec> next;
        for (auto const& s : span) {
          for (unsigned c = 0; c < q; ++c) {
            Vec v(k);
            for (unsigned i = 0; i < k; ++i) {
              v[i] = (s[i] + c * b[i]) % q;
            }
            next.push_back(std::move(v));
          }
        }
        span = std::move(next);
      }
      for (auto const& v : span) {
        in[index(v)] = 1;
      }
      return in;
    };
    std::vector<std::vector<Vec>> queue{{}};
    spaces["0"] = {{}, span_of({})};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto const     basis = queue[head];
      Members const& in    = spaces[label_of(basis)].second;
      for (std::size_t w = 0; w < nvec; ++w) {
        if (in[w]) {
          continue;
        }
        auto rows = basis;
        rows.push_back(digits(w));
        auto       next  = rref(rows, q);
        auto const label = label_of(next);
        if (!spaces.count(label)) {
          spaces[label] = {next, span_of(next)};
          queue.push_back(std::move(next));
        }
      }
    }

    std::vector<std::string> labels;
    for (auto const& [label, _] : spaces) {
      labels.push_back(label);
    }
    std::sort(labels.begin(), labels.end(), [&](auto const& x, auto const& y) {
      auto dx = spaces[x].first.size(), dy = spaces[y].first.size();
      return dx != dy ? dx < dy : x > y;
    });
    std::size_t const                  n = labels.size();
    std::vector<std::pair<Elem, Elem>> covers;
    for (Elem a = 0; a < n; ++a) {
      auto const& [ba, ma] = spaces[labels[a]];
      for (Elem b = 0; b < n; ++b) {
        auto const& [bb, mb] = spaces[labels[b]];
        if (bb.size() != ba.size() + 1) {
          continue;
        }
        bool sub = true;
        for (std::size_t v = 0; v < nvec && sub; ++v) {
          sub = !ma[v] || mb[v];
        }
        if (sub) {
          covers.emplace_back(a, b);
        }
      }
    }
    return build_lattice(n, covers, std::move(labels));
  }

  std::string subspace_label(unsigned q, std::vector<std::string> const& rows) {
    std::vector<Vec> vs;
    for (auto const& r : rows) {
      Vec v;
      for (char c : r) {
        v.push_back(static_cast<unsigned>(c - '0') % q);
      }
      vs.push_back(std::move(v));
    }
    return label_of(rref(vs, q));
  }

  FiniteLattice catalog_lattice(std::string_view name) {
    auto number = [&](std::string_view s) -> std::optional<unsigned> {
      unsigned v  = 0;
      auto [p, e] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (e != std::errc() || p != s.data() + s.size()) {
        return std::nullopt;
      }
      return v;
    };
    if (name == "point") {
      return chain(1);
    }
    if (name == "N5") {
      return pentagon();
    }
    if (name.starts_with("chain")) {
      if (auto n = number(name.substr(5)); n && *n >= 1) {
        return chain(*n);
      }
    }
    if (name.size() > 1 && name[0] == 'B') {
      if (auto n = number(name.substr(1))) {
        return boolean_lattice(*n);
      }
    }
    if (name.size() > 1 && name[0] == 'M') {
      if (auto n = number(name.substr(1))) {
        return diamond(*n);
      }
    }
    if (name.size() > 1 && name[0] == 'F') {
      auto caret = name.find('^');
      if (caret != std::string_view::npos) {
        auto q = number(name.substr(1, caret - 1));
        auto k = number(name.substr(caret + 1));
        if (q && k) {
          return subspace_lattice(*q, *k);
        }
      }
    }
    throw Error(ErrorKind::ParseError,
                "unknown catalog lattice '" + std::string(name) + "'");
  }

}  // namespace biorder
