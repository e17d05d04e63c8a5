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

#include "biorder/ring.hpp"

#include <algorithm>

#include "biorder/error.hpp"

namespace biorder {

  namespace {

    using Matrix = std::vector<std::vector<unsigned>>;

    unsigned inverse_mod(unsigned a, unsigned q) {
      for (unsigned x = 1; x < q; ++x) {
        if (a * x % q == 1) {
          return x;
        }
      }
      return 0;
    }

    Matrix identity(unsigned k) {
      Matrix m(k, std::vector<unsigned>(k, 0));
      for (unsigned i = 0; i < k; ++i) {
        m[i][i] = 1;
      }
      return m;
    }

    Matrix multiply(Matrix const& a, Matrix const& b, unsigned q) {
      auto const k = a.size();
      Matrix     c(k, std::vector<unsigned>(k, 0));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
          if (a[i][l] == 0) {
            continue;
          }
          for (std::size_t j = 0; j < k; ++j) {
            c[i][j] = (c[i][j] + a[i][l] * b[l][j]) % q;
          }
        }
      }
      return c;
    }

    std::string triple(RElem a, RElem b, RElem c) {
      return "(" + std::to_string(a) + ", " + std::to_string(b) + ", "
             + std::to_string(c) + ")";
    }

  }  // namespace

  FiniteRing FiniteRing::from_tables(RingTables t) {
    std::size_t const n = t.n;
    auto              fail = [](std::string const& why) {
      throw Error(ErrorKind::NotARing, why);
    };
    if (n == 0) {
      fail("empty ring");
    }
    if (t.add.size() != n || t.mul.size() != n) {
      fail("tables must be n x n");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (t.add[i].size() != n || t.mul[i].size() != n) {
        fail("tables must be n x n");
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (t.add[i][j] >= n || t.mul[i][j] >= n) {
          fail("table entry out of range at (" + std::to_string(i) + ", "
               + std::to_string(j) + ")");
        }
      }
    }
    if (t.zero >= n || t.one >= n) {
      fail("zero or one out of range");
    }
    auto const& A = t.add;
    auto const& M = t.mul;
    std::vector<RElem> neg(n, 0);
    for (RElem a = 0; a < n; ++a) {
      if (A[a][t.zero] != a || A[t.zero][a] != a) {
        fail("additive identity fails at " + std::to_string(a));
      }
      if (M[a][t.one] != a || M[t.one][a] != a) {
        fail("multiplicative identity fails at " + std::to_string(a));
      }
      auto it = std::find(A[a].begin(), A[a].end(), t.zero);
      if (it == A[a].end()) {
        fail("no additive inverse for " + std::to_string(a));
      }
      neg[a] = static_cast<RElem>(it - A[a].begin());
      for (RElem b = 0; b < n; ++b) {
        if (A[a][b] != A[b][a]) {
          fail("addition not commutative at (" + std::to_string(a) + ", "
               + std::to_string(b) + ")");
        }
        for (RElem c = 0; c < n; ++c) {
          if (A[A[a][b]][c] != A[a][A[b][c]]) {
            fail("addition not associative at " + triple(a, b, c));
          }
          if (M[M[a][b]][c] != M[a][M[b][c]]) {
            fail("multiplication not associative at " + triple(a, b, c));
          }
          if (M[a][A[b][c]] != A[M[a][b]][M[a][c]]) {
            fail("left distributivity fails at " + triple(a, b, c));
          }
          if (M[A[a][b]][c] != A[M[a][c]][M[b][c]]) {
            fail("right distributivity fails at " + triple(a, b, c));
          }
        }
      }
    }
    FiniteRing R;
    R._n      = n;
    R._zero   = t.zero;
    R._one    = t.one;
    R._tables = std::move(t);
    R._neg    = std::move(neg);
    return R;
  }

  FiniteRing FiniteRing::matrix_ring(unsigned q, unsigned k, std::size_t cap) {
    if (q < 2 || inverse_mod(1, q) == 0 || k == 0) {
      throw Error(ErrorKind::TooLarge, "matrix ring needs q prime and k >= 1");
    }
    for (unsigned d = 2; d * d <= q; ++d) {
      if (q % d == 0) {
        throw Error(ErrorKind::TooLarge, "q must be prime");
      }
    }
    std::size_t n = 1;
    for (unsigned i = 0; i < k * k; ++i) {
      n *= q;
      if (n > cap || n > (std::size_t{1} << 31)) {
        throw Error(ErrorKind::TooLarge,
                    "M_" + std::to_string(k) + "(F_" + std::to_string(q)
                        + ") exceeds the cap of " + std::to_string(cap) + " elements");
      }
    }
    FiniteRing R;
    R._n      = n;
    R._matrix = MatrixShape{q, k};
    R._zero   = 0;
    R._one    = R.encode(identity(k));
    return R;
  }

  std::vector<std::vector<unsigned>> FiniteRing::decode(RElem a) const {
    auto const [q, k] = *_matrix;
    Matrix m(k, std::vector<unsigned>(k, 0));
    for (unsigned pos = k * k; pos-- > 0;) {
      m[pos / k][pos % k] = a % q;
      a /= q;
    }
    return m;
  }

  RElem FiniteRing::encode(std::vector<std::vector<unsigned>> const& rows) const {
    auto const [q, k] = *_matrix;
    RElem a           = 0;
    for (unsigned pos = 0; pos < k * k; ++pos) {
      a = a * q + rows[pos / k][pos % k] % q;
    }
    return a;
  }

  RElem FiniteRing::matrix_unit(unsigned i, unsigned j) const {
    auto m  = identity(_matrix->k);
    for (auto& row : m) {
      std::fill(row.begin(), row.end(), 0u);
    }
    m[i][j] = 1;
    return encode(m);
  }

  RElem FiniteRing::add(RElem a, RElem b) const {
    if (!_matrix) {
      return _tables.add[a][b];
    }
    auto const q = _matrix->q;
    RElem      r = 0, scale = 1;
    while (a || b) {
      r += (a % q + b % q) % q * scale;
      a /= q;
      b /= q;
      scale *= q;
    }
    return r;
  }

  RElem FiniteRing::neg(RElem a) const {
    if (!_matrix) {
      return _neg[a];
    }
    auto const q = _matrix->q;
    RElem      r = 0, scale = 1;
    while (a) {
      r += (q - a % q) % q * scale;
      a /= q;
      scale *= q;
    }
    return r;
  }

  RElem FiniteRing::mul(RElem a, RElem b) const {
    if (!_matrix) {
      return _tables.mul[a][b];
    }
    return encode(multiply(decode(a), decode(b), _matrix->q));
  }

  std::string FiniteRing::label(RElem a) const {
    if (!_matrix) {
      return std::to_string(a);
    }
    std::string out = "[";
    auto const  m   = decode(a);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) {
        out += ';';
      }
      for (unsigned d : m[i]) {
        out += std::to_string(d);
      }
    }
    return out + "]";
  }

  RElem generalized_inverse(FiniteRing const& R, RElem a) {
    auto const shape = R.matrix_shape();
    if (!shape) {
      throw Error(ErrorKind::NotARing, "generalized_inverse needs a matrix ring");
    }
    auto const [q, k] = *shape;
    // Reduce to P A Q = diag(1, .., 1, 0, .., 0); then X = Q D P.
    Matrix   m = R.decode(a), P = identity(k), Q = identity(k);
    unsigned r = 0;
    auto     row_axpy = [&](Matrix& x, unsigned dst, unsigned src, unsigned f) {
      for (unsigned j = 0; j < k; ++j) {
        x[dst][j] = (x[dst][j] + f * x[src][j]) % q;
      }
    };
    auto col_axpy = [&](Matrix& x, unsigned dst, unsigned src, unsigned f) {
      for (unsigned i = 0; i < k; ++i) {
        x[i][dst] = (x[i][dst] + f * x[i][src]) % q;
      }
    };
    for (; r < k; ++r) {
      unsigned pi = k, pj = k;
      for (unsigned i = r; i < k && pi == k; ++i) {
        for (unsigned j = r; j < k; ++j) {
          if (m[i][j]) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == k) {
        break;
      }
      std::swap(m[r], m[pi]);
      std::swap(P[r], P[pi]);
      for (unsigned i = 0; i < k; ++i) {
        std::swap(m[i][r], m[i][pj]);
        std::swap(Q[i][r], Q[i][pj]);
      }
      unsigned const s = inverse_mod(m[r][r], q);
      for (unsigned j = 0; j < k; ++j) {
        m[r][j] = m[r][j] * s % q;
        P[r][j] = P[r][j] * s % q;
      }
      for (unsigned i = 0; i < k; ++i) {
        if (i != r && m[i][r]) {
          unsigned const f = q - m[i][r];
          row_axpy(m, i, r, f);
          row_axpy(P, i, r, f);
        }
      }
      for (unsigned j = 0; j < k; ++j) {
        if (j != r && m[r][j]) {
          unsigned const f = q - m[r][j];
          col_axpy(m, j, r, f);
          col_axpy(Q, j, r, f);
        }
      }
    }
    Matrix D(k, std::vector<unsigned>(k, 0));
    for (unsigned i = 0; i < r; ++i) {
      D[i][i] = 1;
    }
    return R.encode(multiply(multiply(Q, D, q), P, q));
  }

  std::optional<RElem> find_irregular(FiniteRing const& R, Exec exec) {
    auto const                size = static_cast<std::int64_t>(R.size());
    std::vector<std::uint8_t> bad(R.size(), 0);
    bool const                par = exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic, 256) if (par)
    for (std::int64_t i = 0; i < size; ++i) {
      auto const a  = static_cast<RElem>(i);
      bool       ok = false;
      if (R.matrix_shape()) {
        auto const x = generalized_inverse(R, a);
        ok           = R.mul(R.mul(a, x), a) == a;
      } else {
        for (RElem x = 0; x < R.size() && !ok; ++x) {
          ok = R.mul(R.mul(a, x), a) == a;
        }
      }
      bad[static_cast<std::size_t>(i)] = !ok;
    }
    auto it = std::find(bad.begin(), bad.end(), std::uint8_t{1});
    if (it == bad.end()) {
      return std::nullopt;
    }
    return static_cast<RElem>(it - bad.begin());
  }

  std::vector<RElem> ring_idempotents(FiniteRing const& R, Exec exec) {
    auto const                size = static_cast<std::int64_t>(R.size());
    std::vector<std::uint8_t> idem(R.size(), 0);
    bool const                par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t i = 0; i < size; ++i) {
      auto const e                      = static_cast<RElem>(i);
      idem[static_cast<std::size_t>(i)] = R.mul(e, e) == e;
    }
    std::vector<RElem> out;
    for (RElem e = 0; e < R.size(); ++e) {
      if (idem[e]) {
        out.push_back(e);
      }
    }
    return out;
  }

}  // namespace biorder
