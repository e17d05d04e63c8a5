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

#include "biorder/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "biorder/catalog.hpp"
#include "biorder/error.hpp"

namespace biorder {

  namespace {
    [[noreturn]] void parse_error(std::string const& why) {
      throw Error(ErrorKind::ParseError, why);
    }

    template <typename T>
    T field(nlohmann::json const& j, char const* key) {
      if (!j.contains(key)) {
        parse_error(std::string("missing field '") + key + "'");
      }
      try {
        return j.at(key).get<T>();
      } catch (nlohmann::json::exception const& e) {
        parse_error(std::string("field '") + key + "': " + e.what());
      }
    }
  }  // namespace

  FiniteLattice lattice_from_json(nlohmann::json const& j) {
    if (!j.is_object()) {
      parse_error("lattice must be a JSON object");
    }
    auto const n      = field<std::size_t>(j, "n");
    auto const covers = field<std::vector<std::array<std::int64_t, 2>>>(j, "covers");
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      labels = field<std::vector<std::string>>(j, "labels");
    }
    std::vector<std::pair<Elem, Elem>> cs;
    for (auto [lo, hi] : covers) {
      if (lo < 0 || hi < 0 || static_cast<std::size_t>(lo) >= n
          || static_cast<std::size_t>(hi) >= n) {
        parse_error("cover [" + std::to_string(lo) + ", " + std::to_string(hi)
                    + "] out of range");
      }
      cs.emplace_back(static_cast<Elem>(lo), static_cast<Elem>(hi));
    }
    return build_lattice(n, cs, std::move(labels));
  }

  ordered_json lattice_to_json(FiniteLattice const& L) {
    ordered_json j;
    j["n"]      = L.size();
    j["labels"] = L.labels();
    j["covers"] = ordered_json::array();
    for (auto [lo, hi] : L.covers()) {
      j["covers"].push_back({lo, hi});
    }
    return j;
  }

  FiniteRing ring_from_json(nlohmann::json const& j, std::size_t cap) {
    if (!j.is_object()) {
      parse_error("ring must be a JSON object");
    }
    if (j.contains("matrix_ring")) {
      auto const& m = j.at("matrix_ring");
      return FiniteRing::matrix_ring(field<unsigned>(m, "q"), field<unsigned>(m, "k"), cap);
    }
    RingTables t;
    t.n = field<std::size_t>(j, "n");
    if (t.n > 1024) {
      throw Error(ErrorKind::TooLarge, "table rings are limited to 1024 elements");
    }
    t.add  = field<std::vector<std::vector<RElem>>>(j, "add");
    t.mul  = field<std::vector<std::vector<RElem>>>(j, "mul");
    t.zero = field<RElem>(j, "zero");
    t.one  = field<RElem>(j, "one");
    return FiniteRing::from_tables(std::move(t));
  }

  ordered_json ring_to_json(FiniteRing const& R) {
    ordered_json j;
    if (auto shape = R.matrix_shape()) {
      j["matrix_ring"] = {{"q", shape->q}, {"k", shape->k}};
      return j;
    }
    auto const* t = R.tables();
    j["n"]        = t->n;
    j["add"]      = t->add;
    j["mul"]      = t->mul;
    j["zero"]     = t->zero;
    j["one"]      = t->one;
    return j;
  }

  std::string digest(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
      h = (h ^ c) * 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

  Input load_input(std::string const& source, std::size_t cap) {
    Input in;
    in.source = source;
    in.digest = digest(source);
    if (source.starts_with("catalog:")) {
      in.lattice = catalog_lattice(source.substr(8));
      return in;
    }
    if (source.starts_with("matrix:")) {
      unsigned q = 0, k = 0;
      char     tail = 0;
      if (std::sscanf(source.c_str() + 7, "%u:%u%c", &q, &k, &tail) != 2) {
        parse_error("expected matrix:<q>:<k>, got '" + source + "'");
      }
      in.ring = FiniteRing::matrix_ring(q, k, cap);
      return in;
    }
    std::ifstream file(source, std::ios::binary);
    if (!file) {
      parse_error("cannot open '" + source + "'");
    }
    std::stringstream buf;
    buf << file.rdbuf();
    std::string const text = buf.str();
    in.digest              = digest(text);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      parse_error(source + ": " + e.what());
    }
    if (j.is_object() && j.contains("covers")) {
      in.lattice = lattice_from_json(j);
    } else if (j.is_object() && (j.contains("matrix_ring") || j.contains("mul"))) {
      in.ring = ring_from_json(j, cap);
    } else {
      parse_error(source + ": neither a lattice nor a ring");
    }
    return in;
  }

}  // namespace biorder
