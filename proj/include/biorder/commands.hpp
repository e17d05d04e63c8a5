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

// Batch commands behind the command-line tool. Each command returns a
// RunReport; rendering and exit codes are decided by the caller.

#ifndef BIORDER_COMMANDS_HPP_
#define BIORDER_COMMANDS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "biorder/exec.hpp"
#include "biorder/io.hpp"
#include "biorder/lattice.hpp"
#include "biorder/pl_semigroup.hpp"

namespace biorder {

  struct CheckRecord {
    std::string name;
    bool        passed = true;
    std::string witness;
    std::string note;
  };

  struct InputRecord {
    std::string source;
    std::string digest;
  };

  struct RunReport {
    std::string                                  command;
    std::vector<InputRecord>                     inputs;
    std::vector<CheckRecord>                     checks;
    ordered_json                                 data = ordered_json::object();
    std::vector<std::pair<std::string, double>>  timings;  // seconds

    void check(std::string name, bool passed, std::string witness = {},
               std::string note = {});

    [[nodiscard]] bool all_passed() const noexcept;
    [[nodiscard]] ordered_json to_json(bool with_timings = false) const;
    [[nodiscard]] std::string  to_text(bool with_timings = false) const;
  };

  struct CommandOptions {
    std::optional<std::string> dot_path;
    std::optional<std::string> output_path;
    std::optional<std::size_t> cap;
    bool                       dle3 = false;
    int                        parallel = -1;  // <0 default, 0 serial
    std::size_t                limit    = 0;

    [[nodiscard]] Exec        exec() const noexcept;
    [[nodiscard]] std::size_t ring_cap() const noexcept;
    [[nodiscard]] std::size_t closure_cap() const noexcept;
  };

  //! Parses "n;v", "(n;v)" or "n,v" into a complementary pair of `L`.
  //! Throws UnknownElement.
  NVPair parse_pair(FiniteLattice const& L, std::string const& text);

  RunReport cmd_validate(std::string const& path, CommandOptions const& opts = {});
  RunReport cmd_biorder(std::string const& path, CommandOptions const& opts = {});
  RunReport cmd_sandwich(std::string const&    path,
                         std::string const&    e,
                         std::string const&    f,
                         CommandOptions const& opts = {});
  RunReport cmd_basis_search(std::string const&    path,
                             std::size_t           N,
                             CommandOptions const& opts = {});
  RunReport cmd_coordinatize(std::string const&    lattice_path,
                             std::string const&    ring_path,
                             CommandOptions const& opts = {});
  RunReport cmd_ring_idempotents(std::string const&    path,
                                 CommandOptions const& opts = {});
  RunReport cmd_omega_lattice(std::string const&    path,
                              CommandOptions const& opts = {});
  RunReport cmd_axioms(std::string const& path, CommandOptions const& opts = {});
  RunReport cmd_semigroup(std::string const& path, CommandOptions const& opts = {});

}  // namespace biorder

#endif  // BIORDER_COMMANDS_HPP_
