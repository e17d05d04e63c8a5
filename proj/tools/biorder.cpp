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

// biorder: batch verification of biordered sets of complemented modular
// lattices and regular rings.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 input error.

#include <iostream>

#include "CLI11.hpp"

#include "biorder/commands.hpp"
#include "biorder/error.hpp"
#include "biorder/exec.hpp"

int main(int argc, char** argv) {
  using namespace biorder;

  CLI::App app{"Biordered sets of complemented modular lattices and regular rings"};
  app.require_subcommand(1);

  CommandOptions opts;
  bool           json    = false;
  bool           timings = false;
  std::size_t    cap     = 0;
  std::string    dot;

  app.add_flag("--json", json, "Emit the report as JSON");
  app.add_flag("--timings", timings, "Include wall-clock timings in the report");
  app.add_option("--dot", dot, "Write DOT graphs to this path (biorder)");
  app.add_option("--cap", cap, "Size cap for closures and matrix rings");
  app.add_flag("--dle3", opts.dle3, "Basis search with 1 <= d <= 3 instead of d = 3");
  app.add_option("--parallel", opts.parallel,
                 "Worker threads; 0 selects the serial kernels");
  app.add_option("--limit", opts.limit, "Stop basis search after this many families");

  std::string path, path2, e, f;
  std::size_t N = 0;
  std::string out;

  auto* validate = app.add_subcommand("validate", "Check a lattice or ring file");
  validate->add_option("input", path, "JSON file, catalog:<name> or matrix:<q>:<k>")->required();

  auto* biorder_cmd = app.add_subcommand("biorder", "Build the biordered set of a lattice");
  biorder_cmd->add_option("input", path)->required();

  auto* sandwich = app.add_subcommand("sandwich", "Sandwich set of two idempotents");
  sandwich->add_option("input", path)->required();
  sandwich->add_option("e", e, "first pair as n;v")->required();
  sandwich->add_option("f", f, "second pair as n;v")->required();

  auto* basis = app.add_subcommand("basis-search", "Search families for a homogeneous basis");
  basis->add_option("input", path)->required();
  basis->add_option("N", N, "family size")->required();

  auto* coord = app.add_subcommand("coordinatize", "Match a lattice against a ring");
  coord->add_option("lattice", path)->required();
  coord->add_option("ring", path2)->required();

  auto* idem = app.add_subcommand("ring-idempotents", "List the idempotents of a ring");
  idem->add_option("input", path)->required();

  auto* omega = app.add_subcommand("omega-lattice", "Lattice of principal omega-l ideals");
  omega->add_option("input", path)->required();
  omega->add_option("-o,--output", out, "Write the lattice JSON here");

  auto* axioms = app.add_subcommand("axioms", "Run the biorder axiom suite");
  axioms->add_option("input", path)->required();

  auto* semi = app.add_subcommand("semigroup", "Generate the semigroup of a lattice");
  semi->add_option("input", path)->required();

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& err) {
    int const code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  if (cap != 0) {
    opts.cap = cap;
  }
  if (!dot.empty()) {
    opts.dot_path = dot;
  }
  if (!out.empty()) {
    opts.output_path = out;
  }
  if (opts.parallel > 0) {
    set_thread_count(opts.parallel);
  }

  try {
    RunReport rep;
    if (*validate) {
      rep = cmd_validate(path, opts);
    } else if (*biorder_cmd) {
      rep = cmd_biorder(path, opts);
    } else if (*sandwich) {
      rep = cmd_sandwich(path, e, f, opts);
    } else if (*basis) {
      rep = cmd_basis_search(path, N, opts);
    } else if (*coord) {
      rep = cmd_coordinatize(path, path2, opts);
    } else if (*idem) {
      rep = cmd_ring_idempotents(path, opts);
    } else if (*omega) {
      rep = cmd_omega_lattice(path, opts);
    } else if (*axioms) {
      rep = cmd_axioms(path, opts);
    } else {
      rep = cmd_semigroup(path, opts);
    }
    if (json) {
      std::cout << rep.to_json(timings).dump(2) << '\n';
    } else {
      std::cout << rep.to_text(timings);
    }
    return rep.all_passed() ? 0 : 1;
  } catch (Error const& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
}
