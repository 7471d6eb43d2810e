// Copyright 2026 The starclean Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 ok, 2 spec error, 3 order bound,
// 4 theorem inconsistency.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Finite *-rings: invariants, cleanness decisions and "
               "statement verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(starclean::kToolVersion));

  std::string spec_path;
  bool text = false;
  bool json = false;
  bool exhaustive = false;
  auto* analyze = app.add_subcommand("analyze", "Report invariants of one ring");
  analyze->add_option("spec", spec_path, "Ring spec file")->required();
  auto* text_flag = analyze->add_flag("--text", text, "Human-readable report");
  analyze->add_flag("--json", json, "JSON report (default)")->excludes(text_flag);
  analyze->add_flag("--exhaustive", exhaustive,
                    "List every failing element per variant");

  std::string dir;
  std::vector<std::string> statements;
  auto* verify = app.add_subcommand("verify", "Verify statements on a corpus");
  verify->add_option("dir", dir, "Directory of ring spec files")->required();
  verify->add_option("--statements", statements, "Statement ids")
      ->delimiter(',');

  std::string witness_spec, element, variant;
  auto* witness = app.add_subcommand("witness", "List clean decompositions");
  witness->add_option("spec", witness_spec, "Ring spec file")->required();
  witness->add_option("element", element, "Element label")->required();
  witness->add_option("variant", variant, "Cleanness variant")->required();

  std::string inv_spec;
  auto* involutions =
      app.add_subcommand("involutions", "Enumerate involutions of a ring");
  involutions->add_option("spec", inv_spec, "Ring spec file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : starclean::cli::kSpecError;
  }

  namespace cli = starclean::cli;
  if (*analyze)
    return cli::cmd_analyze(spec_path, text, exhaustive, std::cout, std::cerr);
  if (*verify) return cli::cmd_verify(dir, statements, std::cout, std::cerr);
  if (*witness)
    return cli::cmd_witness(witness_spec, element, variant, std::cout,
                            std::cerr);
  return cli::cmd_involutions(inv_spec, std::cout, std::cerr);
}
