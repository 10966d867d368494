// Copyright 2026 The aont-toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// aont: verify, analyze, randomize and search all-or-nothing transforms.

#include <iostream>

#include "CLI11.hpp"
#include "aont/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for all-or-nothing transforms"};
  app.require_subcommand(1);

  aont::cli::VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Check an array file against the combinatorial AONT definition");
  verify_cmd->add_option("array-file", verify.array_file)->required();
  verify_cmd->add_option("--t", verify.t, "Override the t from the file header");
  verify_cmd->add_flag("--json", verify.json, "Machine-readable report");
  verify_cmd->add_flag("--exhaustive", verify.exhaustive,
                       "Record every violating subset and tuple");

  aont::cli::AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand(
      "analyze", "Perfect/weak security and entropies under a distribution");
  analyze_cmd->add_option("array-file", analyze.array_file)->required();
  analyze_cmd->add_option("--dist", analyze.dist_file, "Distribution file")
      ->required();
  analyze_cmd->add_option("--t", analyze.t, "Override the t from the file header");
  analyze_cmd->add_flag("--json", analyze.json, "Machine-readable report");

  aont::cli::RandomizeOptions randomize;
  auto* randomize_cmd = app.add_subcommand(
      "randomize", "Encode with the randomized AONT or verify its security");
  randomize_cmd->add_option("array-file", randomize.array_file)->required();
  randomize_cmd
      ->add_option("--designate", randomize.designate,
                   "Designated input positions (1-based)")
      ->required();
  auto* input_opt = randomize_cmd->add_option(
      "--input", randomize.input, "Designated input symbols");
  randomize_cmd->add_option("--seed", randomize.seed, "Generator seed");
  auto* verify_flag = randomize_cmd->add_flag(
      "--verify", randomize.verify, "Verify perfect security of the designated inputs");
  randomize_cmd->add_option("--dist", randomize.dist_file,
                            "Distribution over the designated t-tuples");
  randomize_cmd->add_flag("--json", randomize.json, "Machine-readable report");
  input_opt->excludes(verify_flag);

  aont::cli::SearchOptions search;
  std::optional<std::string> out_dir;
  auto* search_cmd =
      app.add_subcommand("search", "Enumerate all (t,s,v)-AONTs");
  search_cmd->add_option("--t", search.t)->required();
  search_cmd->add_option("--s", search.s)->required();
  search_cmd->add_option("--v", search.v)->required();
  auto* count_flag = search_cmd->add_flag("--count-only", search.count_only);
  search_cmd->add_option("--limit", search.limit, "Maximum number of files written");
  auto* out_opt =
      search_cmd->add_option("--out", out_dir, "Directory for found AONTs");
  search_cmd->add_flag("--canonical", search.canonical,
                       "Fix phi(first input) to the first output tuple");
  search_cmd->add_flag("--json", search.json, "Machine-readable report");
  count_flag->excludes(out_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return aont::cli::kExitUsage;
  }

  if (*verify_cmd) return aont::cli::run_verify(verify, std::cout, std::cerr);
  if (*analyze_cmd) return aont::cli::run_analyze(analyze, std::cout, std::cerr);
  if (*randomize_cmd) {
    return aont::cli::run_randomize(randomize, std::cout, std::cerr);
  }
  if (out_dir) search.out_dir = *out_dir;
  return aont::cli::run_search(search, std::cout, std::cerr);
}
