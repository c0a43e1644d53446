// Copyright 2026 The qwalk Authors
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

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qwalk/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"qwalk: coined and Szegedy quantum walks with memory on regular graphs"};
  app.require_subcommand(1);

  qwalk::cli::Options options;
  app.add_option("--seed", options.seed, "Seed for random initial states");
  app.add_option("--max-basis", options.max_basis, "Largest basis for dense oracle operators");

  std::string config;
  auto* run = app.add_subcommand("run", "Run the experiment described by a JSON config");
  run->add_option("config", config, "Config file")->required();

  std::vector<std::string> files;
  std::size_t depth = 0;
  auto* validate = app.add_subcommand("validate", "Check partition, coin shift and arc successor files");
  validate->add_option("files", files, "graph partition [arc-successor]")->required()->expected(2, 3);
  validate->add_option("--depth", depth, "Partition refers to L^depth of the graph file");

  std::string builder;
  std::size_t n = 8;
  std::string dir;
  auto* exporter = app.add_subcommand("export", "Write the files describing a builder walk");
  exporter->add_option("builder", builder, "qwm1 or qwm2")->required();
  exporter->add_option("--n", n, "Cycle length N")->capture_default_str();
  exporter->add_option("--dir", dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qwalk::cli::kUsage;
  }

  if (*run) return qwalk::cli::run(config, options, std::cout, std::cerr);
  if (*validate) {
    qwalk::cli::ValidateInputs inputs{files[0], files[1], std::nullopt, depth};
    if (files.size() == 3) inputs.arc_successor = files[2];
    return qwalk::cli::validate(inputs, std::cout, std::cerr);
  }
  return qwalk::cli::export_builder(builder, n, dir, std::cout, std::cerr);
}
