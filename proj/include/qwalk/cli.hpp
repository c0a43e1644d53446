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

#ifndef QWALK_CLI_HPP
#define QWALK_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "qwalk/analysis.hpp"

namespace qwalk::cli {

/// Process exit codes. Documented in README.md.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kConfigError = 2,
  kFileError = 3,
  kValidationFailed = 4,
  kResourceLimit = 5,
};

struct Options {
  std::uint64_t seed = 0;
  std::size_t max_basis = kDefaultDenseCap;
};

/// Executes the experiment described by a JSON config file. Data goes to
/// the configured output_path (or `out` when none is set); diagnostics go
/// to `err`.
int run(const std::filesystem::path& config_path, const Options& options, std::ostream& out, std::ostream& err);

struct ValidateInputs {
  std::filesystem::path graph;
  std::filesystem::path partition;
  std::optional<std::filesystem::path> arc_successor;
  /// The graph file holds G and the partition refers to L^depth G.
  std::size_t depth = 0;
};

/// Runs every partition validator and prints a human-readable summary
/// followed by one JSON line.
int validate(const ValidateInputs& inputs, std::ostream& out, std::ostream& err);

/// Writes the walked graph, partition/coin-shift, arc successor and
/// amplitude files of a builder walk ("qwm1" or "qwm2") into dir.
int export_builder(const std::string& builder, std::size_t n, const std::filesystem::path& dir, std::ostream& out,
                   std::ostream& err);

}  // namespace qwalk::cli

#endif  // QWALK_CLI_HPP
