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

// Plain-text file formats. All formats skip blank lines and lines starting
// with '#'; everything else is whitespace-separated tokens.
//
//   graph:          "n m", then n lines; line v lists the m out-neighbors
//                   of v. Listed order defines arc ids (arc v*m + k).
//   partition:      "n m", then n lines of 2m integers; line v holds the
//                   successors f'_{C'_1}(v) .. f'_{C'_m}(v) followed by the
//                   coin shift outputs gc(v, c_1) .. gc(v, c_m), coins 1-based.
//   arc successor:  "n_arcs", then n_arcs lines, line a holding f(a).
//   amplitudes:     "n m", then n lines of 2m reals; line v holds
//                   re im pairs of alpha_vw in out-arc order.

#ifndef QWALK_IO_HPP
#define QWALK_IO_HPP

#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "qwalk/partition.hpp"
#include "qwalk/szegedy_walk.hpp"

namespace qwalk {

/// Malformed text input. line() is 1-based; 0 when the whole file is at fault.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& source, std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

RegularDigraph read_graph(std::istream& in, const std::string& source = "<graph>");
void write_graph(std::ostream& out, const RegularDigraph& g);

std::pair<VertexPartition, CoinShiftFunction> read_partition(std::istream& in,
                                                             std::shared_ptr<const RegularDigraph> graph,
                                                             const std::string& source = "<partition>");
void write_partition(std::ostream& out, const VertexPartition& p, const CoinShiftFunction& gc);

ArcSuccessor read_arc_successor(std::istream& in, std::shared_ptr<const RegularDigraph> graph,
                                const std::string& source = "<arc successor>");
void write_arc_successor(std::ostream& out, const ArcSuccessor& f);

TransitionAmplitudes read_amplitudes(std::istream& in, std::size_t num_vertices, std::size_t degree,
                                     const std::string& source = "<amplitudes>");
void write_amplitudes(std::ostream& out, const TransitionAmplitudes& amplitudes);

/// Opens path for reading; FormatError with line 0 if it cannot be opened.
std::ifstream open_input(const std::filesystem::path& path);

/// Shortest decimal form that reads back to the same double.
std::string format_double(double x);

}  // namespace qwalk

#endif  // QWALK_IO_HPP
