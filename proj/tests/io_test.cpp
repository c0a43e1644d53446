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

#include "qwalk/io.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <sstream>

#include "qwalk/coined_walk.hpp"
#include "test_support.hpp"

using namespace qwalk;
using qwalk::fixtures::Rng;

namespace {

std::size_t error_line(const std::function<void()>& f) {
  try {
    f();
  } catch (const FormatError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no FormatError";
  return ~std::size_t{0};
}

}  // namespace

TEST(io, graph_roundtrip_on_random_graphs) {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const RegularDigraph g = fixtures::random_regular_digraph(4 + trial % 5, 1 + trial % 3, rng);
    std::stringstream ss;
    write_graph(ss, g);
    EXPECT_EQ(read_graph(ss), g);
  }
}

TEST(io, graph_comments_and_blank_lines) {
  std::istringstream in("# triangle\n3 1\n\n1\n# middle\n2\n0\n");
  EXPECT_EQ(read_graph(in), directed_cycle(3));
}

TEST(io, truncated_graph_reports_line) {
  EXPECT_EQ(error_line([] {
              std::istringstream in("4 2\n1 3\n2 0\n");
              read_graph(in);
            }),
            4u);
}

TEST(io, malformed_graph_tokens) {
  EXPECT_EQ(error_line([] {
              std::istringstream in("3 1\n1\nx\n0\n");
              read_graph(in);
            }),
            3u);
  EXPECT_EQ(error_line([] {
              std::istringstream in("3 1\n1 2\n2\n0\n");
              read_graph(in);
            }),
            2u);
  EXPECT_EQ(error_line([] {
              std::istringstream in("");
              read_graph(in);
            }),
            1u);
  EXPECT_THROW(
      [] {
        std::istringstream in("2 1\n0\n1\n");
        read_graph(in);
      }(),
      FormatError);
}

TEST(io, partition_roundtrip) {
  const CoinedWalk w = build_qwm1(6);
  std::stringstream ss;
  write_partition(ss, w.partition(), w.shift());
  const auto [p, gc] = read_partition(ss, w.partition().graph_ptr());
  EXPECT_EQ(p, w.partition());
  EXPECT_EQ(gc.table(), w.shift().table());
}

TEST(io, partition_coin_out_of_range) {
  auto g = std::make_shared<const RegularDigraph>(directed_cycle(3));
  std::istringstream ok("3 1\n1 1\n2 1\n0 1\n");
  EXPECT_NO_THROW(read_partition(ok, g));
  EXPECT_EQ(error_line([&] {
              std::istringstream in("3 1\n1 1\n2 2\n0 1\n");
              read_partition(in, g);
            }),
            3u);
  EXPECT_EQ(error_line([&] {
              std::istringstream in("3 1\n1 1\n2 0\n0 1\n");
              read_partition(in, g);
            }),
            3u);
  EXPECT_EQ(error_line([&] {
              std::istringstream in("4 1\n1 1\n2 1\n0 1\n");
              read_partition(in, g);
            }),
            1u);
}

TEST(io, arc_successor_roundtrip) {
  auto space = std::make_shared<const LineDigraph>(iterated_line_digraph(cycle_graph(5), 1));
  const ArcSuccessor f = induced_arc_successor(transmit_reflect_partition(space), CoinShiftFunction::identity(10, 2));
  std::stringstream ss;
  write_arc_successor(ss, f);
  EXPECT_EQ(read_arc_successor(ss, fixtures::graph_ptr(space)).next(), f.next());
  EXPECT_EQ(error_line([&] {
              std::istringstream in("20\n1\n2\n");
              read_arc_successor(in, fixtures::graph_ptr(space));
            }),
            4u);
}

TEST(io, amplitudes_roundtrip_is_exact) {
  Rng rng(32);
  const auto a = fixtures::random_amplitudes(7, 3, rng);
  std::stringstream ss;
  write_amplitudes(ss, a);
  const auto b = read_amplitudes(ss, 7, 3);
  for (Vertex v = 0; v < 7; ++v) EXPECT_EQ(a.at(v), b.at(v));
}

TEST(io, amplitudes_must_be_normalized) {
  std::istringstream in("1 2\n0.9 0 0 0\n");
  EXPECT_THROW(read_amplitudes(in, 1, 2), std::invalid_argument);
  std::istringstream wrong("2 2\n1 0 0 0\n1 0 0 0\n");
  EXPECT_EQ(error_line([&] { read_amplitudes(wrong, 1, 2); }), 1u);
}

TEST(io, format_double_round_trips) {
  for (double x : {0.0, 1.0, 0.1, 1.0 / 3.0, 2.5e-17, -7.25}) {
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
}

TEST(io, missing_file) {
  try {
    open_input("/nonexistent/graph.txt");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 0u);
  }
}
