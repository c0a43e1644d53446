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

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace qwalk {

FormatError::FormatError(const std::string& source, std::size_t line, const std::string& message)
    : std::runtime_error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + message),
      line_(line) {}

namespace {

/// Yields the token lists of meaningful lines, tracking line numbers.
class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  /// Next non-blank, non-comment line; throws FormatError at end of input.
  std::vector<std::string> next(const std::string& expecting) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      std::istringstream tokens(line);
      std::vector<std::string> out;
      for (std::string t; tokens >> t;) out.push_back(t);
      return out;
    }
    throw FormatError(source_, line_no_ + 1, "unexpected end of file, expected " + expecting);
  }

  void expect_end() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      fail("unexpected trailing content");
    }
  }

  std::size_t to_count(const std::string& token) const {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) fail("'" + token + "' is not a non-negative integer");
    return value;
  }

  double to_real(const std::string& token) const {
    double value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) fail("'" + token + "' is not a number");
    return value;
  }

  void expect_size(const std::vector<std::string>& tokens, std::size_t n, const std::string& what) const {
    if (tokens.size() != n) {
      fail("expected " + std::to_string(n) + " " + what + ", found " + std::to_string(tokens.size()));
    }
  }

  [[noreturn]] void fail(const std::string& message) const { throw FormatError(source_, line_no_, message); }

  std::pair<std::size_t, std::size_t> header_pair(const std::string& what) {
    const auto tokens = next("header \"" + what + "\"");
    expect_size(tokens, 2, "header fields (" + what + ")");
    return {to_count(tokens[0]), to_count(tokens[1])};
  }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t line_no_ = 0;
};

}  // namespace

RegularDigraph read_graph(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  const auto [n, m] = reader.header_pair("n m");
  if (n == 0 || m == 0) reader.fail("graph needs n >= 1 and m >= 1");
  std::vector<std::vector<Vertex>> out(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto tokens = reader.next("out-neighbors of vertex " + std::to_string(v));
    reader.expect_size(tokens, m, "out-neighbors for vertex " + std::to_string(v));
    for (const auto& t : tokens) out[v].push_back(reader.to_count(t));
  }
  reader.expect_end();
  try {
    return RegularDigraph::from_adjacency(out);
  } catch (const GraphError& e) {
    throw FormatError(source, 0, e.what());
  }
}

void write_graph(std::ostream& out, const RegularDigraph& g) {
  out << g.num_vertices() << ' ' << g.degree() << '\n';
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto row = g.out_neighbors(v);
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k];
    out << '\n';
  }
}

std::pair<VertexPartition, CoinShiftFunction> read_partition(std::istream& in,
                                                             std::shared_ptr<const RegularDigraph> graph,
                                                             const std::string& source) {
  LineReader reader(in, source);
  const auto [n, m] = reader.header_pair("n m");
  if (n != graph->num_vertices() || m != graph->degree()) {
    reader.fail("partition is for n=" + std::to_string(n) + ", m=" + std::to_string(m) + " but the graph has n=" +
                std::to_string(graph->num_vertices()) + ", m=" + std::to_string(graph->degree()));
  }
  std::vector<std::vector<Vertex>> successors(m, std::vector<Vertex>(n));
  std::vector<std::vector<Coin>> table(n, std::vector<Coin>(m));
  for (Vertex v = 0; v < n; ++v) {
    const auto tokens = reader.next("partition line for vertex " + std::to_string(v));
    reader.expect_size(tokens, 2 * m, "entries (m successors then m coins) for vertex " + std::to_string(v));
    for (std::size_t k = 0; k < m; ++k) {
      const Vertex w = reader.to_count(tokens[k]);
      if (w >= n) reader.fail("successor " + std::to_string(w) + " is not a vertex");
      successors[k][v] = w;
      const std::size_t coin = reader.to_count(tokens[m + k]);
      if (coin < 1 || coin > m) reader.fail("coin " + std::to_string(coin) + " outside 1.." + std::to_string(m));
      table[v][k] = coin - 1;
    }
  }
  reader.expect_end();
  return {VertexPartition(std::move(graph), std::move(successors)), CoinShiftFunction(m, std::move(table))};
}

void write_partition(std::ostream& out, const VertexPartition& p, const CoinShiftFunction& gc) {
  const std::size_t n = p.graph().num_vertices();
  const std::size_t m = p.num_classes();
  out << "# successors C'1..C'" << m << " | coin shift gc(v, c1..c" << m << ")\n";
  out << n << ' ' << m << '\n';
  for (Vertex v = 0; v < n; ++v) {
    for (Coin k = 0; k < m; ++k) out << (k ? " " : "") << p.successor(k, v);
    out << "  ";
    for (Coin k = 0; k < m; ++k) out << (k ? " " : "") << gc(v, k) + 1;
    out << '\n';
  }
}

ArcSuccessor read_arc_successor(std::istream& in, std::shared_ptr<const RegularDigraph> graph,
                                const std::string& source) {
  LineReader reader(in, source);
  const auto header = reader.next("header \"n_arcs\"");
  reader.expect_size(header, 1, "header fields (n_arcs)");
  const std::size_t arcs = reader.to_count(header[0]);
  if (arcs != graph->num_arcs()) {
    reader.fail("file lists " + std::to_string(arcs) + " arcs, graph has " + std::to_string(graph->num_arcs()));
  }
  std::vector<Arc> next(arcs);
  for (Arc a = 0; a < arcs; ++a) {
    const auto tokens = reader.next("successor of arc " + std::to_string(a));
    reader.expect_size(tokens, 1, "entry");
    next[a] = reader.to_count(tokens[0]);
    if (next[a] >= arcs) reader.fail("arc " + std::to_string(next[a]) + " out of range");
  }
  reader.expect_end();
  return ArcSuccessor(std::move(graph), std::move(next));
}

void write_arc_successor(std::ostream& out, const ArcSuccessor& f) {
  out << f.size() << '\n';
  for (Arc a = 0; a < f.size(); ++a) out << f(a) << '\n';
}

TransitionAmplitudes read_amplitudes(std::istream& in, std::size_t num_vertices, std::size_t degree,
                                     const std::string& source) {
  LineReader reader(in, source);
  const auto [n, m] = reader.header_pair("n m");
  if (n != num_vertices || m != degree) {
    reader.fail("amplitudes are for n=" + std::to_string(n) + ", m=" + std::to_string(m) + " but the graph has n=" +
                std::to_string(num_vertices) + ", m=" + std::to_string(degree));
  }
  std::vector<CVector> rows;
  rows.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto tokens = reader.next("amplitudes of vertex " + std::to_string(v));
    reader.expect_size(tokens, 2 * m, "reals (re im per out-arc) for vertex " + std::to_string(v));
    CVector row(static_cast<Eigen::Index>(m));
    for (std::size_t k = 0; k < m; ++k) {
      row(static_cast<Eigen::Index>(k)) = Complex(reader.to_real(tokens[2 * k]), reader.to_real(tokens[2 * k + 1]));
    }
    rows.push_back(std::move(row));
  }
  reader.expect_end();
  return TransitionAmplitudes::from_complex(std::move(rows));
}

void write_amplitudes(std::ostream& out, const TransitionAmplitudes& amplitudes) {
  out << amplitudes.num_vertices() << ' ' << amplitudes.degree() << '\n';
  for (Vertex v = 0; v < amplitudes.num_vertices(); ++v) {
    const CVector& row = amplitudes.at(v);
    for (Eigen::Index k = 0; k < row.size(); ++k) {
      out << (k ? " " : "") << format_double(row(k).real()) << ' ' << format_double(row(k).imag());
    }
    out << '\n';
  }
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path.string(), 0, "cannot open file");
  return in;
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) return std::to_string(x);
  return std::string(buf, ptr);
}

}  // namespace qwalk
