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

#include "qwalk/partition.hpp"

#include <algorithm>
#include <sstream>

namespace qwalk {

namespace {

std::string coin_list(const std::vector<Coin>& coins) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < coins.size(); ++i) {
    if (i) out << ", ";
    out << 'c' << coins[i] + 1;
  }
  out << '}';
  return out.str();
}

}  // namespace

VertexPartition::VertexPartition(std::shared_ptr<const RegularDigraph> graph,
                                 std::vector<std::vector<Vertex>> successors)
    : graph_(std::move(graph)), successors_(std::move(successors)) {
  if (!graph_) throw std::invalid_argument("partition needs a graph");
  if (successors_.size() != graph_->degree()) {
    throw DimensionError("partition has " + std::to_string(successors_.size()) + " classes, graph degree is " +
                         std::to_string(graph_->degree()));
  }
  for (const auto& map : successors_) {
    if (map.size() != graph_->num_vertices()) {
      throw DimensionError("successor map has " + std::to_string(map.size()) + " entries, graph has " +
                           std::to_string(graph_->num_vertices()) + " vertices");
    }
  }
}

Arc VertexPartition::arc_of(Coin k, Vertex v) const {
  const auto a = graph_->find_arc(v, successors_[k][v]);
  if (!a) throw std::logic_error("partition class does not follow a graph arc at vertex " + std::to_string(v));
  return *a;
}

CoinShiftFunction::CoinShiftFunction(std::size_t num_coins, std::vector<std::vector<Coin>> table)
    : num_coins_(num_coins), table_(std::move(table)) {
  for (Vertex v = 0; v < table_.size(); ++v) {
    if (table_[v].size() != num_coins_) {
      throw DimensionError("coin shift row " + std::to_string(v) + " has " + std::to_string(table_[v].size()) +
                           " entries, expected " + std::to_string(num_coins_));
    }
    for (Coin c : table_[v]) {
      if (c >= num_coins_) {
        throw DimensionError("coin shift at vertex " + std::to_string(v) + " outputs coin " + std::to_string(c + 1) +
                             " outside 1.." + std::to_string(num_coins_));
      }
    }
  }
}

CoinShiftFunction CoinShiftFunction::identity(std::size_t num_vertices, std::size_t num_coins) {
  std::vector<Coin> row(num_coins);
  for (Coin c = 0; c < num_coins; ++c) row[c] = c;
  return CoinShiftFunction(num_coins, std::vector<std::vector<Coin>>(num_vertices, row));
}

ArcSuccessor::ArcSuccessor(std::shared_ptr<const RegularDigraph> graph, std::vector<Arc> next)
    : graph_(std::move(graph)), next_(std::move(next)) {
  if (!graph_) throw std::invalid_argument("arc successor needs a graph");
  if (next_.size() != graph_->num_arcs()) {
    throw DimensionError("arc successor has " + std::to_string(next_.size()) + " entries, graph has " +
                         std::to_string(graph_->num_arcs()) + " arcs");
  }
}

ValidationReport validate_vertex_partition(const VertexPartition& p) {
  ValidationReport report;
  const auto& g = p.graph();
  const std::size_t m = p.num_classes();
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::vector<Coin> owner(m, m);  // out-position -> class using it
    for (Coin k = 0; k < m; ++k) {
      const Vertex w = p.successor(k, v);
      const auto arc = g.find_arc(v, w);
      if (!arc) {
        report.add("not-an-arc", v,
                   "class C'" + std::to_string(k + 1) + " sends " + std::to_string(v) + " to " + std::to_string(w) +
                       ", which is not an out-neighbor");
        continue;
      }
      const std::size_t pos = g.out_position(*arc);
      if (owner[pos] != m) {
        report.add("shared-arc", v,
                   "classes C'" + std::to_string(owner[pos] + 1) + " and C'" + std::to_string(k + 1) +
                       " both use arc " + std::to_string(v) + "->" + std::to_string(w));
      } else {
        owner[pos] = k;
      }
    }
    for (std::size_t pos = 0; pos < m; ++pos) {
      if (owner[pos] == m) {
        report.add("uncovered-arc", v,
                   "arc " + std::to_string(v) + "->" + std::to_string(g.out_neighbors(v)[pos]) +
                       " belongs to no class");
      }
    }
  }
  return report;
}

std::vector<bool> is_dicycle_partition(const VertexPartition& p) {
  const auto& g = p.graph();
  std::vector<bool> result(p.num_classes(), true);
  std::vector<std::size_t> in_degree(g.num_vertices());
  for (Coin k = 0; k < p.num_classes(); ++k) {
    std::fill(in_degree.begin(), in_degree.end(), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v) ++in_degree[p.successor(k, v)];
    result[k] = std::all_of(in_degree.begin(), in_degree.end(), [](std::size_t d) { return d == 1; });
  }
  return result;
}

ValidationReport validate_coin_shift(const CoinShiftFunction& gc, const VertexPartition& p) {
  ValidationReport report;
  const auto& g = p.graph();
  const std::size_t m = p.num_classes();
  if (gc.num_vertices() != g.num_vertices() || gc.num_coins() != m) {
    report.add("shape", std::nullopt,
               "coin shift is " + std::to_string(gc.num_vertices()) + "x" + std::to_string(gc.num_coins()) +
                   ", walk needs " + std::to_string(g.num_vertices()) + "x" + std::to_string(m));
    return report;
  }
  std::vector<std::vector<Coin>> arriving(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Coin k = 0; k < m; ++k) arriving[p.successor(k, v)].push_back(gc(v, k));
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::vector<Coin> coins = arriving[v];
    std::sort(coins.begin(), coins.end());
    bool is_full_set = coins.size() == m;
    for (std::size_t i = 0; is_full_set && i < m; ++i) is_full_set = coins[i] == i;
    if (!is_full_set) {
      report.add("coin-multiset", v, "coins arriving at " + p.graph().label(v) + " are " + coin_list(coins) +
                                         ", expected each of c1..c" + std::to_string(m) + " once");
    }
  }
  return report;
}

ValidationReport validate_arc_successor(const ArcSuccessor& f) {
  ValidationReport report;
  const auto& g = f.graph();
  std::vector<Arc> preimage(f.size(), f.size());
  for (Arc a = 0; a < f.size(); ++a) {
    const Arc b = f(a);
    if (b >= f.size()) {
      report.add("out-of-range", g.tail(a), "f(" + std::to_string(a) + ") = " + std::to_string(b) + " is not an arc");
      continue;
    }
    if (preimage[b] != f.size()) {
      report.add("not-injective", g.tail(b),
                 "arcs " + std::to_string(preimage[b]) + " and " + std::to_string(a) + " both map to " +
                     std::to_string(b));
    } else {
      preimage[b] = a;
    }
    if (g.head(a) != g.tail(b)) {
      report.add("chaining", g.head(a),
                 "f(" + std::to_string(g.tail(a)) + "->" + std::to_string(g.head(a)) + ") = " +
                     std::to_string(g.tail(b)) + "->" + std::to_string(g.head(b)) + " does not start at the head");
    }
  }
  return report;
}

std::vector<std::vector<Arc>> cycles_of(const ArcSuccessor& f) {
  std::vector<std::vector<Arc>> cycles;
  std::vector<bool> seen(f.size(), false);
  for (Arc start = 0; start < f.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Arc> cycle;
    for (Arc a = start; !seen[a]; a = f(a)) {
      seen[a] = true;
      cycle.push_back(a);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

ArcSuccessor induced_arc_successor(const VertexPartition& p, const CoinShiftFunction& gc) {
  const auto& g = p.graph();
  std::vector<Arc> next(g.num_arcs());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Coin j = 0; j < p.num_classes(); ++j) {
      const Vertex w = p.successor(j, v);
      next[p.arc_of(j, v)] = p.arc_of(gc(v, j), w);
    }
  }
  return ArcSuccessor(p.graph_ptr(), std::move(next));
}

}  // namespace qwalk
