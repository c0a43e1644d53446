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

#include "qwalk/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <unordered_map>
#include <variant>

#include "json.hpp"
#include "qwalk/bridge.hpp"
#include "qwalk/io.hpp"

namespace qwalk::cli {

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json report_to_json(const ValidationReport& report) {
  json out = json::array();
  for (const auto& v : report.violations) {
    json item = {{"kind", v.kind}, {"message", v.message}};
    item["vertex"] = v.vertex ? json(*v.vertex) : json(nullptr);
    out.push_back(std::move(item));
  }
  return out;
}

void print_report(std::ostream& os, const ValidationReport& report) {
  for (const auto& v : report.violations) {
    os << "  " << v.kind;
    if (v.vertex) os << " at vertex " << *v.vertex;
    os << ": " << v.message << '\n';
  }
}

// --- config access ---------------------------------------------------------

const json& require(const json& config, const std::string& key) {
  if (!config.contains(key)) throw ConfigError("missing required key '" + key + "'");
  return config.at(key);
}

std::size_t get_count(const json& config, const std::string& key) {
  const json& v = require(config, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ConfigError("'" + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::size_t get_count_or(const json& config, const std::string& key, std::size_t fallback) {
  return config.contains(key) ? get_count(config, key) : fallback;
}

std::string get_string(const json& config, const std::string& key) {
  const json& v = require(config, key);
  if (!v.is_string()) throw ConfigError("'" + key + "' must be a string");
  return v.get<std::string>();
}

std::string get_string_or(const json& config, const std::string& key, const std::string& fallback) {
  return config.contains(key) ? get_string(config, key) : fallback;
}

/// A number, or a [re, im] pair.
Complex to_complex(const json& v, const std::string& what) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ConfigError(what + " must be a number or a [re, im] pair");
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

std::array<Complex, 4> get_line_amplitudes(const json& config, const std::string& key) {
  const json& v = require(config, key);
  if (!v.is_array() || v.size() != 4) throw ConfigError("'" + key + "' must list 4 amplitudes [a, b, a', b']");
  std::array<Complex, 4> out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = to_complex(v[i], "'" + key + "'[" + std::to_string(i) + "]");
  return out;
}

CMatrix named_coin(const json& value, std::size_t m) {
  if (value.is_string()) {
    const std::string name = value.get<std::string>();
    if (name == "hadamard") {
      if (m != 2) throw ConfigError("the hadamard coin needs degree 2");
      return hadamard();
    }
    if (name == "identity") return CMatrix::Identity(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    if (name == "grover") {
      const auto k = static_cast<Eigen::Index>(m);
      return CMatrix::Constant(k, k, 2.0 / double(m)) - CMatrix::Identity(k, k);
    }
    throw ConfigError("unknown coin '" + name + "' (expected hadamard, identity, grover or a matrix)");
  }
  if (value.is_array() && value.size() == m) {
    const auto k = static_cast<Eigen::Index>(m);
    CMatrix a(k, k);
    for (std::size_t r = 0; r < m; ++r) {
      if (!value[r].is_array() || value[r].size() != m) throw ConfigError("coin matrix must be m x m");
      for (std::size_t c = 0; c < m; ++c) {
        a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = to_complex(value[r][c], "coin entry");
      }
    }
    return a;
  }
  throw ConfigError("'coin' must be a name or an m x m matrix");
}

fs::path resolve(const fs::path& base, const std::string& p) {
  const fs::path path(p);
  return path.is_absolute() ? path : base / path;
}

std::shared_ptr<const LineDigraph> load_space(const json& config, const fs::path& base) {
  const fs::path graph_path = resolve(base, get_string(config, "graph"));
  auto in = open_input(graph_path);
  const RegularDigraph g = read_graph(in, graph_path.string());
  const std::size_t depth = get_count_or(config, "depth", 0);
  return std::make_shared<const LineDigraph>(depth == 0 ? base_line_digraph(g) : iterated_line_digraph(g, depth));
}

std::shared_ptr<const RegularDigraph> graph_of(const std::shared_ptr<const LineDigraph>& space) {
  return {space, &space->graph};
}

// --- walks -------------------------------------------------------------------

struct WalkSetup {
  std::variant<CoinedWalk, SzegedyWalk> walk;
  /// Set for builder walks on the line: the coined form the presets refer to.
  std::optional<CoinedWalk> line_walk;
  std::optional<BasisCorrespondence> correspondence;
  std::string builder;
};

CoinedWalk build_coined(const json& config, const fs::path& base, std::string& builder) {
  if (config.contains("builder")) {
    builder = get_string(config, "builder");
    const std::size_t n = get_count(config, "N");
    if (n < 4) throw ConfigError("builders need N >= 4");
    if (builder == "qwm1") return build_qwm1(n);
    if (builder == "qwm2") return build_qwm2(n);
    if (builder == "transmit-reflect") {
      const std::size_t depth = get_count_or(config, "depth", 1);
      if (depth < 1) throw ConfigError("transmit-reflect needs depth >= 1");
      const CMatrix coin = config.contains("coin") ? named_coin(config.at("coin"), 2) : hadamard();
      return build_transmit_reflect_walk(n, depth, coin);
    }
    throw ConfigError("unknown builder '" + builder + "' (expected qwm1, qwm2 or transmit-reflect)");
  }
  auto space = load_space(config, base);
  const fs::path partition_path = resolve(base, get_string(config, "partition"));
  auto in = open_input(partition_path);
  auto [partition, shift] = read_partition(in, graph_of(space), partition_path.string());
  const CMatrix coin = named_coin(require(config, "coin"), space->graph.degree());
  return CoinedWalk(space, std::move(partition), std::move(shift), CoinOperator::uniform(coin));
}

WalkSetup build_walk(const json& config, const fs::path& base) {
  const std::string model = get_string_or(config, "model", "coined");
  if (model != "coined" && model != "szegedy") throw ConfigError("'model' must be coined or szegedy");
  std::string builder;
  if (model == "coined") {
    CoinedWalk walk = build_coined(config, base, builder);
    WalkSetup setup{walk, std::nullopt, std::nullopt, builder};
    if (builder == "qwm1" || builder == "qwm2") setup.line_walk = walk;
    return setup;
  }
  if (config.contains("builder")) {
    CoinedWalk coined = build_coined(config, base, builder);
    SzegedyForm form = coined_to_szegedy(coined);
    const SzegedyWalk& walk = form.require_reflection_form();
    WalkSetup setup{walk, std::nullopt, form.correspondence, builder};
    if (builder == "qwm1" || builder == "qwm2") setup.line_walk = coined;
    return setup;
  }
  auto space = load_space(config, base);
  const fs::path f_path = resolve(base, get_string(config, "arc_successor"));
  auto f_in = open_input(f_path);
  ArcSuccessor f = read_arc_successor(f_in, graph_of(space), f_path.string());
  const std::size_t n = space->graph.num_vertices();
  const std::size_t m = space->graph.degree();
  if (config.contains("amplitudes")) {
    const fs::path a_path = resolve(base, get_string(config, "amplitudes"));
    auto a_in = open_input(a_path);
    return {SzegedyWalk(space, std::move(f), read_amplitudes(a_in, n, m, a_path.string())), std::nullopt,
            std::nullopt, ""};
  }
  return {SzegedyWalk(space, std::move(f), TransitionAmplitudes::uniform(n, m)), std::nullopt, std::nullopt, ""};
}

// --- initial states ----------------------------------------------------------

std::string coined_label(const CoinedWalk& walk, std::size_t index) {
  return walk.graph().label(index / walk.num_coins()) + "|" + std::to_string(index % walk.num_coins() + 1);
}

std::string arc_label(const RegularDigraph& g, Arc a) { return g.label(g.tail(a)) + "->" + g.label(g.head(a)); }

template <class State, class LabelFn>
State basis_state(const json& entries, std::size_t dim, LabelFn label_of) {
  if (!entries.is_array()) throw ConfigError("'initial.basis' must be a list of [label, re, im] triples");
  State s = State::zero(dim);
  std::unordered_map<std::string, std::size_t> by_label;
  for (std::size_t i = 0; i < dim; ++i) by_label.emplace(label_of(i), i);
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 3 || !e[1].is_number() || !e[2].is_number()) {
      throw ConfigError("basis entries must be [label, re, im]");
    }
    std::size_t index = 0;
    if (e[0].is_number_integer()) {
      index = e[0].get<std::size_t>();
      if (index >= dim) throw ConfigError("basis index " + std::to_string(index) + " out of range");
    } else if (e[0].is_string()) {
      const auto it = by_label.find(e[0].get<std::string>());
      if (it == by_label.end()) throw ConfigError("unknown basis label '" + e[0].get<std::string>() + "'");
      index = it->second;
    } else {
      throw ConfigError("basis label must be an index or a string");
    }
    s[index] += Complex(e[1].get<double>(), e[2].get<double>());
  }
  return s;
}

template <class State>
State random_state(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  State s = State::zero(dim);
  for (std::size_t i = 0; i < dim; ++i) s[i] = Complex(normal(rng), normal(rng));
  s.amplitudes.normalize();
  return s;
}

CoinedState line_preset(const WalkSetup& setup, const json& initial) {
  if (!setup.line_walk) throw ConfigError("the line preset needs builder qwm1 or qwm2");
  const CoinedWalk& walk = *setup.line_walk;
  const std::size_t n = walk.space().base_vertices;
  const std::size_t origin = get_count_or(initial, "origin", n / 2);
  if (origin >= n) throw ConfigError("'initial.origin' must be a vertex of C_N");
  const auto amplitudes = get_line_amplitudes(initial, "amplitudes");
  return setup.builder == "qwm1" ? qwm1_initial_state(walk, origin, amplitudes)
                                 : qwm2_initial_state(walk, origin, amplitudes);
}

template <class State>
void check_normalized(const State& s) {
  if (std::abs(s.amplitudes.squaredNorm() - 1.0) > kStateTolerance) {
    throw ConfigError("initial state has squared norm " + format_double(s.amplitudes.squaredNorm()) +
                      ", expected 1");
  }
}

// --- outputs -------------------------------------------------------------------

void write_distribution_row(std::ostream& os, const std::vector<double>& p) {
  for (std::size_t x = 0; x < p.size(); ++x) os << (x ? "," : "") << format_double(p[x]);
  os << '\n';
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_sidecar(const fs::path& output, const fs::path& config_path, const Options& options, json extra) {
  json meta = {{"config", fs::absolute(config_path).string()},
               {"generated_at", utc_timestamp()},
               {"seed", options.seed},
               {"max_basis", options.max_basis}};
  meta.update(extra);
  std::ofstream side(output.string() + ".meta.json");
  side << meta.dump(2) << '\n';
}

/// Writes data either to the configured file or to `out`.
class DataSink {
 public:
  DataSink(const json& config, const fs::path& base, std::ostream& fallback) : stream_(&fallback) {
    if (config.contains("output_path")) {
      path_ = resolve(base, get_string(config, "output_path"));
      file_.open(*path_, std::ios::binary);
      if (!file_) throw FormatError(path_->string(), 0, "cannot open output file");
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }
  const std::optional<fs::path>& path() const { return path_; }

 private:
  std::optional<fs::path> path_;
  std::ofstream file_;
  std::ostream* stream_;
};

template <class Walk, class State>
json evolve_to_csv(const Walk& walk, State s, std::size_t steps, std::ostream& os, bool check_oracle,
                   const Options& options) {
  const LineDigraph& space = walk.space();
  for (Vertex x = 0; x < space.base_vertices; ++x) os << (x ? "," : "") << x;
  os << '\n';
  const State start = s;
  double worst_sum_error = 0;
  for (std::size_t t = 0;; ++t) {
    const auto p = position_distribution(s, space);
    double total = 0;
    for (double px : p) total += px;
    worst_sum_error = std::max(worst_sum_error, std::abs(total - 1.0));
    write_distribution_row(os, p);
    if (t == steps) break;
    s = walk.step(s);
  }
  json summary = {{"steps", steps}, {"max_probability_sum_error", worst_sum_error}};
  if (check_oracle) {
    const DenseOperator u = dense_operator(walk, options.max_basis);
    CVector dense = start.amplitudes;
    for (std::size_t t = 0; t < steps; ++t) dense = u.matrix * dense;
    summary["oracle"] = {{"unitarity_deviation", u.unitarity_deviation},
                         {"state_difference", (dense - s.amplitudes).cwiseAbs().maxCoeff()}};
  }
  return summary;
}

int run_walk(const json& config, const fs::path& config_path, const Options& options, std::ostream& out,
             std::ostream& err) {
  const fs::path base = config_path.parent_path();
  const std::string format = get_string_or(config, "output", "csv");
  if (format != "csv") throw ConfigError("walk runs write csv output only");
  const std::size_t steps = get_count(config, "steps");
  const bool check_oracle = config.value("check_oracle", false);
  const json initial = require(config, "initial");
  if (!initial.is_object()) throw ConfigError("'initial' must be an object");

  WalkSetup setup = build_walk(config, base);
  DataSink sink(config, base, out);
  json summary;
  if (const auto* coined = std::get_if<CoinedWalk>(&setup.walk)) {
    CoinedState s;
    if (initial.contains("preset")) {
      if (get_string(initial, "preset") != "line") throw ConfigError("unknown preset (expected 'line')");
      s = line_preset(setup, initial);
    } else if (initial.contains("basis")) {
      s = basis_state<CoinedState>(initial.at("basis"), coined->dimension(),
                                   [&](std::size_t i) { return coined_label(*coined, i); });
    } else if (initial.value("random", false)) {
      s = random_state<CoinedState>(coined->dimension(), options.seed);
    } else {
      throw ConfigError("'initial' needs preset, basis or random");
    }
    check_normalized(s);
    summary = evolve_to_csv(*coined, std::move(s), steps, sink.stream(), check_oracle, options);
  } else {
    const auto& walk = std::get<SzegedyWalk>(setup.walk);
    SzegedyState s;
    if (initial.contains("preset")) {
      if (get_string(initial, "preset") != "line") throw ConfigError("unknown preset (expected 'line')");
      s = map_state(line_preset(setup, initial), *setup.correspondence);
    } else if (initial.contains("basis")) {
      s = basis_state<SzegedyState>(initial.at("basis"), walk.dimension(),
                                    [&](std::size_t a) { return arc_label(walk.graph(), a); });
    } else if (initial.value("random", false)) {
      s = random_state<SzegedyState>(walk.dimension(), options.seed);
    } else {
      throw ConfigError("'initial' needs preset, basis or random");
    }
    check_normalized(s);
    summary = evolve_to_csv(walk, std::move(s), steps, sink.stream(), check_oracle, options);
  }
  if (sink.path()) write_sidecar(*sink.path(), config_path, options, {{"summary", summary}});
  if (summary.contains("oracle")) err << "oracle: " << summary["oracle"].dump() << '\n';
  return kOk;
}

int run_equivalence(const json& config, const fs::path& config_path, const Options& options, std::ostream& out,
                    std::ostream& err) {
  const fs::path base = config_path.parent_path();
  const std::size_t n = get_count(config, "N");
  const std::size_t t = get_count(config, "t");
  const auto amplitudes = get_line_amplitudes(config, "amplitudes");
  EquivalenceReport report;
  try {
    report = qwm_equivalence_experiment(n, t, amplitudes);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const bool equivalent = report.worst() <= kStateTolerance;
  json amps = json::array();
  for (const auto& a : amplitudes) amps.push_back(complex_to_json(a));
  const json doc = {{"experiment", "qwm-equivalence"},
                    {"N", n},
                    {"t", t},
                    {"origin", report.origin},
                    {"amplitudes", amps},
                    {"tolerance", kStateTolerance},
                    {"max_abs_diff", report.max_abs_diff},
                    {"total_variation", report.total_variation},
                    {"worst", report.worst()},
                    {"equivalent", equivalent}};
  DataSink sink(config, base, out);
  sink.stream() << doc.dump(2) << '\n';
  if (sink.path()) write_sidecar(*sink.path(), config_path, options, json::object());
  if (!equivalent) {
    err << "QWM1 and QWM2 distributions differ by " << report.worst() << " (tolerance " << kStateTolerance << ")\n";
    return kValidationFailed;
  }
  return kOk;
}

template <class Fn>
int guarded(std::ostream& out, std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const json::exception& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const FormatError& e) {
    err << "file error: " << e.what() << '\n';
    return kFileError;
  } catch (const ValidationError& e) {
    err << "validation failed: " << e.what() << '\n';
    print_report(err, e.report());
    out << json{{"valid", false}, {"violations", report_to_json(e.report())}}.dump() << '\n';
    return kValidationFailed;
  } catch (const CoinNotReflectionForm& e) {
    err << "validation failed: " << e.what() << '\n';
    return kValidationFailed;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const GraphError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const DimensionError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }
}

}  // namespace

int run(const fs::path& config_path, const Options& options, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&] {
    auto in = open_input(config_path);
    json config;
    try {
      config = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ConfigError(config_path.string() + ": " + e.what());
    }
    if (!config.is_object()) throw ConfigError("config must be a JSON object");
    const std::string experiment = get_string_or(config, "experiment", "walk");
    if (experiment == "walk") return run_walk(config, config_path, options, out, err);
    if (experiment == "qwm-equivalence") return run_equivalence(config, config_path, options, out, err);
    throw ConfigError("unknown experiment '" + experiment + "' (expected walk or qwm-equivalence)");
  });
}

int validate(const ValidateInputs& inputs, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&] {
    auto graph_in = open_input(inputs.graph);
    const RegularDigraph g = read_graph(graph_in, inputs.graph.string());
    auto space = std::make_shared<const LineDigraph>(inputs.depth == 0 ? base_line_digraph(g)
                                                                       : iterated_line_digraph(g, inputs.depth));
    auto part_in = open_input(inputs.partition);
    auto [partition, shift] = read_partition(part_in, graph_of(space), inputs.partition.string());

    json doc;
    bool valid = true;
    const ValidationReport partition_report = validate_vertex_partition(partition);
    out << "partition: " << (partition_report.ok() ? "valid" : "invalid") << '\n';
    print_report(out, partition_report);
    doc["partition"] = report_to_json(partition_report);
    valid = valid && partition_report.ok();

    std::optional<bool> dicycle;
    if (partition_report.ok()) {
      const auto per_class = is_dicycle_partition(partition);
      dicycle = std::all_of(per_class.begin(), per_class.end(), [](bool b) { return b; });
      out << "dicycle classes:";
      for (std::size_t k = 0; k < per_class.size(); ++k) {
        out << " C'" << k + 1 << "=" << (per_class[k] ? "yes" : "no");
      }
      out << '\n';
      doc["dicycle_classes"] = per_class;

      const ValidationReport shift_report = validate_coin_shift(shift, partition);
      out << "coin shift: " << (shift_report.ok() ? "valid" : "invalid") << '\n';
      print_report(out, shift_report);
      doc["coin_shift"] = report_to_json(shift_report);
      valid = valid && shift_report.ok();
    }

    if (inputs.arc_successor) {
      auto f_in = open_input(*inputs.arc_successor);
      const ArcSuccessor f = read_arc_successor(f_in, graph_of(space), inputs.arc_successor->string());
      const ValidationReport f_report = validate_arc_successor(f);
      out << "arc successor: " << (f_report.ok() ? "valid" : "invalid");
      if (f_report.ok()) out << " (" << cycles_of(f).size() << " cycles)";
      out << '\n';
      print_report(out, f_report);
      doc["arc_successor"] = report_to_json(f_report);
      valid = valid && f_report.ok();
    }

    doc["valid"] = valid;
    doc["dicycle"] = dicycle ? json(*dicycle) : json(nullptr);
    out << (valid ? "valid" : "invalid");
    if (dicycle) out << "; dicycle: " << (*dicycle ? "yes" : "no");
    out << '\n' << doc.dump() << '\n';
    return valid ? kOk : kValidationFailed;
  });
}

int export_builder(const std::string& builder, std::size_t n, const fs::path& dir, std::ostream& out,
                   std::ostream& err) {
  return guarded(out, err, [&] {
    if (builder != "qwm1" && builder != "qwm2") throw ConfigError("export supports builders qwm1 and qwm2");
    if (n < 4) throw ConfigError("builders need N >= 4");
    const CoinedWalk walk = builder == "qwm1" ? build_qwm1(n) : build_qwm2(n);
    const SzegedyForm form = coined_to_szegedy(walk);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw FormatError(dir.string(), 0, "cannot create directory: " + ec.message());
    auto open = [&](const std::string& name) {
      std::ofstream f(dir / name, std::ios::binary);
      if (!f) throw FormatError((dir / name).string(), 0, "cannot open output file");
      return f;
    };
    {
      auto f = open("graph.txt");
      write_graph(f, walk.graph());
    }
    {
      auto f = open("partition.txt");
      write_partition(f, walk.partition(), walk.shift());
    }
    {
      auto f = open("arc_successor.txt");
      write_arc_successor(f, form.walk.successor());
    }
    if (form.is_reflection_form()) {
      auto f = open("amplitudes.txt");
      write_amplitudes(f, *form.walk.amplitudes());
    }
    out << "wrote " << builder << " on L C_" << n << " to " << dir.string() << '\n';
    return kOk;
  });
}

}  // namespace qwalk::cli
