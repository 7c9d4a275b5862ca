// Copyright 2026 The comaxdim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "comaxdim/comaximal.hpp"
#include "comaxdim/graph.hpp"
#include "comaxdim/solver.hpp"
#include "comaxdim/theorems.hpp"

namespace comaxdim::cli {
namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr int kSchemaVersion = 1;

struct CapFlags {
  std::uint64_t enum_cap = 0;
  std::size_t solve_cap = 0;
  std::size_t brute_cap = 0;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--enum-cap", enum_cap, "Maximum number of ideals to enumerate");
    cmd.add_option("--solve-cap,--cap", solve_cap, "Maximum order for the exact independent-set solver");
    cmd.add_option("--brute-cap", brute_cap, "Maximum order for the brute-force oracles");
  }

  // Environment first, explicit flags win.
  [[nodiscard]] Limits resolve() const {
    Limits limits = Limits::from_environment();
    if (enum_cap != 0) limits.enum_cap = enum_cap;
    if (solve_cap != 0) limits.solve_cap = solve_cap;
    if (brute_cap != 0) limits.brute_cap = brute_cap;
    return limits;
  }
};

class Stopwatch {
 public:
  double lap_ms() {
    const auto now = Clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  Clock::time_point last_ = Clock::now();
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error(ErrorKind::kIo, "failed writing '" + path + "'");
}

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

json labels_of(const Graph& g, const std::vector<Vertex>& vertices) {
  json out = json::array();
  for (Vertex v : vertices) out.push_back(g.label(v));
  return out;
}

json distance_json(DistanceMatrix::Distance d) {
  if (d == DistanceMatrix::kInfinity) return "inf";
  return d;
}

json checks_json(const std::vector<TheoremCheck>& checks) {
  json out = json::array();
  for (const auto& c : checks) {
    json evidence = json::object();
    for (const auto& [key, value] : c.evidence) evidence[key] = value;
    out.push_back({{"id", c.id},
                   {"status", std::string(to_string(c.status))},
                   {"expected", c.expected},
                   {"computed", c.computed},
                   {"evidence", std::move(evidence)}});
  }
  return out;
}

void print_checks(std::ostream& out, const std::vector<TheoremCheck>& checks) {
  for (const auto& c : checks) {
    out << "  " << std::left << std::setw(15) << to_string(c.status) << std::setw(40) << c.id;
    if (c.status == CheckStatus::kNotApplicable) {
      const auto reason = std::find_if(c.evidence.begin(), c.evidence.end(),
                                       [](const auto& kv) { return kv.first == "reason"; });
      if (reason != c.evidence.end()) out << reason->second;
    } else {
      out << "expected " << c.expected << " | computed " << c.computed;
    }
    out << '\n';
  }
}

const Graph& select_graph(const RingAnalysis& a, const std::string& what) {
  if (what == "gamma") return a.graphs.gamma.graph;
  if (what == "srg") return a.srg.srg;
  if (what == "gamma-star") return a.graphs.gamma_star.graph;
  if (what == "gamma-star-star") return a.graphs.gamma_star_star.graph;
  if (what == "gamma-prime") return a.graphs.gamma_prime.graph;
  throw Error(ErrorKind::kInvalidArgument, "unknown graph '" + what + "'");
}

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
  std::string ring;
  std::string json_path;
  std::string export_format;
  std::string what = "gamma";
  std::string export_path;
  bool oracle = false;
  bool no_timings = false;
  CapFlags caps;
};

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err) {
  const Limits limits = args.caps.resolve();
  Stopwatch watch;
  json timings = json::object();

  std::vector<std::string> warnings;
  const RingSpec spec = parse_ring_spec(args.ring, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  const bool exporting = !args.export_format.empty();
  const GraphFormat export_format = exporting ? parse_graph_format(args.export_format) : GraphFormat::kJson;

  RingAnalysis analysis = analyze_ring(spec, limits);
  timings["pipeline"] = watch.lap_ms();
  if (args.oracle) {
    if (!run_oracle(analysis, limits)) {
      throw Error(ErrorKind::kCapExceeded, "oracle requested but |V| = " +
                                               std::to_string(analysis.graphs.gamma.graph.order()) +
                                               " exceeds brute-force cap " + std::to_string(limits.brute_cap));
    }
    timings["oracle"] = watch.lap_ms();
  }
  const auto checks = verify_all(analysis, limits);
  timings["checks"] = watch.lap_ms();

  const Graph& gamma = analysis.graphs.gamma.graph;
  const Graph& srg = analysis.srg.srg;
  const std::size_t maximal = enumerate_maximal_ideals(spec).size();
  const bool ok = all_passed(checks);

  out << "ring       " << args.ring << "  " << spec.chain_vector() << '\n'
      << "regime     " << to_string(analysis.regime) << '\n'
      << "ideals     " << spec.ideal_count() << '\n'
      << "vertices   " << gamma.order() << "  (edges " << gamma.edge_count() << ", diameter "
      << distance_to_string(analysis.gamma_diameter) << ")\n"
      << "maximal    " << maximal << '\n'
      << "boundary   " << analysis.srg.boundary.size() << "  (Γ_SR edges " << srg.edge_count() << ")\n"
      << "alpha/beta " << analysis.cover.alpha << " / " << analysis.cover.beta << '\n'
      << "sdim       " << analysis.sdim.sdim << " (" << to_string(analysis.sdim.method) << "), predicted "
      << predicted_sdim(spec) << '\n';
  if (analysis.oracle) {
    out << "oracle     " << analysis.oracle->sdim << " (" << to_string(analysis.oracle->method) << ")\n";
  }
  out << "checks\n";
  print_checks(out, checks);
  out << (ok ? "all checks passed\n" : "SOME CHECKS FAILED\n");

  if (exporting) {
    const std::string text = export_graph(select_graph(analysis, args.what), export_format);
    if (args.export_path.empty()) {
      out << text;
    } else {
      write_file(args.export_path, text);
    }
  }

  if (!args.json_path.empty()) {
    json report;
    report["schema"] = kSchemaVersion;
    report["command"] = "analyze";
    report["ring"] = {{"input", args.ring},
                      {"canonical", spec.canonical()},
                      {"chain_lengths", spec.chain_lengths()},
                      {"nonfields", spec.nonfield_count()},
                      {"fields", spec.field_count()}};
    report["regime"] = std::string(to_string(analysis.regime));
    report["counts"] = {{"ideals", spec.ideal_count()},
                        {"vertices", gamma.order()},
                        {"edges", gamma.edge_count()},
                        {"maximal_ideals", maximal},
                        {"boundary", analysis.srg.boundary.size()}};
    report["diameters"] = {{"gamma", distance_json(analysis.gamma_diameter)},
                           {"srg", srg.order() == 0 ? json(nullptr) : distance_json(diameter(srg))}};
    report["srg"] = {{"order", srg.order()},
                     {"edges", srg.edge_count()},
                     {"alpha", analysis.cover.alpha},
                     {"beta", analysis.cover.beta},
                     {"independent_witness", labels_of(srg, analysis.cover.independent_witness)}};
    report["sdim"] = {{"value", analysis.sdim.sdim},
                      {"method", std::string(to_string(analysis.sdim.method))},
                      {"predicted", predicted_sdim(spec)},
                      {"witness", labels_of(gamma, analysis.sdim.witness)}};
    report["oracle"] = analysis.oracle ? json{{"value", analysis.oracle->sdim},
                                              {"method", std::string(to_string(analysis.oracle->method))},
                                              {"witness", labels_of(gamma, analysis.oracle->witness)}}
                                       : json(nullptr);
    report["checks"] = checks_json(checks);
    report["passed"] = ok;
    report["warnings"] = warnings;
    if (!args.no_timings) report["timings_ms"] = timings;
    write_file(args.json_path, report.dump(2) + "\n");
  }
  return ok ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------

struct SweepArgs {
  std::string family;
  std::string json_path;
  bool oracle = false;
  bool no_timings = false;
  CapFlags caps;
};

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  const auto family = parse_family(args.family);
  if (family.empty()) {
    err << "error: family '" << args.family << "' contains no ring specs\n";
    return kUsage;
  }
  SweepOptions options;
  options.limits = args.caps.resolve();
  options.run_oracle = args.oracle;
  Stopwatch watch;
  const auto entries = sweep(family, options);
  const double elapsed = watch.lap_ms();

  bool ok = true;
  out << std::left << std::setw(24) << "ring" << std::setw(10) << "|V|" << std::setw(12) << "predicted"
      << std::setw(12) << "computed" << std::setw(10) << "oracle" << "status\n";
  for (const auto& e : entries) {
    ok = ok && e.passed();
    out << std::left << std::setw(24) << e.spec.canonical() << std::setw(10) << e.vertex_count << std::setw(12)
        << e.predicted_sdim << std::setw(12) << (e.computed_sdim ? std::to_string(*e.computed_sdim) : "-")
        << std::setw(10) << (e.oracle_sdim ? std::to_string(*e.oracle_sdim) : "-")
        << (e.error.empty() ? (e.passed() ? "pass" : "FAIL") : "ERROR") << '\n';
    if (!e.error.empty()) err << e.spec.canonical() << ": " << e.error << '\n';
    for (const auto& c : e.checks) {
      if (c.status == CheckStatus::kFail) {
        err << e.spec.canonical() << ": " << c.id << " expected " << c.expected << ", computed " << c.computed
            << '\n';
      }
    }
  }
  out << (ok ? "all rings passed\n" : "SOME RINGS FAILED\n");

  if (!args.json_path.empty()) {
    json report;
    report["schema"] = kSchemaVersion;
    report["command"] = "sweep";
    report["family"] = args.family;
    json rows = json::array();
    for (const auto& e : entries) {
      rows.push_back({{"ring", e.spec.canonical()},
                      {"chain_lengths", e.spec.chain_lengths()},
                      {"vertices", e.vertex_count},
                      {"predicted_sdim", e.predicted_sdim},
                      {"computed_sdim", e.computed_sdim ? json(*e.computed_sdim) : json(nullptr)},
                      {"oracle_sdim", e.oracle_sdim ? json(*e.oracle_sdim) : json(nullptr)},
                      {"passed", e.passed()},
                      {"error", e.error.empty() ? json(nullptr) : json(e.error)},
                      {"checks", checks_json(e.checks)}});
    }
    report["rings"] = std::move(rows);
    report["passed"] = ok;
    if (!args.no_timings) report["timings_ms"] = {{"total", elapsed}};
    write_file(args.json_path, report.dump(2) + "\n");
  }
  return ok ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------

struct GraphArgs {
  std::string in;
  std::string json_path;
  bool oracle = false;
  bool no_timings = false;
  CapFlags caps;
};

Graph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  const bool json_input = path.ends_with(".json") || trim(text).starts_with("{");
  return json_input ? import_json(text) : import_graph6(text);
}

int cmd_graph(const GraphArgs& args, std::ostream& out, std::ostream& /*err*/) {
  const Limits limits = args.caps.resolve();
  Stopwatch watch;
  json timings = json::object();
  const Graph g = load_graph(args.in);
  if (!g.is_connected()) throw Error(ErrorKind::kDisconnected, "input graph '" + args.in + "' is not connected");

  const SrgSdim pipeline = sdim_via_srg_detailed(g, limits);
  timings["pipeline"] = watch.lap_ms();
  std::optional<SdimResult> oracle;
  if (args.oracle) {
    oracle = sdim_bruteforce(g, limits);
    timings["oracle"] = watch.lap_ms();
  }
  const bool witness_ok = is_strong_resolving_set(g, pipeline.result.witness);
  const bool ok = witness_ok && (!oracle || oracle->sdim == pipeline.result.sdim);

  out << "vertices   " << g.order() << "  (edges " << g.edge_count() << ", diameter "
      << distance_to_string(g.order() == 0 ? 0 : diameter(g)) << ")\n"
      << "boundary   " << pipeline.srg.boundary.size() << "  (Γ_SR edges " << pipeline.srg.srg.edge_count() << ")\n"
      << "alpha/beta " << pipeline.cover.alpha << " / " << pipeline.cover.beta << '\n'
      << "sdim       " << pipeline.result.sdim << " (" << to_string(pipeline.result.method) << ")\n";
  if (oracle) out << "oracle     " << oracle->sdim << " (" << to_string(oracle->method) << ")\n";
  out << (ok ? "ok\n" : "MISMATCH\n");

  if (!args.json_path.empty()) {
    json report;
    report["schema"] = kSchemaVersion;
    report["command"] = "graph";
    report["input"] = args.in;
    report["counts"] = {{"vertices", g.order()},
                        {"edges", g.edge_count()},
                        {"boundary", pipeline.srg.boundary.size()}};
    report["srg"] = {{"order", pipeline.srg.srg.order()},
                     {"edges", pipeline.srg.srg.edge_count()},
                     {"alpha", pipeline.cover.alpha},
                     {"beta", pipeline.cover.beta}};
    report["sdim"] = {{"value", pipeline.result.sdim},
                      {"method", std::string(to_string(pipeline.result.method))},
                      {"witness", labels_of(g, pipeline.result.witness)},
                      {"witness_valid", witness_ok}};
    report["oracle"] = oracle ? json{{"value", oracle->sdim},
                                     {"method", std::string(to_string(oracle->method))},
                                     {"witness", labels_of(g, oracle->witness)}}
                              : json(nullptr);
    report["passed"] = ok;
    if (!args.no_timings) report["timings_ms"] = timings;
    write_file(args.json_path, report.dump(2) + "\n");
  }
  return ok ? kOk : kCheckFailed;
}

std::vector<RingSpec> parse_spec_list(std::string_view list) {
  std::vector<RingSpec> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto sep = list.find(';', start);
    const std::string item = trim(list.substr(start, sep == std::string_view::npos ? std::string_view::npos : sep - start));
    if (!item.empty()) out.push_back(parse_ring_spec(item));
    if (sep == std::string_view::npos) break;
    start = sep + 1;
  }
  return out;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return kParseError;
    case ErrorKind::kEmptyGraph: return kEmptyGraph;
    case ErrorKind::kCapExceeded: return kCapExceeded;
    case ErrorKind::kDisconnected: return kDisconnected;
    case ErrorKind::kIo: return kIoError;
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kUnsupportedFormat: return kUsage;
  }
  return kUsage;
}

std::vector<RingSpec> parse_family(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::kParse, "family must look like kind:value, got '" + std::string(text) + "'");
  }
  const std::string kind = trim(text.substr(0, colon));
  const std::string_view value = text.substr(colon + 1);

  if (kind == "reduced") {
    const std::string range = trim(value);
    const auto dots = range.find("..");
    int lo = 0;
    int hi = 0;
    try {
      if (dots == std::string::npos) {
        lo = hi = std::stoi(range);
      } else {
        lo = std::stoi(range.substr(0, dots));
        hi = std::stoi(range.substr(dots + 2));
      }
    } catch (const std::exception&) {
      throw Error(ErrorKind::kParse, "reduced family needs A..B, got '" + range + "'");
    }
    if (lo < 1 || hi < lo || hi > 20) throw Error(ErrorKind::kParse, "bad reduced range '" + range + "'");
    std::vector<RingSpec> out;
    for (int n = lo; n <= hi; ++n) out.push_back(RingSpec::from_chain_lengths(std::vector<int>(n, 1)));
    return out;
  }
  if (kind == "nonreduced" || kind == "mixed" || kind == "specs") {
    auto specs = parse_spec_list(value);
    for (const auto& s : specs) {
      if (kind == "nonreduced" && s.field_count() != 0) {
        throw Error(ErrorKind::kParse, "nonreduced family member " + s.canonical() + " has a field component");
      }
      if (kind == "mixed" && (s.field_count() == 0 || s.nonfield_count() == 0)) {
        throw Error(ErrorKind::kParse, "mixed family member " + s.canonical() + " must have fields and non-fields");
      }
    }
    return specs;
  }
  if (kind == "file") {
    const std::string contents = read_file(trim(value));
    std::vector<RingSpec> out;
    std::istringstream lines(contents);
    std::string line;
    while (std::getline(lines, line)) {
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      const std::string item = trim(line);
      if (!item.empty()) out.push_back(parse_ring_spec(item));
    }
    return out;
  }
  throw Error(ErrorKind::kParse, "unknown family kind '" + kind + "'");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strong metric dimension of co-maximal ideal graphs of finite commutative rings", "comaxdim"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Build Γ(R) and its derived graphs for one ring and run all checks");
  analyze_cmd->add_option("--ring", analyze.ring, "Ring spec, e.g. \"Z4 x Z4 x Z8\"")->required();
  analyze_cmd->add_option("--json", analyze.json_path, "Write the JSON report to this path");
  analyze_cmd->add_option("--export", analyze.export_format, "Export a graph: dot, graph6 or json");
  analyze_cmd->add_option("--what", analyze.what, "Graph to export")
      ->check(CLI::IsMember({"gamma", "srg", "gamma-star", "gamma-star-star", "gamma-prime"}));
  analyze_cmd->add_option("--export-out", analyze.export_path, "Write the export here instead of stdout");
  analyze_cmd->add_flag("--oracle", analyze.oracle, "Also run the brute-force strong metric dimension oracle");
  analyze_cmd->add_flag("--no-timings", analyze.no_timings, "Omit timings from the JSON report");
  analyze.caps.add_to(*analyze_cmd);

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Compare closed forms with exact computation over a family of rings");
  sweep_cmd->add_option("--family", sweep_args.family, "reduced:A..B | nonreduced:S;... | mixed:S;... | specs:S;... | file:PATH")
      ->required();
  sweep_cmd->add_option("--json", sweep_args.json_path, "Write the JSON report to this path");
  sweep_cmd->add_flag("--oracle", sweep_args.oracle, "Cross-check with the brute-force oracle where |V| fits the cap");
  sweep_cmd->add_flag("--no-timings", sweep_args.no_timings, "Omit timings from the JSON report");
  sweep_args.caps.add_to(*sweep_cmd);

  GraphArgs graph_args;
  auto* graph_cmd = app.add_subcommand("graph", "Strong metric dimension of an arbitrary connected graph");
  graph_cmd->add_option("--in", graph_args.in, "Input graph (graph6 or JSON)")->required();
  graph_cmd->add_option("--json", graph_args.json_path, "Write the JSON report to this path");
  graph_cmd->add_flag("--oracle", graph_args.oracle, "Cross-check with the brute-force oracle");
  graph_cmd->add_flag("--no-timings", graph_args.no_timings, "Omit timings from the JSON report");
  graph_args.caps.add_to(*graph_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(analyze, out, err);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_args, out, err);
    if (graph_cmd->parsed()) return cmd_graph(graph_args, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kUsage;
}

}  // namespace comaxdim::cli
