#include "gallai/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gallai/fixtures.hpp"
#include "gallai/generators.hpp"
#include "gallai/graph_io.hpp"
#include "gallai/longest_path.hpp"
#include "gallai/parallel.hpp"
#include "gallai/recognizers.hpp"
#include "gallai/theorem_lab.hpp"

namespace gallai::cli {

namespace {

enum class OutputFormat { human, machine };

struct RunConfig {
  std::string input;  // file path, "-" for standard input
  std::string fixture_name;
  std::string generate_class;
  int gen_n = 10;
  double gen_density = 0.5;
  int gen_count = 1;
  std::uint64_t seed = 1;
  std::string input_format = "auto";
  std::string format = "machine";
  std::string method = "enumeration";
  std::size_t cap = EngineOptions{}.enumeration_cap;
  int dp_threshold = EngineOptions{}.dp_threshold;
  int workers = 1;
  bool list_paths = false;
  int exhaustive = 0;
  int max_order = HuntOptions{}.order_bound;

  EngineOptions engine() const { return {dp_threshold, cap}; }
  OutputFormat output() const { return format == "human" ? OutputFormat::human : OutputFormat::machine; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string braces(std::span<const Vertex> vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vs[i]);
  }
  return out + "}";
}

std::string braces(const Path& p) { return braces(p.vertices()); }

std::string braces(const TwoK2Witness& w) { return "{" + to_string(w) + "}"; }

GenSpec generator_spec(const RunConfig& cfg) {
  const auto cls = parse_graph_class(cfg.generate_class);
  if (!cls) throw UsageError("unknown graph class \"" + cfg.generate_class + "\"");
  if (cfg.gen_n < 0 || cfg.gen_n > kMaxVertices) throw UsageError("--n must lie in [0, 64]");
  if (!(cfg.gen_density >= 0 && cfg.gen_density <= 1)) throw UsageError("--density must lie in [0, 1]");
  return {cfg.gen_n, cfg.gen_density, cfg.seed, *cls};
}

std::vector<GraphRecord> generated_records(const RunConfig& cfg) {
  GenSpec spec = generator_spec(cfg);
  const std::uint64_t base = spec.seed;
  std::vector<GraphRecord> out;
  for (int i = 0; i < cfg.gen_count; ++i) {
    spec.seed = derive_seed(base, static_cast<std::uint64_t>(i));
    out.push_back({static_cast<std::size_t>(i + 1), generate(spec)});
  }
  return out;
}

std::vector<GraphRecord> load_records(const RunConfig& cfg, std::istream& in) {
  const int sources = !cfg.input.empty() + !cfg.fixture_name.empty() + !cfg.generate_class.empty();
  if (sources > 1) throw UsageError("give exactly one input: a file, --fixture or --generate");
  if (!cfg.fixture_name.empty()) {
    try {
      return {GraphRecord{1, fixture(cfg.fixture_name)}};
    } catch (const std::out_of_range& e) {
      throw UsageError(e.what());
    }
  }
  if (!cfg.generate_class.empty()) return generated_records(cfg);

  InputFormat format = InputFormat::automatic;
  if (cfg.input_format == "graph6") format = InputFormat::graph6;
  else if (cfg.input_format == "edgelist") format = InputFormat::edge_list;

  if (cfg.input.empty() || cfg.input == "-") return read_graphs(in, format);
  std::ifstream file(cfg.input);
  if (!file) throw std::runtime_error("cannot open " + cfg.input);
  return read_graphs(file, format);
}

struct RecordOutput {
  std::string out;
  std::string err;
  bool interesting = false;
};

// ---------------------------------------------------------------------------

RecordOutput do_recognize(const Graph& g, const RunConfig& cfg, std::size_t index) {
  const auto witness = find_induced_2k2(g);
  const auto split = split_partition(g);
  const auto peo = perfect_elimination_order(g);
  const bool cochordal = is_cochordal(g);
  std::ostringstream os;
  if (cfg.output() == OutputFormat::machine) {
    os << "twoK2free=" << !witness << " witness=" << (witness ? braces(witness->normalized()) : "-")
       << " split=" << split.has_value() << " clique=" << (split ? braces(split->clique) : "-")
       << " independent=" << (split ? braces(split->independent) : "-")
       << " chordal=" << peo.has_value() << " peo=" << (peo ? braces(peo->order) : "-")
       << " cochordal=" << cochordal << '\n';
  } else {
    os << "graph " << index << " (n=" << g.order() << ", m=" << g.size() << ")\n";
    os << "  2K2-free:  " << (witness ? "no, induced 2K2 " + braces(witness->normalized()) : "yes") << '\n';
    os << "  split:     "
       << (split ? "yes, clique " + braces(split->clique) + " independent " + braces(split->independent) : "no")
       << '\n';
    os << "  chordal:   " << (peo ? "yes, elimination order " + braces(peo->order) : "no") << '\n';
    os << "  cochordal: " << (cochordal ? "yes" : "no") << '\n';
  }
  return {os.str(), {}, false};
}

RecordOutput do_longest(const Graph& g, const RunConfig& cfg, std::size_t index) {
  RecordOutput r;
  if (g.order() == 0) {
    r.err = "record " + std::to_string(index) + ": graph has no vertices\n";
    return r;
  }
  const int order = longest_path_order(g, cfg.engine());
  std::optional<std::vector<Path>> paths;
  try {
    paths = enumerate_longest_paths(g, cfg.engine());
  } catch (const EnumerationCapExceeded& e) {
    r.err = "record " + std::to_string(index) + ": " + e.what() + ", not listing paths\n";
  }
  std::ostringstream os;
  const std::string count = paths ? std::to_string(paths->size()) : "capped";
  if (cfg.output() == OutputFormat::machine) {
    os << "order=" << order << " count=" << count << '\n';
  } else {
    os << "graph " << index << ": longest path order " << order << " (length " << order - 1 << "), "
       << count << " longest path(s) up to reversal\n";
  }
  if (cfg.list_paths && paths)
    for (const Path& p : *paths) os << (cfg.output() == OutputFormat::human ? "  " : "") << to_string(p) << '\n';
  r.out = os.str();
  return r;
}

RecordOutput do_intersect(const Graph& g, const RunConfig& cfg, std::size_t index) {
  RecordOutput r;
  if (g.order() == 0) {
    r.err = "record " + std::to_string(index) + ": graph has no vertices\n";
    return r;
  }
  const IntersectionMethod method = *parse_intersection_method(cfg.method);
  IntersectionReport report;
  try {
    report = intersection_of_longest_paths(g, method, cfg.engine());
  } catch (const EnumerationCapExceeded& e) {
    r.err = "record " + std::to_string(index) + ": " + e.what() + ", falling back to deletion\n";
    report = intersection_of_longest_paths(g, IntersectionMethod::deletion, cfg.engine());
  }
  const std::string count = report.path_count ? std::to_string(*report.path_count) : "-";
  std::ostringstream os;
  if (cfg.output() == OutputFormat::machine) {
    os << "order=" << report.longest_order << " count=" << count << " method=" << to_string(report.method)
       << '\n';
    for (Vertex v : report.intersection) os << v << '\n';
  } else {
    os << "graph " << index << ": longest path order " << report.longest_order;
    if (report.path_count) os << ", " << *report.path_count << " longest path(s)";
    os << " [" << to_string(report.method) << "]\n";
    os << "  common to all longest paths: "
       << (report.intersection.empty() ? std::string("none") : braces(report.intersection)) << '\n';
  }
  r.out = os.str();
  return r;
}

RecordOutput do_verify(const Graph& g, const RunConfig& cfg, std::size_t index) {
  RecordOutput r;
  if (g.order() == 0) {
    r.err = "record " + std::to_string(index) + ": graph has no vertices\n";
    return r;
  }
  const TheoremReport rep = verify_theorem1(g, cfg.engine());
  r.interesting = rep.verdict == Verdict::violated;
  std::ostringstream os;
  if (cfg.output() == OutputFormat::machine) {
    os << "verdict=" << to_string(rep.verdict);
    if (rep.verdict == Verdict::not_applicable) {
      os << " reason=" << (rep.two_k2 ? "2k2" : "edgeless");
      if (rep.two_k2) os << " witness=" << braces(*rep.two_k2);
    } else {
      os << " delta=" << braces(rep.delta_vertices) << " intersection=" << braces(rep.intersection);
      if (rep.witness_path) os << " path=" << braces(*rep.witness_path);
    }
    os << '\n';
  } else {
    os << "graph " << index << ": ";
    if (rep.verdict == Verdict::not_applicable) {
      os << "not applicable, "
         << (rep.two_k2 ? "contains induced 2K2 " + braces(*rep.two_k2) : std::string("graph has no edge"));
    } else {
      os << to_string(rep.verdict) << ", max-degree vertices " << braces(rep.delta_vertices)
         << ", common to all longest paths " << braces(rep.intersection);
      if (rep.witness_path) os << ", longest path avoiding one: " << braces(*rep.witness_path);
    }
    os << '\n';
  }
  r.out = os.str();
  return r;
}

RecordOutput do_dominate(const Graph& g, const RunConfig& cfg, std::size_t index) {
  std::ostringstream os;
  const bool machine = cfg.output() == OutputFormat::machine;
  if (!machine) os << "graph " << index << ": ";
  try {
    const Path p = find_dominating_path(g);
    if (machine) os << "path=" << braces(p) << " order=" << p.order() << " dominating=" << is_dominating(g, p);
    else os << "dominating path " << braces(p) << " of order " << p.order();
  } catch (const Not2K2FreeError& e) {
    if (machine) os << "error=not2k2free witness=" << braces(e.witness());
    else os << "no guarantee, induced 2K2 " << braces(e.witness());
  } catch (const std::invalid_argument&) {
    os << (machine ? "error=edgeless" : "graph has no edge");
  }
  os << '\n';
  return {os.str(), {}, false};
}

using Handler = RecordOutput (*)(const Graph&, const RunConfig&, std::size_t);

int process(const std::vector<GraphRecord>& records, const RunConfig& cfg, Handler handler,
            std::ostream& out, std::ostream& err) {
  std::vector<RecordOutput> results(records.size());
  parallel_for(records.size(), cfg.workers, [&](std::size_t i) {
    if (records[i].ok()) results[i] = handler(records[i].graph(), cfg, i + 1);
  });
  bool parse_error = false;
  bool interesting = false;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!records[i].ok()) {
      parse_error = true;
      err << "line " << records[i].line << ": " << records[i].error() << '\n';
      continue;
    }
    out << results[i].out;
    err << results[i].err;
    interesting = interesting || results[i].interesting;
  }
  if (interesting) return kInteresting;
  return parse_error ? kInputError : kSuccess;
}

int do_hunt(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  HuntOptions options;
  options.order_bound = cfg.max_order;
  options.workers = cfg.workers;
  options.engine = cfg.engine();
  HuntResult result;
  if (cfg.exhaustive > 0) {
    if (!cfg.input.empty() || !cfg.fixture_name.empty() || !cfg.generate_class.empty())
      throw UsageError("--exhaustive cannot be combined with another input");
    if (cfg.exhaustive > 7) throw UsageError("--exhaustive supports orders up to 7");
    result = hunt_exhaustive(cfg.exhaustive, options);
  } else {
    std::vector<Graph> graphs;
    for (const auto& rec : load_records(cfg, in)) {
      if (rec.ok()) graphs.push_back(rec.graph());
      else result.errors.push_back({rec.line, rec.error()});
    }
    auto errors = std::move(result.errors);
    result = hunt_counterexamples(graphs, options);
    result.errors = std::move(errors);
  }
  for (const auto& e : result.errors) err << "line " << e.line << ": " << e.message << '\n';
  for (const Graph& g : result.counterexamples) out << write_graph6(g) << '\n';
  out << "scanned=" << result.scanned << " skipped=" << result.skipped
      << " found=" << result.counterexamples.size() << '\n';
  if (!result.counterexamples.empty()) return kInteresting;
  return result.errors.empty() ? kSuccess : kInputError;
}

int do_gen(const RunConfig& cfg, std::ostream& out) {
  if (cfg.generate_class.empty()) throw UsageError("gen needs --class");
  for (const auto& rec : generated_records(cfg)) out << write_graph6(rec.graph()) << '\n';
  return kSuccess;
}

// ---------------------------------------------------------------------------

void add_source_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("input", cfg.input, "Graph file (graph6 or edge list); '-' or omitted reads stdin");
  cmd->add_option("--fixture", cfg.fixture_name, "Use a shipped literature graph");
  cmd->add_option("--generate", cfg.generate_class,
                  "Generate the input: split, chordal, cochordal, 2k2free, erdos-renyi");
  cmd->add_option("--n", cfg.gen_n, "Vertex count for --generate");
  cmd->add_option("--density", cfg.gen_density, "Edge probability for --generate");
  cmd->add_option("--count", cfg.gen_count, "Number of generated graphs")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg.seed, "Base seed; graph i uses derive_seed(seed, i)");
  cmd->add_option("--input-format", cfg.input_format, "auto, graph6 or edgelist")
      ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
}

void add_engine_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "machine or human")->check(CLI::IsMember({"machine", "human"}));
  cmd->add_option("--cap", cfg.cap, "Maximum number of enumerated paths")->check(CLI::PositiveNumber);
  cmd->add_option("--dp-threshold", cfg.dp_threshold, "Largest order solved by subset DP")
      ->check(CLI::Range(1, kMaxDpVertices));
  cmd->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact longest paths, graph-class certificates and 2K2-free path lemmas", "gallai-lab"};
  app.require_subcommand(1);
  RunConfig cfg;

  struct Command {
    const char* name;
    const char* help;
    Handler handler;
  };
  const Command batch[] = {
      {"recognize", "Class verdicts with certificates", do_recognize},
      {"longest", "Longest-path order and count", do_longest},
      {"intersect", "Vertices common to all longest paths", do_intersect},
      {"verify", "Check that maximum-degree vertices lie on every longest path", do_verify},
      {"dominate", "Build a dominating path by repeated extension", do_dominate},
  };
  std::vector<std::pair<CLI::App*, Handler>> commands;
  for (const Command& c : batch) {
    CLI::App* cmd = app.add_subcommand(c.name, c.help);
    add_source_options(cmd, cfg);
    add_engine_options(cmd, cfg);
    commands.emplace_back(cmd, c.handler);
  }
  commands[1].first->add_flag("--paths", cfg.list_paths, "List every longest path");
  commands[2].first->add_option("--method", cfg.method, "enumeration or deletion")
      ->check(CLI::IsMember({"enumeration", "deletion"}));

  CLI::App* hunt = app.add_subcommand("hunt", "Scan graphs for empty longest-path intersection");
  add_source_options(hunt, cfg);
  add_engine_options(hunt, cfg);
  hunt->add_option("--exhaustive", cfg.exhaustive, "Scan every labelled graph up to this order (<= 7)")
      ->check(CLI::Range(1, 7));
  hunt->add_option("--max-order", cfg.max_order, "Skip graphs with more vertices");

  CLI::App* gen = app.add_subcommand("gen", "Emit generated graphs as graph6 lines");
  gen->add_option("--class", cfg.generate_class, "split, chordal, cochordal, 2k2free, erdos-renyi")
      ->required();
  gen->add_option("--n", cfg.gen_n, "Vertex count");
  gen->add_option("--density", cfg.gen_density, "Edge probability");
  gen->add_option("--count", cfg.gen_count, "Number of graphs")->check(CLI::PositiveNumber);
  gen->add_option("--seed", cfg.seed, "Base seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (hunt->parsed()) return do_hunt(cfg, in, out, err);
    if (gen->parsed()) return do_gen(cfg, out);
    for (const auto& [cmd, handler] : commands)
      if (cmd->parsed()) return process(load_records(cfg, in), cfg, handler, out, err);
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kInputError;
  }
  return kUsageError;
}

}  // namespace gallai::cli
