#include "cli.h"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "metric_completer/completion.h"
#include "metric_completer/errors.h"
#include "metric_completer/graph.h"
#include "metric_completer/io.h"
#include "metric_completer/obstacles.h"
#include "metric_completer/params.h"

namespace metric_completer::cli {

namespace {

using nlohmann::ordered_json;

Params params_from_flags(const RunConfig& config) {
  if (!config.delta || !config.k || !config.c) {
    throw FormatError("--delta, --k and --c are required");
  }
  return Params::create(*config.delta, *config.k, *config.c);
}

// Flags, when given, must agree with the parameters in the graph file.
void check_flags_match(const RunConfig& config, const Params& params) {
  if ((config.delta && *config.delta != params.delta()) ||
      (config.k && *config.k != params.k()) ||
      (config.c && *config.c != params.c())) {
    throw FormatError("parameter flags disagree with the graph file");
  }
}

Distance resolve_magic(const RunConfig& config, const Params& params) {
  const Distance m = config.magic.value_or(default_magic(params));
  require_magic(m, params);
  return m;
}

std::string join(const std::vector<Distance>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    os << (i ? " " : "") << values[i];
  }
  return os.str();
}

std::string fork_text(const Fork& f) {
  return "(" + std::to_string(f.a) + "," + std::to_string(f.b) + ")";
}

int cmd_magic(const RunConfig& config, std::ostream& out) {
  const Params params = params_from_flags(config);
  const Distance m = resolve_magic(config, params);
  const ForkFamilies families(m, params);
  const auto magic = magic_distances(params);

  std::vector<const ForkFamily*> schedule;
  for (const ForkFamily& f : families.families()) {
    if (!f.members.empty()) schedule.push_back(&f);
  }
  std::sort(schedule.begin(), schedule.end(),
            [](const ForkFamily* l, const ForkFamily* r) {
              return l->rank < r->rank;
            });

  if (config.format == "json") {
    ordered_json j;
    j["params"] = {{"delta", params.delta()}, {"K", params.k()},
                   {"C", params.c()}};
    j["magic"] = magic;
    j["M"] = m;
    ordered_json fams = ordered_json::array();
    for (const ForkFamily& f : families.families()) {
      ordered_json jf;
      jf["distance"] = f.distance;
      jf["rank"] = f.rank;
      ordered_json members = ordered_json::array();
      for (const TaggedFork& t : f.members) {
        members.push_back({{"fork", {t.fork.a, t.fork.b}},
                           {"family", std::string(to_string(t.origin))}});
      }
      jf["forks"] = std::move(members);
      fams.push_back(std::move(jf));
    }
    j["families"] = std::move(fams);
    ordered_json steps = ordered_json::array();
    for (const ForkFamily* f : schedule) {
      steps.push_back({{"rank", f->rank}, {"distance", f->distance}});
    }
    steps.push_back({{"rank", final_rank(params.delta())}, {"distance", m}});
    j["schedule"] = std::move(steps);
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  out << "params: delta=" << params.delta() << " K=" << params.k()
      << " C=" << params.c() << '\n';
  out << "magic: " << join(magic) << '\n';
  out << "M: " << m << '\n';
  out << "time function:\n";
  for (const ForkFamily& f : families.families()) {
    out << "  t(" << f.distance << ")=" << f.rank << '\n';
  }
  out << "fork families:\n";
  for (const ForkFamily& f : families.families()) {
    out << "  x=" << f.distance << " rank " << f.rank << ":";
    if (f.members.empty()) out << " -";
    for (const TaggedFork& t : f.members) {
      out << ' ' << fork_text(t.fork) << ' ' << to_string(t.origin);
    }
    out << '\n';
  }
  out << "schedule:\n";
  int step = 0;
  for (const ForkFamily* f : schedule) {
    out << "  step " << ++step << " rank " << f->rank << ":";
    for (const TaggedFork& t : f->members) out << ' ' << fork_text(t.fork);
    out << " -> " << f->distance << '\n';
  }
  out << "  step " << ++step << " final: non-edges -> " << m << '\n';
  return kExitOk;
}

std::string fork_cell(Distance a, Distance b, Distance m,
                      const Params& params) {
  const auto range = fork_range(a, b, params);
  if (range.empty()) return "-";
  const Distance chosen = fork_choice(a, b, m, params);
  std::string cell;
  for (std::size_t i = 0; i < range.size(); ++i) {
    if (i) cell += ' ';
    cell += std::to_string(range[i]);
    if (range[i] == chosen) cell += '*';
  }
  return cell;
}

int cmd_forks(const RunConfig& config, std::ostream& out) {
  const Params params = params_from_flags(config);
  const Distance m = resolve_magic(config, params);
  if (config.format == "json") {
    ordered_json cells = ordered_json::array();
    for (Distance a = 1; a <= params.delta(); ++a) {
      for (Distance b = a; b <= params.delta(); ++b) {
        const auto range = fork_range(a, b, params);
        ordered_json cell;
        cell["fork"] = {a, b};
        cell["range"] = range;
        cell["choice"] = range.empty()
                             ? ordered_json(nullptr)
                             : ordered_json(fork_choice(a, b, m, params));
        cells.push_back(std::move(cell));
      }
    }
    ordered_json j;
    j["M"] = m;
    j["cells"] = std::move(cells);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "forks delta=" << params.delta() << " K=" << params.k()
      << " C=" << params.c() << " M=" << m << '\n';
  for (Distance a = 1; a <= params.delta(); ++a) {
    for (Distance b = a; b <= params.delta(); ++b) {
      out << fork_text({a, b}) << ": " << fork_cell(a, b, m, params) << '\n';
    }
  }
  return kExitOk;
}

int cmd_complete(const RunConfig& config, std::ostream& out) {
  const GraphFile file = read_graph_file(config.input_path);
  check_flags_match(config, file.params);
  const Distance m = resolve_magic(config, file.params);
  const CompletionResult result = complete_magic(file.graph, m, file.params);
  const int code = result.completed() ? kExitOk : kExitCompletionFailed;

  if (config.format == "json") {
    out << result_to_json(result).dump(2) << '\n';
    return code;
  }
  if (config.format == "dot") {
    out << to_dot(file.graph, result);
    return code;
  }
  for (const CompletionStep& step : result.trace.steps) {
    out << describe_step(step) << '\n';
  }
  out << "insertions: " << result.trace.steps.size() << '\n';
  for (const Violation& v : result.violations) {
    out << "violation: " << describe_violation(v) << '\n';
  }
  out << "status: " << (result.completed() ? "completed" : "failed") << '\n';
  return code;
}

int cmd_obstacles(const RunConfig& config, std::ostream& out,
                  std::ostream& err) {
  const Params params = params_from_flags(config);
  const auto method = parse_method(config.method);
  if (!method) throw FormatError("unknown method '" + config.method + "'");
  EnumerationOptions options;
  options.magic = resolve_magic(config, params);
  options.sequence_budget = config.sequence_budget;
  const ObstacleCatalogue catalogue =
      enumerate_obstacle_cycles(params, config.n, *method, options);

  std::optional<CatalogueReport> report;
  if (config.verify) {
    VerifyOptions verify;
    verify.oracle_budget = config.oracle_budget;
    report = verify_catalogue(catalogue, verify);
  }

  const std::string text = write_catalogue(catalogue);
  if (config.output_path.empty()) {
    out << text;
  } else {
    std::ofstream file(config.output_path);
    if (!file) throw FormatError("cannot write '" + config.output_path + "'");
    file << text;
  }
  err << catalogue.cycles.size() << " obstacle cycles of length " << config.n
      << " (" << to_string(*method) << ")\n";
  if (report) {
    err << "verify: " << (report->verified ? "ok" : "FAILED") << " ("
        << catalogue.cycles.size() << " entries, "
        << report->sampled_non_entries.size() << " non-entries sampled)\n";
    for (const LabelSequence& c : report->completable_entries) {
      err << "  entry has a completion: " << format_labels(c) << '\n';
    }
    for (const LabelSequence& c : report->uncompletable_non_entries) {
      err << "  missing obstacle: " << format_labels(c) << '\n';
    }
    if (!report->verified) return kExitCompletionFailed;
  }
  return kExitOk;
}

int cmd_trace_obstacle(const RunConfig& config, std::ostream& out) {
  const GraphFile file = read_graph_file(config.input_path);
  check_flags_match(config, file.params);
  const Distance m = resolve_magic(config, file.params);
  const ObstacleWitness w = obstacle_trace(file.graph, file.params, m);

  if (config.format == "json") {
    ordered_json j;
    j["seed"] = {{"sides", w.seed.sides},
                 {"vertices", w.seed.vertices},
                 {"status", std::string(to_string(w.seed.status))}};
    ordered_json levels = ordered_json::array();
    for (const ObstacleLevel& level : w.levels) {
      ordered_json expansions = ordered_json::array();
      for (const ObstacleExpansion& e : level.expansions) {
        expansions.push_back({{"u", e.u},
                              {"v", e.v},
                              {"fresh", e.fresh},
                              {"witness", e.witness},
                              {"fork", {e.fork.a, e.fork.b}},
                              {"family", std::string(to_string(e.family))}});
      }
      levels.push_back({{"rank", level.rank},
                        {"distance", level.distance},
                        {"expansions", std::move(expansions)}});
    }
    j["levels"] = std::move(levels);
    j["cycle"] = format_labels(w.cycle);
    j["order"] = w.cycle_order;
    j["hom"] = w.hom;
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  out << "seed: "
      << format_labels({w.seed.sides.begin(), w.seed.sides.end()}) << ' '
      << to_string(w.seed.status) << " at (" << w.seed.vertices[0] << ','
      << w.seed.vertices[1] << ',' << w.seed.vertices[2] << ")\n";
  for (const ObstacleLevel& level : w.levels) {
    out << "rank " << level.rank << " (distance " << level.distance << "):\n";
    for (const ObstacleExpansion& e : level.expansions) {
      out << "  " << e.u << '-' << e.v << " -> " << e.u << '-' << e.fresh
          << '-' << e.v << " witness " << e.witness << " fork "
          << fork_text(e.fork) << ' ' << to_string(e.family) << '\n';
    }
  }
  out << "obstacle: " << format_labels(w.cycle) << " ("
      << w.obstacle.vertex_count() << " vertices)\n";
  out << "order:";
  for (Vertex v : w.cycle_order) out << ' ' << v;
  out << "\nhom:";
  for (std::size_t i = 0; i < w.hom.size(); ++i) {
    out << ' ' << i << "->" << w.hom[i];
  }
  out << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig config;
  CLI::App app{"Completion of edge-labelled graphs into metric classes",
               "metric-completer"};
  app.require_subcommand(1);

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--delta", config.delta, "Diameter delta");
    sub->add_option("--k", config.k, "Odd-perimeter bound K");
    sub->add_option("--c", config.c, "Perimeter bound C");
    sub->add_option("--magic", config.magic,
                    "Fill value M (default: largest magic distance)");
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember(std::move(formats)));
  };

  CLI::App* magic = app.add_subcommand(
      "magic", "Print magic distances, the time function and fork families");
  add_params(magic);
  add_format(magic, {"text", "json"});

  CLI::App* forks =
      app.add_subcommand("forks", "Print allowed completions of every fork");
  add_params(forks);
  add_format(forks, {"text", "json"});

  CLI::App* complete =
      app.add_subcommand("complete", "Run the magic completion on a graph file");
  add_params(complete);
  add_format(complete, {"text", "json", "dot"});
  complete->add_option("graph", config.input_path, "Graph file")->required();

  CLI::App* obstacles = app.add_subcommand(
      "obstacles", "Enumerate non-completable cycles of a given length");
  add_params(obstacles);
  obstacles->add_option("--n", config.n, "Cycle length")->required();
  obstacles->add_option("--method", config.method, "Enumeration method")
      ->check(CLI::IsMember({"exhaustive", "substitution"}));
  obstacles->add_flag("--verify", config.verify,
                      "Cross-check entries with the exhaustive oracle");
  obstacles->add_option("--budget", config.oracle_budget,
                        "Oracle budget on delta^(missing pairs)");
  obstacles->add_option("--max-sequences", config.sequence_budget,
                        "Bound on delta^n candidate sequences");
  obstacles->add_option("--output", config.output_path,
                        "Write the catalogue here instead of stdout");

  CLI::App* trace = app.add_subcommand(
      "trace-obstacle", "Back-trace a failed completion to an obstacle");
  add_params(trace);
  add_format(trace, {"text", "json"});
  trace->add_option("graph", config.input_path, "Graph file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }
  if (config.oracle_budget <= 0 || config.sequence_budget <= 0) {
    err << "error: budgets must be positive\n";
    return kExitUsage;
  }

  try {
    config.command = app.get_subcommands().front()->get_name();
    if (config.command == "magic") return cmd_magic(config, out);
    if (config.command == "forks") return cmd_forks(config, out);
    if (config.command == "complete") return cmd_complete(config, out);
    if (config.command == "obstacles") {
      return cmd_obstacles(config, out, err);
    }
    if (config.command == "trace-obstacle") {
      return cmd_trace_obstacle(config, out);
    }
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace metric_completer::cli
