#include "metric_completer/obstacles.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "metric_completer/errors.h"

namespace metric_completer {

ObstacleWitness obstacle_trace(const EdgeLabelledGraph& g, const Params& params,
                               Distance magic) {
  const CompletionResult run = complete_magic(g, magic, params);
  if (run.completed()) {
    throw PreconditionError("the magic completion succeeds; no obstacle");
  }
  const EdgeLabelledGraph& full = run.trace.final_graph;

  std::map<std::pair<Vertex, Vertex>, const CompletionStep*> inserted;
  for (const CompletionStep& step : run.trace.steps) {
    inserted[{step.u, step.v}] = &step;
  }
  auto step_for = [&](Vertex p, Vertex q) -> const CompletionStep* {
    const auto it = inserted.find({std::min(p, q), std::max(p, q)});
    return it == inserted.end() ? nullptr : it->second;
  };

  ObstacleWitness witness;
  witness.seed = run.violations.front();
  witness.hom.assign(witness.seed.vertices.begin(),
                     witness.seed.vertices.end());
  std::vector<Vertex> order = {0, 1, 2};

  for (int rank = final_rank(params.delta()); rank >= 1; --rank) {
    ObstacleLevel level;
    level.rank = rank;
    std::vector<Vertex> next;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const Vertex x = order[i];
      const Vertex y = order[(i + 1) % order.size()];
      next.push_back(x);
      const CompletionStep* step = step_for(witness.hom[x], witness.hom[y]);
      if (step == nullptr || step->rank != rank) continue;
      if (!step->witness) {
        // Ruled out by the fork-family completeness property of the engine.
        throw std::logic_error("fill-value edge inside a forbidden triangle");
      }
      const Vertex fresh = static_cast<Vertex>(witness.hom.size());
      witness.hom.push_back(*step->witness);
      level.distance = step->distance;
      level.expansions.push_back(
          {x, y, fresh, *step->witness,
           Fork{full.label(witness.hom[x], *step->witness),
                full.label(*step->witness, witness.hom[y])},
           step->family});
      next.push_back(fresh);
    }
    order = std::move(next);
    if (!level.expansions.empty()) witness.levels.push_back(std::move(level));
  }

  const int k = static_cast<int>(order.size());
  witness.obstacle = EdgeLabelledGraph(k);
  for (int i = 0; i < k; ++i) {
    const Vertex x = order[i];
    const Vertex y = order[(i + 1) % k];
    const Distance d = full.label(witness.hom[x], witness.hom[y]);
    witness.obstacle.set_distance(x, y, d);
    witness.cycle.push_back(d);
  }
  witness.cycle_order = std::move(order);
  return witness;
}

std::uint64_t obstacle_size_bound(const Params& params) {
  return std::uint64_t{3} << params.delta();
}

std::string_view to_string(EnumerationMethod method) {
  return method == EnumerationMethod::kExhaustive ? "exhaustive"
                                                  : "substitution";
}

std::optional<EnumerationMethod> parse_method(std::string_view name) {
  if (name == "exhaustive") return EnumerationMethod::kExhaustive;
  if (name == "substitution") return EnumerationMethod::kSubstitution;
  return std::nullopt;
}

bool cycle_completable(const LabelSequence& labels, const Params& params,
                       Distance magic) {
  return complete_magic(cycle_graph(labels, params), magic, params).completed();
}

namespace {

std::vector<LabelSequence> exhaustive_obstacles(const Params& params, int n,
                                                Distance magic,
                                                double budget) {
  const double space = std::pow(static_cast<double>(params.delta()), n);
  if (space > budget) {
    std::ostringstream os;
    os << "enumerating " << space << " label sequences of length " << n
       << " exceeds the budget of " << budget;
    throw CapacityError(os.str());
  }
  std::vector<LabelSequence> out;
  LabelSequence seq(n, 1);
  while (true) {
    if (seq == canonical_cycle(seq) && !cycle_completable(seq, params, magic)) {
      out.push_back(seq);
    }
    int i = n - 1;
    while (i >= 0 && seq[i] == params.delta()) seq[i--] = 1;
    if (i < 0) break;
    ++seq[i];
  }
  return out;
}

std::vector<LabelSequence> substitution_obstacles(const Params& params, int n,
                                                  Distance magic,
                                                  double budget) {
  if (n == 3) return exhaustive_obstacles(params, 3, magic, budget);
  std::set<LabelSequence> candidates;
  for (const LabelSequence& cycle :
       substitution_obstacles(params, n - 1, magic, budget)) {
    for (const LabelSequence& c : substitute_forks(cycle, params, magic)) {
      candidates.insert(canonical_cycle(c));
    }
  }
  std::vector<LabelSequence> out;
  for (const LabelSequence& c : candidates) {
    if (!cycle_completable(c, params, magic)) out.push_back(c);
  }
  return out;
}

}  // namespace

ObstacleCatalogue enumerate_obstacle_cycles(const Params& params, int n,
                                            EnumerationMethod method,
                                            const EnumerationOptions& options) {
  if (n < 3) throw RangeError("obstacle cycles need at least three vertices");
  const Distance magic = options.magic.value_or(default_magic(params));
  require_magic(magic, params);
  ObstacleCatalogue catalogue{params, n, method, {}};
  catalogue.cycles =
      method == EnumerationMethod::kExhaustive
          ? exhaustive_obstacles(params, n, magic, options.sequence_budget)
          : substitution_obstacles(params, n, magic, options.sequence_budget);
  return catalogue;
}

std::vector<LabelSequence> substitute_forks(const LabelSequence& cycle,
                                            const Params& params,
                                            Distance magic) {
  const ForkFamilies families(magic, params);
  std::vector<LabelSequence> out;
  std::set<LabelSequence> seen;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (cycle[i] == magic) continue;
    for (const TaggedFork& t : families.at(cycle[i]).members) {
      LabelSequence candidate;
      candidate.reserve(cycle.size() + 1);
      candidate.insert(candidate.end(), cycle.begin(), cycle.begin() + i);
      candidate.push_back(t.fork.a);
      candidate.push_back(t.fork.b);
      candidate.insert(candidate.end(), cycle.begin() + i + 1, cycle.end());
      if (seen.insert(candidate).second) out.push_back(std::move(candidate));
    }
  }
  return out;
}

CatalogueReport verify_catalogue(const ObstacleCatalogue& catalogue,
                                 const VerifyOptions& options) {
  CatalogueReport report;
  const Params& params = catalogue.params;
  for (const LabelSequence& entry : catalogue.cycles) {
    if (oracle_complete(cycle_graph(entry, params), params,
                        options.oracle_budget)) {
      report.completable_entries.push_back(entry);
    }
  }
  if (catalogue.size >= 3 && options.sample_size > 0) {
    const std::set<LabelSequence> entries(catalogue.cycles.begin(),
                                          catalogue.cycles.end());
    std::set<LabelSequence> sampled;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<Distance> label(1, params.delta());
    const int attempts = options.sample_size * 50;
    for (int attempt = 0; attempt < attempts &&
                          static_cast<int>(sampled.size()) < options.sample_size;
         ++attempt) {
      LabelSequence seq(catalogue.size);
      for (Distance& d : seq) d = label(rng);
      seq = canonical_cycle(seq);
      if (entries.contains(seq) || !sampled.insert(seq).second) continue;
      const EdgeLabelledGraph g = cycle_graph(seq, params);
      if (assignment_space(g, params) > options.oracle_budget) {
        sampled.erase(seq);
        break;
      }
      report.sampled_non_entries.push_back(seq);
      if (!oracle_complete(g, params, options.oracle_budget)) {
        report.uncompletable_non_entries.push_back(seq);
      }
    }
  }
  report.verified = report.completable_entries.empty() &&
                    report.uncompletable_non_entries.empty();
  return report;
}

}  // namespace metric_completer
