#ifndef METRIC_COMPLETER_OBSTACLES_H_
#define METRIC_COMPLETER_OBSTACLES_H_

// Obstacles to completion: back-tracing a failed magic run to a
// non-completable cycle that maps homomorphically into the input, and
// enumerating non-completable labelled cycles of a given length.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "metric_completer/completion.h"
#include "metric_completer/graph.h"
#include "metric_completer/params.h"

namespace metric_completer {

// An obstacle edge (u, v) that was inserted at `rank`, replaced by the path
// u - fresh - v through a new vertex standing for the witness.
struct ObstacleExpansion {
  Vertex u = 0;
  Vertex v = 0;
  Vertex fresh = 0;
  Vertex witness = 0;  // in the input graph
  Fork fork;           // (d(u', w), d(w, v')) on the images
  Family family = Family::kPlus;
};

struct ObstacleLevel {
  int rank = 0;
  Distance distance = 0;
  std::vector<ObstacleExpansion> expansions;
};

struct ObstacleWitness {
  // A cycle on vertices 0..k-1; 0, 1, 2 are the seed triangle and later
  // vertices are numbered in order of creation.
  EdgeLabelledGraph obstacle;
  // Labels read around the cycle starting at vertex 0 towards vertex 1's side.
  LabelSequence cycle;
  std::vector<Vertex> cycle_order;
  std::vector<Vertex> hom;  // obstacle vertex -> input vertex
  Violation seed;
  std::vector<ObstacleLevel> levels;  // only ranks that expanded something
};

// Throws PreconditionError when the magic run succeeds.
ObstacleWitness obstacle_trace(const EdgeLabelledGraph& g, const Params& params,
                               Distance magic);

// Vertex count bound for back-traced obstacles: 3 * 2^delta.
std::uint64_t obstacle_size_bound(const Params& params);

enum class EnumerationMethod { kExhaustive, kSubstitution };

std::string_view to_string(EnumerationMethod method);
std::optional<EnumerationMethod> parse_method(std::string_view name);

struct ObstacleCatalogue {
  Params params;
  int size = 0;
  EnumerationMethod method = EnumerationMethod::kExhaustive;
  std::vector<LabelSequence> cycles;  // canonical, ascending, unique
};

inline constexpr double kDefaultSequenceBudget = 1e7;

struct EnumerationOptions {
  std::optional<Distance> magic;  // default: largest magic distance
  // Bound on delta^n candidate sequences for exhaustive enumeration.
  double sequence_budget = kDefaultSequenceBudget;
};

// Decides completability with the magic engine, which is exact.
bool cycle_completable(const LabelSequence& labels, const Params& params,
                       Distance magic);

// Canonical label sequences of length n with no completion. Throws
// RangeError for n < 3 and CapacityError when delta^n exceeds the budget.
ObstacleCatalogue enumerate_obstacle_cycles(const Params& params, int n,
                                            EnumerationMethod method,
                                            const EnumerationOptions& options = {});

// Each edge whose label x != magic is replaced, in turn, by each fork of the
// active family of x, read in sequence order. Exact duplicates are dropped;
// candidates are not filtered for completability.
std::vector<LabelSequence> substitute_forks(const LabelSequence& cycle,
                                            const Params& params,
                                            Distance magic);

struct CatalogueReport {
  bool verified = true;
  std::vector<LabelSequence> completable_entries;
  std::vector<LabelSequence> sampled_non_entries;
  std::vector<LabelSequence> uncompletable_non_entries;
};

struct VerifyOptions {
  double oracle_budget = kDefaultOracleBudget;
  int sample_size = 20;
  std::uint64_t seed = 1;
};

// Every entry must have no completion; sampled non-entries of the same
// length must have one. Throws CapacityError when an entry exceeds the
// oracle budget.
CatalogueReport verify_catalogue(const ObstacleCatalogue& catalogue,
                                 const VerifyOptions& options = {});

}  // namespace metric_completer

#endif  // METRIC_COMPLETER_OBSTACLES_H_
