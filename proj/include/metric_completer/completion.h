#ifndef METRIC_COMPLETER_COMPLETION_H_
#define METRIC_COMPLETER_COMPLETION_H_

// Completion of edge-labelled graphs into the class: the magic-parameter
// algorithm with a full insertion trace, the delta-bounded shortest path
// baseline, and an exhaustive ground-truth search.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "metric_completer/graph.h"
#include "metric_completer/params.h"

namespace metric_completer {

// One edge insertion. Fill-value insertions (kFinalM) carry no witness and
// use rank 2 delta + 1, after every fork rank.
struct CompletionStep {
  int rank = 0;
  Distance distance = 0;
  Vertex u = 0;  // u < v
  Vertex v = 0;
  std::optional<Vertex> witness;
  std::optional<Fork> fork;  // (d(u, w), d(w, v)) at insertion time
  Family family = Family::kPlus;

  friend bool operator==(const CompletionStep&,
                         const CompletionStep&) = default;
};

struct CompletionTrace {
  std::vector<CompletionStep> steps;
  EdgeLabelledGraph final_graph;

  friend bool operator==(const CompletionTrace&,
                         const CompletionTrace&) = default;
};

enum class CompletionStatus { kCompleted, kFailed };

struct CompletionResult {
  CompletionStatus status = CompletionStatus::kFailed;
  Distance magic = 0;  // 0 for the shortest path baseline
  CompletionTrace trace;
  std::vector<Violation> violations;

  bool completed() const { return status == CompletionStatus::kCompleted; }
};

// Rank used for fill-value insertions.
inline int final_rank(int delta) { return 2 * delta + 1; }

// Runs ranks 1..2 delta, inserting t^-1(k) into every non-edge with a witness
// whose fork lies in the active family, then fills the rest with `magic`.
// An input that already holds a forbidden triangle fails at once with an
// empty trace. Throws ParameterError when `magic` is not magic and
// RangeError when a label exceeds delta.
CompletionResult complete_magic(const EdgeLabelledGraph& g, Distance magic,
                                const Params& params);

// Same, with the largest magic distance.
CompletionResult complete_magic(const EdgeLabelledGraph& g,
                                const Params& params);

// Every non-edge becomes min(path distance, delta); disconnected pairs get
// delta. Steps are recorded with rank equal to the inserted distance.
CompletionResult shortest_path_completion(const EdgeLabelledGraph& g,
                                          const Params& params);

inline constexpr double kDefaultOracleBudget = 1e8;

// delta^(number of non-edges); saturates at +inf.
double assignment_space(const EdgeLabelledGraph& g, const Params& params);

// Visits every completion of g into the class, in lexicographic order of the
// assignment (non-edges in (u, v) order, values ascending). The visitor
// returns false to stop. Returns the number of completions visited. Throws
// CapacityError when assignment_space exceeds the budget.
std::uint64_t for_each_completion(
    const EdgeLabelledGraph& g, const Params& params,
    const std::function<bool(const EdgeLabelledGraph&)>& visit,
    double budget = kDefaultOracleBudget);

// First completion in assignment order, if any.
std::optional<EdgeLabelledGraph> oracle_complete(
    const EdgeLabelledGraph& g, const Params& params,
    double budget = kDefaultOracleBudget);

std::vector<EdgeLabelledGraph> all_completions(
    const EdgeLabelledGraph& g, const Params& params,
    double budget = kDefaultOracleBudget);

struct SandwichViolation {
  Vertex u = 0;
  Vertex v = 0;
  Distance magic_distance = 0;
  Distance other_distance = 0;
};

struct SandwichReport {
  bool holds = true;
  std::optional<SandwichViolation> first_violation;
};

// For every pair checks other >= magic_result >= M or other <= magic_result
// <= M. Throws PreconditionError unless the magic result completed and
// `other` is a complete extension of g.
SandwichReport check_sandwich(const EdgeLabelledGraph& g,
                              const CompletionResult& magic_result,
                              const EdgeLabelledGraph& other, Distance magic);

}  // namespace metric_completer

#endif  // METRIC_COMPLETER_COMPLETION_H_
