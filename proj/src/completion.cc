#include "metric_completer/completion.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "metric_completer/errors.h"

namespace metric_completer {

namespace {

void require_labels_in_range(const EdgeLabelledGraph& g, const Params& params) {
  for (const Edge& e : g.edges()) {
    if (!params.contains(e.d)) {
      std::ostringstream os;
      os << "label " << e.d << " on (" << e.u << "," << e.v << ") outside 1.."
         << params.delta();
      throw RangeError(os.str());
    }
  }
}

CompletionResult finish(EdgeLabelledGraph graph,
                        std::vector<CompletionStep> steps, Distance magic,
                        const Params& params) {
  CompletionResult result;
  result.magic = magic;
  result.violations = violations(graph, params);
  result.status = result.violations.empty() && graph.is_complete()
                      ? CompletionStatus::kCompleted
                      : CompletionStatus::kFailed;
  result.trace.steps = std::move(steps);
  result.trace.final_graph = std::move(graph);
  return result;
}

}  // namespace

CompletionResult complete_magic(const EdgeLabelledGraph& g, Distance magic,
                                const Params& params) {
  const ForkFamilies families(magic, params);
  require_labels_in_range(g, params);

  if (!violations(g, params).empty()) return finish(g, {}, magic, params);

  const int n = g.vertex_count();
  const int delta = params.delta();
  EdgeLabelledGraph current = g;
  std::vector<CompletionStep> steps;

  for (int rank = 1; rank <= 2 * delta; ++rank) {
    const auto x = inverse_time(rank, magic, delta);
    if (!x) continue;
    // Collect against the graph as it stood at the start of the rank, then
    // insert everything at once.
    std::vector<CompletionStep> batch;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (current.has_edge(u, v)) continue;
        for (Vertex w = 0; w < n; ++w) {
          if (w == u || w == v) continue;
          const Distance a = current.label(u, w);
          const Distance b = current.label(w, v);
          if (a == 0 || b == 0) continue;
          if (const auto origin = families.origin(*x, a, b)) {
            batch.push_back({rank, *x, u, v, w, Fork{a, b}, *origin});
            break;
          }
        }
      }
    }
    for (const CompletionStep& step : batch) {
      current.set_distance(step.u, step.v, step.distance);
      steps.push_back(step);
    }
  }

  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (current.has_edge(u, v)) continue;
      current.set_distance(u, v, magic);
      steps.push_back({final_rank(delta), magic, u, v, std::nullopt,
                       std::nullopt, Family::kFinalM});
    }
  }
  return finish(std::move(current), std::move(steps), magic, params);
}

CompletionResult complete_magic(const EdgeLabelledGraph& g,
                                const Params& params) {
  return complete_magic(g, default_magic(params), params);
}

CompletionResult shortest_path_completion(const EdgeLabelledGraph& g,
                                          const Params& params) {
  require_labels_in_range(g, params);
  const int n = g.vertex_count();
  constexpr int kUnreachable = std::numeric_limits<int>::max() / 4;
  std::vector<int> dist(static_cast<std::size_t>(n) * n, kUnreachable);
  auto at = [&](Vertex u, Vertex v) -> int& {
    return dist[static_cast<std::size_t>(u) * n + v];
  };
  for (Vertex u = 0; u < n; ++u) {
    at(u, u) = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (const Distance d = g.label(u, v)) at(u, v) = d;
    }
  }
  for (Vertex k = 0; k < n; ++k) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        at(u, v) = std::min(at(u, v), at(u, k) + at(k, v));
      }
    }
  }

  EdgeLabelledGraph completed = g;
  std::vector<CompletionStep> steps;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      const Distance d = std::min(at(u, v), params.delta());
      completed.set_distance(u, v, d);
      steps.push_back(
          {d, d, u, v, std::nullopt, std::nullopt, Family::kShortestPath});
    }
  }
  std::stable_sort(steps.begin(), steps.end(),
                   [](const CompletionStep& l, const CompletionStep& r) {
                     return l.rank < r.rank;
                   });
  return finish(std::move(completed), std::move(steps), 0, params);
}

double assignment_space(const EdgeLabelledGraph& g, const Params& params) {
  const std::size_t n = g.vertex_count();
  const double missing = static_cast<double>(n * (n > 0 ? n - 1 : 0) / 2 -
                                             g.edge_count());
  return std::pow(static_cast<double>(params.delta()), missing);
}

namespace {

class CompletionSearch {
 public:
  CompletionSearch(const EdgeLabelledGraph& g, const Params& params,
                   const std::function<bool(const EdgeLabelledGraph&)>& visit)
      : params_(params), visit_(visit), graph_(g) {
    const int delta = params.delta();
    const int side = delta + 1;
    allowed_.assign(static_cast<std::size_t>(side) * side * side, false);
    for (Distance a = 1; a <= delta; ++a) {
      for (Distance b = 1; b <= delta; ++b) {
        for (Distance c = 1; c <= delta; ++c) {
          allowed_[(static_cast<std::size_t>(a) * side + b) * side + c] =
              is_allowed(a, b, c, params);
        }
      }
    }

    const int n = g.vertex_count();
    std::vector<int> index(static_cast<std::size_t>(n) * n, -1);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (g.has_edge(u, v)) continue;
        index[static_cast<std::size_t>(u) * n + v] =
            index[static_cast<std::size_t>(v) * n + u] =
                static_cast<int>(pairs_.size());
        pairs_.push_back({u, v});
      }
    }
    // A triangle is checked when its last missing pair is assigned.
    closers_.resize(pairs_.size());
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      const auto [u, v] = pairs_[i];
      for (Vertex w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        const int iu = index[static_cast<std::size_t>(u) * n + w];
        const int iv = index[static_cast<std::size_t>(v) * n + w];
        if (iu < static_cast<int>(i) && iv < static_cast<int>(i)) {
          closers_[i].push_back(w);
        }
      }
    }
  }

  std::uint64_t run() {
    if (!violations(graph_, params_).empty()) return 0;
    recurse(0);
    return visited_;
  }

 private:
  bool allowed(Distance a, Distance b, Distance c) const {
    const int side = params_.delta() + 1;
    return allowed_[(static_cast<std::size_t>(a) * side + b) * side + c];
  }

  // Returns false once the visitor asks to stop.
  bool recurse(std::size_t i) {
    if (i == pairs_.size()) {
      ++visited_;
      return visit_(graph_);
    }
    const auto [u, v] = pairs_[i];
    for (Distance d = 1; d <= params_.delta(); ++d) {
      bool ok = true;
      for (Vertex w : closers_[i]) {
        if (!allowed(d, graph_.label(u, w), graph_.label(v, w))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      graph_.set_distance(u, v, d);
      const bool keep_going = recurse(i + 1);
      graph_.set_distance(u, v, 0);
      if (!keep_going) return false;
    }
    return true;
  }

  const Params& params_;
  const std::function<bool(const EdgeLabelledGraph&)>& visit_;
  EdgeLabelledGraph graph_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::vector<std::vector<Vertex>> closers_;
  std::vector<bool> allowed_;
  std::uint64_t visited_ = 0;
};

}  // namespace

std::uint64_t for_each_completion(
    const EdgeLabelledGraph& g, const Params& params,
    const std::function<bool(const EdgeLabelledGraph&)>& visit,
    double budget) {
  require_labels_in_range(g, params);
  const double space = assignment_space(g, params);
  if (space > budget) {
    std::ostringstream os;
    os << "oracle search space " << space << " exceeds the budget of "
       << budget;
    throw CapacityError(os.str());
  }
  CompletionSearch search(g, params, visit);
  return search.run();
}

std::optional<EdgeLabelledGraph> oracle_complete(const EdgeLabelledGraph& g,
                                                 const Params& params,
                                                 double budget) {
  std::optional<EdgeLabelledGraph> found;
  for_each_completion(
      g, params,
      [&](const EdgeLabelledGraph& completion) {
        found = completion;
        return false;
      },
      budget);
  return found;
}

std::vector<EdgeLabelledGraph> all_completions(const EdgeLabelledGraph& g,
                                               const Params& params,
                                               double budget) {
  std::vector<EdgeLabelledGraph> out;
  for_each_completion(
      g, params,
      [&](const EdgeLabelledGraph& completion) {
        out.push_back(completion);
        return true;
      },
      budget);
  return out;
}

SandwichReport check_sandwich(const EdgeLabelledGraph& g,
                              const CompletionResult& magic_result,
                              const EdgeLabelledGraph& other, Distance magic) {
  if (!magic_result.completed()) {
    throw PreconditionError("sandwich check needs a completed magic run");
  }
  const EdgeLabelledGraph& bar = magic_result.trace.final_graph;
  const int n = g.vertex_count();
  if (bar.vertex_count() != n || other.vertex_count() != n ||
      !other.is_complete()) {
    throw PreconditionError("other graph is not a completion of the input");
  }
  for (const Edge& e : g.edges()) {
    if (other.label(e.u, e.v) != e.d) {
      throw PreconditionError("other graph changes an input edge");
    }
  }
  SandwichReport report;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const Distance d_bar = bar.label(u, v);
      const Distance d_other = other.label(u, v);
      const bool above = d_other >= d_bar && d_bar >= magic;
      const bool below = d_other <= d_bar && d_bar <= magic;
      if (!above && !below) {
        report.holds = false;
        report.first_violation = SandwichViolation{u, v, d_bar, d_other};
        return report;
      }
    }
  }
  return report;
}

}  // namespace metric_completer
