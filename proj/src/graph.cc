#include "metric_completer/graph.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "metric_completer/errors.h"

namespace metric_completer {

EdgeLabelledGraph::EdgeLabelledGraph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0) throw RangeError("negative vertex count");
  matrix_.assign(static_cast<std::size_t>(n_) * n_, 0);
}

std::optional<Distance> EdgeLabelledGraph::distance(Vertex u, Vertex v) const {
  if (u == v) return 0;
  const Distance d = label(u, v);
  if (d == 0) return std::nullopt;
  return d;
}

void EdgeLabelledGraph::set_distance(Vertex u, Vertex v, Distance d) {
  if (u == v) throw FormatError("loop at vertex " + std::to_string(u));
  matrix_[static_cast<std::size_t>(u) * n_ + v] = d;
  matrix_[static_cast<std::size_t>(v) * n_ + u] = d;
}

std::vector<Edge> EdgeLabelledGraph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (const Distance d = label(u, v)) out.push_back({u, v, d});
    }
  }
  return out;
}

std::size_t EdgeLabelledGraph::edge_count() const {
  std::size_t count = 0;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) count += label(u, v) != 0;
  }
  return count;
}

bool EdgeLabelledGraph::is_complete() const {
  return edge_count() ==
         static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ - 1) / 2;
}

EdgeLabelledGraph build_graph(int vertex_count, std::span<const Edge> edges,
                              const Params& params) {
  if (vertex_count < 0) throw FormatError("negative vertex count");
  EdgeLabelledGraph g(vertex_count);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count) {
      std::ostringstream os;
      os << "edge (" << e.u << "," << e.v << ") references a vertex outside 0.."
         << vertex_count - 1;
      throw FormatError(os.str());
    }
    if (e.u == e.v) throw FormatError("loop at vertex " + std::to_string(e.u));
    if (!params.contains(e.d)) {
      std::ostringstream os;
      os << "label " << e.d << " on (" << e.u << "," << e.v
         << ") outside 1.." << params.delta();
      throw RangeError(os.str());
    }
    const Distance existing = g.label(e.u, e.v);
    if (existing != 0 && existing != e.d) {
      std::ostringstream os;
      os << "conflicting labels " << existing << " and " << e.d << " on ("
         << e.u << "," << e.v << ")";
      throw FormatError(os.str());
    }
    g.set_distance(e.u, e.v, e.d);
  }
  return g;
}

EdgeLabelledGraph cycle_graph(const LabelSequence& labels,
                              const Params& params) {
  const int n = static_cast<int>(labels.size());
  if (n < 3) throw RangeError("a cycle needs at least three labels");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, labels[i]});
  return build_graph(n, edges, params);
}

std::vector<Violation> violations(const EdgeLabelledGraph& g,
                                  const Params& params) {
  std::vector<Violation> out;
  const int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const Distance uv = g.label(u, v);
      if (uv == 0) continue;
      for (Vertex w = v + 1; w < n; ++w) {
        const Distance uw = g.label(u, w);
        const Distance vw = g.label(v, w);
        if (uw == 0 || vw == 0) continue;
        const TriangleStatus status = classify_triangle(uv, uw, vw, params);
        if (status == TriangleStatus::kAllowed) continue;
        Violation violation{{u, v, w}, {uv, uw, vw}, status};
        std::sort(violation.sides.begin(), violation.sides.end());
        out.push_back(violation);
      }
    }
  }
  return out;
}

namespace {

bool extend_homomorphism(const EdgeLabelledGraph& from,
                         const EdgeLabelledGraph& to, std::vector<Vertex>& map,
                         Vertex next) {
  if (next == from.vertex_count()) return true;
  for (Vertex image = 0; image < to.vertex_count(); ++image) {
    bool consistent = true;
    for (Vertex prev = 0; prev < next && consistent; ++prev) {
      const Distance d = from.label(prev, next);
      if (d != 0) consistent = to.label(map[prev], image) == d;
    }
    if (!consistent) continue;
    map[next] = image;
    if (extend_homomorphism(from, to, map, next + 1)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_homomorphism(
    const EdgeLabelledGraph& from, const EdgeLabelledGraph& to) {
  std::vector<Vertex> map(from.vertex_count(), -1);
  if (extend_homomorphism(from, to, map, 0)) return map;
  return std::nullopt;
}

bool is_homomorphism(const EdgeLabelledGraph& from, const EdgeLabelledGraph& to,
                     std::span<const Vertex> map) {
  if (static_cast<int>(map.size()) != from.vertex_count()) return false;
  for (Vertex x : map) {
    if (x < 0 || x >= to.vertex_count()) return false;
  }
  for (const Edge& e : from.edges()) {
    if (to.label(map[e.u], map[e.v]) != e.d) return false;
  }
  return true;
}

bool is_automorphism(const EdgeLabelledGraph& g, std::span<const Vertex> perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n) return false;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.label(perm[u], perm[v]) != g.label(u, v)) return false;
    }
  }
  return true;
}

std::vector<Permutation> automorphisms(const EdgeLabelledGraph& g,
                                       int max_vertices) {
  if (g.vertex_count() > max_vertices) {
    std::ostringstream os;
    os << "automorphism search on " << g.vertex_count()
       << " vertices exceeds the bound of " << max_vertices;
    throw CapacityError(os.str());
  }
  Permutation perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Permutation> out;
  do {
    if (is_automorphism(g, perm)) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool is_partial_automorphism(const EdgeLabelledGraph& g, const PartialMap& p) {
  const int n = g.vertex_count();
  std::vector<bool> seen_source(n, false);
  std::vector<bool> seen_image(n, false);
  for (const auto& [x, y] : p.pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n) return false;
    if (seen_source[x] || seen_image[y]) return false;
    seen_source[x] = seen_image[y] = true;
  }
  for (std::size_t i = 0; i < p.pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < p.pairs.size(); ++j) {
      if (g.label(p.pairs[i].first, p.pairs[j].first) !=
          g.label(p.pairs[i].second, p.pairs[j].second)) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Depth-first over sources in ascending order; each source is skipped or
// mapped to an unused image consistent with the pairs chosen so far.
void collect_partial_automorphisms(const EdgeLabelledGraph& g, Vertex source,
                                   std::vector<bool>& used, PartialMap& current,
                                   std::vector<PartialMap>& out) {
  if (source == g.vertex_count()) {
    out.push_back(current);
    return;
  }
  collect_partial_automorphisms(g, source + 1, used, current, out);
  for (Vertex image = 0; image < g.vertex_count(); ++image) {
    if (used[image]) continue;
    bool consistent = true;
    for (const auto& [x, y] : current.pairs) {
      if (g.label(x, source) != g.label(y, image)) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    used[image] = true;
    current.pairs.emplace_back(source, image);
    collect_partial_automorphisms(g, source + 1, used, current, out);
    current.pairs.pop_back();
    used[image] = false;
  }
}

}  // namespace

std::vector<PartialMap> partial_automorphisms(const EdgeLabelledGraph& g) {
  std::vector<PartialMap> out;
  std::vector<bool> used(g.vertex_count(), false);
  PartialMap current;
  collect_partial_automorphisms(g, 0, used, current, out);
  return out;
}

EppaReport verify_eppa_witness(const EdgeLabelledGraph& a,
                               const EdgeLabelledGraph& b,
                               std::span<const Vertex> inclusion,
                               int max_a_vertices, int max_b_vertices) {
  if (a.vertex_count() > max_a_vertices) {
    std::ostringstream os;
    os << "EPPA check on " << a.vertex_count()
       << " vertices exceeds the bound of " << max_a_vertices;
    throw CapacityError(os.str());
  }
  if (static_cast<int>(inclusion.size()) != a.vertex_count()) {
    throw PreconditionError("inclusion map has the wrong length");
  }
  std::vector<bool> hit(b.vertex_count(), false);
  for (Vertex x : inclusion) {
    if (x < 0 || x >= b.vertex_count() || hit[x]) {
      throw PreconditionError("inclusion map is not injective into b");
    }
    hit[x] = true;
  }
  for (Vertex u = 0; u < a.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < a.vertex_count(); ++v) {
      if (a.label(u, v) != b.label(inclusion[u], inclusion[v])) {
        throw PreconditionError("a is not an induced subgraph of b");
      }
    }
  }

  const auto group = automorphisms(b, max_b_vertices);
  EppaReport report;
  for (const PartialMap& p : partial_automorphisms(a)) {
    ++report.partial_automorphisms_checked;
    const bool extends =
        std::any_of(group.begin(), group.end(), [&](const Permutation& g) {
          return std::all_of(p.pairs.begin(), p.pairs.end(),
                             [&](const auto& pair) {
                               return g[inclusion[pair.first]] ==
                                      inclusion[pair.second];
                             });
        });
    if (!extends) {
      report.holds = false;
      report.first_failure = p;
      break;
    }
  }
  return report;
}

LabelSequence canonical_cycle(const LabelSequence& labels) {
  const std::size_t n = labels.size();
  if (n < 3) throw RangeError("a cycle needs at least three labels");
  LabelSequence best = labels;
  LabelSequence candidate(n);
  for (int direction = 0; direction < 2; ++direction) {
    for (std::size_t start = 0; start < n; ++start) {
      for (std::size_t i = 0; i < n; ++i) {
        candidate[i] = direction == 0 ? labels[(start + i) % n]
                                      : labels[(start + n - i) % n];
      }
      if (candidate < best) best = candidate;
    }
  }
  return best;
}

}  // namespace metric_completer
