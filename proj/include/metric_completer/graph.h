#ifndef METRIC_COMPLETER_GRAPH_H_
#define METRIC_COMPLETER_GRAPH_H_

// Edge-labelled graphs with partial symmetric distances, plus the brute-force
// searches used to reason about them: homomorphisms, automorphisms, partial
// automorphism extension and canonical cycle forms.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "metric_completer/params.h"

namespace metric_completer {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Distance d = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Dense symmetric distance matrix over vertices 0..n-1. A stored 0 means the
// pair is not an edge; the diagonal is always 0.
class EdgeLabelledGraph {
 public:
  EdgeLabelledGraph() = default;
  explicit EdgeLabelledGraph(int vertex_count);

  int vertex_count() const { return n_; }

  // 0 when u == v or the pair is not an edge.
  Distance label(Vertex u, Vertex v) const {
    return matrix_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::optional<Distance> distance(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const { return label(u, v) != 0; }

  // Unchecked apart from the loop guard; build_graph validates labels.
  void set_distance(Vertex u, Vertex v, Distance d);

  // Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;
  bool is_complete() const;

  friend bool operator==(const EdgeLabelledGraph&,
                         const EdgeLabelledGraph&) = default;

 private:
  int n_ = 0;
  std::vector<Distance> matrix_;
};

// Validates vertex indices, loops, conflicting duplicates (FormatError) and
// labels outside 1..delta (RangeError). Consistent duplicates are merged.
EdgeLabelledGraph build_graph(int vertex_count, std::span<const Edge> edges,
                              const Params& params);

// Cycle whose i-th label joins vertex i to vertex i+1 (mod n).
using LabelSequence = std::vector<Distance>;
EdgeLabelledGraph cycle_graph(const LabelSequence& labels, const Params& params);

struct Violation {
  std::array<Vertex, 3> vertices{};  // ascending
  std::array<Distance, 3> sides{};   // ascending
  TriangleStatus status = TriangleStatus::kAllowed;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Every fully labelled vertex triple that is not allowed, in lexicographic
// vertex order.
std::vector<Violation> violations(const EdgeLabelledGraph& g,
                                  const Params& params);

// Maps vertices of `from` to vertices of `to` so that every edge of `from`
// lands on an edge of `to` with the same label.
std::optional<std::vector<Vertex>> find_homomorphism(
    const EdgeLabelledGraph& from, const EdgeLabelledGraph& to);

bool is_homomorphism(const EdgeLabelledGraph& from, const EdgeLabelledGraph& to,
                     std::span<const Vertex> map);

inline constexpr int kDefaultAutomorphismBound = 9;
inline constexpr int kDefaultEppaBound = 5;

using Permutation = std::vector<Vertex>;

bool is_automorphism(const EdgeLabelledGraph& g, std::span<const Vertex> perm);

// All automorphisms in lexicographic order of the permutation. Throws
// CapacityError above max_vertices.
std::vector<Permutation> automorphisms(
    const EdgeLabelledGraph& g, int max_vertices = kDefaultAutomorphismBound);

// Injective partial function on vertices, stored as (source, image) pairs
// sorted by source.
struct PartialMap {
  std::vector<std::pair<Vertex, Vertex>> pairs;

  friend bool operator==(const PartialMap&, const PartialMap&) = default;
};

// True when the map is an isomorphism between the subgraphs induced on its
// domain and its range.
bool is_partial_automorphism(const EdgeLabelledGraph& g, const PartialMap& p);

// Every partial automorphism of g, including the empty map.
std::vector<PartialMap> partial_automorphisms(const EdgeLabelledGraph& g);

struct EppaReport {
  bool holds = true;
  std::size_t partial_automorphisms_checked = 0;
  std::optional<PartialMap> first_failure;
};

// Checks that every partial automorphism of `a` extends to an automorphism of
// `b`, where `inclusion` embeds a into b as an induced subgraph.
// Throws PreconditionError when the inclusion is not an embedding and
// CapacityError when either graph exceeds its bound.
EppaReport verify_eppa_witness(const EdgeLabelledGraph& a,
                               const EdgeLabelledGraph& b,
                               std::span<const Vertex> inclusion,
                               int max_a_vertices = kDefaultEppaBound,
                               int max_b_vertices = kDefaultAutomorphismBound);

// Least sequence over all rotations and reflections. Throws RangeError for
// fewer than three labels.
LabelSequence canonical_cycle(const LabelSequence& labels);

}  // namespace metric_completer

#endif  // METRIC_COMPLETER_GRAPH_H_
