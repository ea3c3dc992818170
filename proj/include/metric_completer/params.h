#ifndef METRIC_COMPLETER_PARAMS_H_
#define METRIC_COMPLETER_PARAMS_H_

// Class parameters (delta, K, C), forbidden-triangle classification and the
// magic-distance machinery: fork families and the time function that drive
// the completion engine.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace metric_completer {

using Distance = int;
using Vertex = int;

// Which acceptability inequality failed, in the order they are checked.
enum class ParamsClause {
  kNone,
  kMalformed,      // some input is not a positive integer
  kDeltaTooSmall,  // delta >= 2
  kKTooSmall,      // 1 <= K
  kKExceedsDelta,  // K <= delta
  kCTooSmall,      // 2 delta + K < C
  kCTooLarge,      // C <= 3 delta + 1
};

struct ParamsCheck {
  bool accepted = false;
  ParamsClause violated = ParamsClause::kNone;
  std::string message;
};

ParamsCheck validate_params(int delta, int k, int c);

// An acceptable parameter triple. Construction through create() is the only
// way to obtain one, so every function taking Params may assume
// acceptability.
class Params {
 public:
  // Throws ParameterError naming the violated clause.
  static Params create(int delta, int k, int c);

  int delta() const { return delta_; }
  int k() const { return k_; }
  int c() const { return c_; }

  bool contains(Distance d) const { return d >= 1 && d <= delta_; }

  friend bool operator==(const Params&, const Params&) = default;

 private:
  Params(int delta, int k, int c) : delta_(delta), k_(k), c_(c) {}

  int delta_;
  int k_;
  int c_;
};

enum class TriangleStatus { kAllowed, kNonMetric, kKViolation, kCViolation };

// "allowed", "non-metric", "K-bound", "C-bound".
std::string_view to_string(TriangleStatus status);

// Precedence when several predicates fail: NonMetric, then K, then C.
// Throws RangeError when a side is outside 1..delta.
TriangleStatus classify_triangle(Distance a, Distance b, Distance c,
                                 const Params& params);

inline bool is_allowed(Distance a, Distance b, Distance c,
                       const Params& params) {
  return classify_triangle(a, b, c, params) == TriangleStatus::kAllowed;
}

// Closed interval max(K, ceil(delta/2)) .. floor((C - delta - 1)/2).
std::vector<Distance> magic_distances(const Params& params);

// Distances a for which the triangle (a, a, b) is allowed for every b.
// Computed by sweeping classify_triangle.
std::vector<Distance> magic_oracle(const Params& params);

bool is_magic(Distance m, const Params& params);

// Largest magic distance; the default fill value.
Distance default_magic(const Params& params);

// Throws ParameterError unless m is magic for params.
void require_magic(Distance m, const Params& params);

// An incomplete triangle: two present distances sharing a vertex.
struct Fork {
  Distance a = 0;
  Distance b = 0;

  Distance sum() const { return a + b; }
  Distance difference() const { return a > b ? a - b : b - a; }

  friend auto operator<=>(const Fork&, const Fork&) = default;
};

// All c in 1..delta that complete the fork to an allowed triangle, ascending.
std::vector<Distance> fork_range(Distance a, Distance b, const Params& params);

// The member of fork_range(a, b) nearest to m.
Distance fork_choice(Distance a, Distance b, Distance m, const Params& params);

// Rank at which distance x is inserted when the fill value is m:
// 2x - 1 below m, 2(delta - x) above. Throws RangeError when x == m.
int time_function(Distance x, Distance m, int delta);

// Distance inserted at rank k, if any.
std::optional<Distance> inverse_time(int rank, Distance m, int delta);

// Origin of a fork inside a family; FinalM tags fill-value insertions and
// ShortestPath the path-metric baseline.
enum class Family { kPlus, kMinus, kCBound, kFinalM, kShortestPath };

// "F+", "F-", "FC", "FinalM", "SP".
std::string_view to_string(Family family);

struct TaggedFork {
  Fork fork;
  Family origin = Family::kPlus;

  friend bool operator==(const TaggedFork&, const TaggedFork&) = default;
};

// The forks that force distance `distance` at rank `rank`. Forks are ordered
// pairs; a family is closed under swapping a and b.
struct ForkFamily {
  Distance distance = 0;
  int rank = 0;
  std::vector<Fork> plus;     // a + b == distance
  std::vector<Fork> minus;    // |a - b| == distance
  std::vector<Fork> c_bound;  // C - 1 - a - b == distance

  // The active members: plus and c_bound below the fill value, minus above.
  std::vector<TaggedFork> members;
};

class ForkFamilies {
 public:
  ForkFamilies(Distance magic, const Params& params);

  Distance magic() const { return magic_; }
  int delta() const { return delta_; }

  // One entry per distance x != magic, ascending in x. Empty families are
  // kept.
  const std::vector<ForkFamily>& families() const { return families_; }

  // Throws RangeError for x == magic or x outside 1..delta.
  const ForkFamily& at(Distance x) const;

  // Origin of (a, b) in the active family of x, if it is a member.
  std::optional<Family> origin(Distance x, Distance a, Distance b) const;

 private:
  Distance magic_;
  int delta_;
  std::vector<ForkFamily> families_;
  // origin_[(x * (delta + 1) + a) * (delta + 1) + b], -1 when absent.
  std::vector<signed char> origin_;
};

ForkFamilies fork_families(Distance magic, const Params& params);

}  // namespace metric_completer

#endif  // METRIC_COMPLETER_PARAMS_H_
