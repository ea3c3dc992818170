#include "metric_completer/params.h"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "metric_completer/errors.h"

namespace metric_completer {

ParamsCheck validate_params(int delta, int k, int c) {
  auto reject = [](ParamsClause clause, std::string message) {
    return ParamsCheck{false, clause, std::move(message)};
  };
  if (delta <= 0 || k <= 0 || c <= 0) {
    return reject(ParamsClause::kMalformed, "parameters must be positive");
  }
  if (delta < 2) {
    return reject(ParamsClause::kDeltaTooSmall, "delta must be at least 2");
  }
  if (k < 1) return reject(ParamsClause::kKTooSmall, "K must be at least 1");
  if (k > delta) return reject(ParamsClause::kKExceedsDelta, "K exceeds delta");
  if (c <= 2 * delta + k) {
    return reject(ParamsClause::kCTooSmall, "C must exceed 2*delta+K");
  }
  if (c > 3 * delta + 1) {
    return reject(ParamsClause::kCTooLarge, "C exceeds 3*delta+1");
  }
  return ParamsCheck{true, ParamsClause::kNone, "accepted"};
}

Params Params::create(int delta, int k, int c) {
  ParamsCheck check = validate_params(delta, k, c);
  if (!check.accepted) {
    std::ostringstream os;
    os << "unacceptable parameters (delta=" << delta << ", K=" << k
       << ", C=" << c << "): " << check.message;
    throw ParameterError(os.str());
  }
  return Params(delta, k, c);
}

std::string_view to_string(TriangleStatus status) {
  switch (status) {
    case TriangleStatus::kAllowed:
      return "allowed";
    case TriangleStatus::kNonMetric:
      return "non-metric";
    case TriangleStatus::kKViolation:
      return "K-bound";
    case TriangleStatus::kCViolation:
      return "C-bound";
  }
  return "?";
}

TriangleStatus classify_triangle(Distance a, Distance b, Distance c,
                                 const Params& params) {
  if (!params.contains(a) || !params.contains(b) || !params.contains(c)) {
    std::ostringstream os;
    os << "triangle (" << a << "," << b << "," << c
       << ") has a side outside 1.." << params.delta();
    throw RangeError(os.str());
  }
  const int longest = std::max({a, b, c});
  const int perimeter = a + b + c;
  if (2 * longest > perimeter) return TriangleStatus::kNonMetric;
  if (perimeter % 2 == 1 && perimeter < 2 * params.k() + 1) {
    return TriangleStatus::kKViolation;
  }
  if (perimeter >= params.c()) return TriangleStatus::kCViolation;
  return TriangleStatus::kAllowed;
}

std::vector<Distance> magic_distances(const Params& params) {
  const int lo = std::max(params.k(), (params.delta() + 1) / 2);
  const int hi = (params.c() - params.delta() - 1) / 2;
  std::vector<Distance> out;
  for (int m = lo; m <= hi; ++m) out.push_back(m);
  return out;
}

std::vector<Distance> magic_oracle(const Params& params) {
  std::vector<Distance> out;
  for (Distance a = 1; a <= params.delta(); ++a) {
    bool all = true;
    for (Distance b = 1; b <= params.delta() && all; ++b) {
      all = is_allowed(a, a, b, params);
    }
    if (all) out.push_back(a);
  }
  return out;
}

bool is_magic(Distance m, const Params& params) {
  const auto magic = magic_distances(params);
  return std::find(magic.begin(), magic.end(), m) != magic.end();
}

Distance default_magic(const Params& params) {
  return magic_distances(params).back();
}

void require_magic(Distance m, const Params& params) {
  if (!is_magic(m, params)) {
    std::ostringstream os;
    os << m << " not magic";
    throw ParameterError(os.str());
  }
}

std::vector<Distance> fork_range(Distance a, Distance b, const Params& params) {
  if (!params.contains(a) || !params.contains(b)) {
    std::ostringstream os;
    os << "fork (" << a << "," << b << ") outside 1.." << params.delta();
    throw RangeError(os.str());
  }
  std::vector<Distance> out;
  for (Distance c = 1; c <= params.delta(); ++c) {
    if (is_allowed(a, b, c, params)) out.push_back(c);
  }
  return out;
}

Distance fork_choice(Distance a, Distance b, Distance m, const Params& params) {
  require_magic(m, params);
  const auto range = fork_range(a, b, params);
  if (range.empty()) {
    std::ostringstream os;
    os << "fork (" << a << "," << b << ") has no allowed completion";
    throw PreconditionError(os.str());
  }
  return *std::min_element(range.begin(), range.end(),
                           [m](Distance x, Distance y) {
                             return std::abs(x - m) < std::abs(y - m);
                           });
}

int time_function(Distance x, Distance m, int delta) {
  if (x < 1 || x > delta) {
    throw RangeError("distance " + std::to_string(x) + " outside 1.." +
                     std::to_string(delta));
  }
  if (x == m) {
    throw RangeError("the fill value " + std::to_string(m) + " has no rank");
  }
  return x < m ? 2 * x - 1 : 2 * (delta - x);
}

std::optional<Distance> inverse_time(int rank, Distance m, int delta) {
  if (rank % 2 == 1) {
    const Distance x = (rank + 1) / 2;
    if (x >= 1 && x < m) return x;
  } else {
    const Distance x = delta - rank / 2;
    if (x > m && x <= delta) return x;
  }
  return std::nullopt;
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kPlus:
      return "F+";
    case Family::kMinus:
      return "F-";
    case Family::kCBound:
      return "FC";
    case Family::kFinalM:
      return "FinalM";
    case Family::kShortestPath:
      return "SP";
  }
  return "?";
}

ForkFamilies::ForkFamilies(Distance magic, const Params& params)
    : magic_(magic), delta_(params.delta()) {
  require_magic(magic, params);
  const int side = delta_ + 1;
  origin_.assign(static_cast<std::size_t>(side) * side * side, -1);
  for (Distance x = 1; x <= delta_; ++x) {
    if (x == magic) continue;
    ForkFamily family;
    family.distance = x;
    family.rank = time_function(x, magic, delta_);
    for (Distance a = 1; a <= delta_; ++a) {
      for (Distance b = 1; b <= delta_; ++b) {
        const Fork f{a, b};
        if (f.sum() == x) family.plus.push_back(f);
        if (f.difference() == x) family.minus.push_back(f);
        if (params.c() - 1 - f.sum() == x) family.c_bound.push_back(f);
      }
    }
    if (x < magic) {
      for (const Fork& f : family.plus) {
        family.members.push_back({f, Family::kPlus});
      }
      for (const Fork& f : family.c_bound) {
        family.members.push_back({f, Family::kCBound});
      }
    } else {
      for (const Fork& f : family.minus) {
        family.members.push_back({f, Family::kMinus});
      }
    }
    std::sort(family.members.begin(), family.members.end(),
              [](const TaggedFork& l, const TaggedFork& r) {
                return l.fork < r.fork;
              });
    for (const TaggedFork& t : family.members) {
      origin_[(static_cast<std::size_t>(x) * side + t.fork.a) * side +
              t.fork.b] = static_cast<signed char>(t.origin);
    }
    families_.push_back(std::move(family));
  }
}

const ForkFamily& ForkFamilies::at(Distance x) const {
  if (x < 1 || x > delta_ || x == magic_) {
    throw RangeError("no fork family for distance " + std::to_string(x));
  }
  return families_[x < magic_ ? x - 1 : x - 2];
}

std::optional<Family> ForkFamilies::origin(Distance x, Distance a,
                                           Distance b) const {
  if (x < 1 || x > delta_ || a < 1 || a > delta_ || b < 1 || b > delta_) {
    return std::nullopt;
  }
  const int side = delta_ + 1;
  const signed char tag =
      origin_[(static_cast<std::size_t>(x) * side + a) * side + b];
  if (tag < 0) return std::nullopt;
  return static_cast<Family>(tag);
}

ForkFamilies fork_families(Distance magic, const Params& params) {
  return ForkFamilies(magic, params);
}

}  // namespace metric_completer
