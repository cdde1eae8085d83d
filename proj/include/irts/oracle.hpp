#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "irts/core.hpp"

namespace irts {

/// Size guards for exhaustive enumeration.
struct OracleLimits {
  std::size_t max_vertices = 14;
  std::size_t max_tasks = 4;
  std::size_t max_paths = 10'000'000;
};

class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reference skyline: enumerates every walk s→d with travel <= b (vertex
/// revisits allowed), keeps those with a task, then filters non-dominated
/// points. Throws OracleLimitError rather than truncating.
SkylineSet brute_skyline(const Query& q, const OracleLimits& limits = {});

struct LegCost {
  double detour = 0.0;
  double travel = 0.0;
};

/// Exhaustive lexicographic (detour, travel) minimum over walks a→b with
/// travel <= budget_cap.
std::optional<LegCost> brute_min_detour_leg(const RoadNetwork& net, const PreferredPath& pref,
                                            VertexId a, VertexId b, double budget_cap,
                                            const OracleLimits& limits = {});

}  // namespace irts
