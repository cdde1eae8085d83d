#pragma once

#include <span>
#include <string>

#include "irts/network.hpp"

namespace irts {

/// Comma-separated external ids, for traces and diagnostics.
std::string join_path(const RoadNetwork& net, std::span<const VertexId> path);

/// Same, but external ids when `net` is non-null and raw indices otherwise.
std::string join_path(const RoadNetwork* net, std::span<const VertexId> path);

}  // namespace irts
