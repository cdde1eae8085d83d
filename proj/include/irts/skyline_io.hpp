#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "irts/core.hpp"

namespace irts {

/// A skyline record as read back from disk, with external vertex ids.
struct SkylineRecord {
  double detour = 0.0;
  double travel = 0.0;
  double reward = 0.0;
  std::vector<ExternalId> path;
};

/// One `detour travel reward id...` line per point, in detour order.
void write_skyline_text(std::ostream& os, const SkylineSet& skyline, const RoadNetwork& net);

/// JSON array of {"detour","travel","reward","path"} objects.
void write_skyline_json(std::ostream& os, const SkylineSet& skyline, const RoadNetwork& net);

/// Reads either format (JSON when the first non-blank character is `[`).
std::vector<SkylineRecord> read_skyline(std::istream& is);
std::vector<SkylineRecord> read_skyline_file(const std::string& path);

/// Objective-only view, for evaluation against another skyline.
SkylineSet to_skyline(const std::vector<SkylineRecord>& records);

}  // namespace irts
