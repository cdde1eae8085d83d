#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <vector>

#include "irts/core.hpp"
#include "irts/taskgraph.hpp"

namespace irts {

/// How a dequeued path is extended.
enum class ExpansionPolicy {
  all,         // every neighbor not on the path (DOH, kGH)
  min_detour,  // the single neighbor minimizing DC(P) + d(v,u) (MDH)
  max_reward,  // the single highest-reward neighbor (MRH)
};

/// A path over task-graph nodes.
struct TGPathState {
  std::vector<VertexId> nodes;
  double travel = 0.0;
  double detour = 0.0;
  double reward = 0.0;
};

struct HeuristicStats {
  std::size_t dequeued = 0;
  /// Child paths created whose last node is a task (task permutations).
  std::size_t generated = 0;
};

struct HeuristicOptions {
  std::ostream* trace = nullptr;
  /// When set, traces print external vertex ids.
  const RoadNetwork* net = nullptr;
  /// Called on every dequeued path, before any test.
  std::function<void(const TGPathState&)> on_dequeue;
};

/// Shared best-first skeleton over the task graph, ordered by
/// (detour, travel, FIFO). Skyline points carry expanded network paths.
SkylineSet task_graph_search(const TaskGraph& tg, double budget, ExpansionPolicy policy,
                             const HeuristicOptions& options = {},
                             HeuristicStats* stats = nullptr);

/// Default neighbor count for kgh.
inline constexpr std::size_t kDefaultNeighbors = 5;

SkylineSet doh(const TaskGraph& tg, double budget, const HeuristicOptions& options = {},
               HeuristicStats* stats = nullptr);
SkylineSet kgh(const TaskGraph& tg, std::size_t k, double budget,
               const HeuristicOptions& options = {}, HeuristicStats* stats = nullptr);
SkylineSet mdh(const TaskGraph& tg, double budget, const HeuristicOptions& options = {},
               HeuristicStats* stats = nullptr);
SkylineSet mrh(const TaskGraph& tg, double budget, const HeuristicOptions& options = {},
               HeuristicStats* stats = nullptr);

}  // namespace irts
