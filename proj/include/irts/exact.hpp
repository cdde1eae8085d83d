#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "irts/core.hpp"

namespace irts {

/// Switches for the four safe pruning rules. Disabling a rule only makes the
/// search slower; the plain budget test TC <= b on every extension stays on.
struct PruningRules {
  bool revisit_before_task = true;  // P1
  bool revisit_after_task = true;   // P2
  bool task_order_registry = true;  // P3
  bool euclidean_bound = true;      // P4

  static PruningRules none() { return {false, false, false, false}; }
};

struct ExactStats {
  std::size_t dequeued = 0;
  std::size_t generated = 0;
  std::size_t pruned_revisit = 0;   // P1 + P2
  std::size_t pruned_registry = 0;  // P3
  std::size_t pruned_bound = 0;     // P4 or plain budget
};

struct ExactOptions {
  PruningRules rules;
  /// Observer for every dequeued path (before any test).
  std::function<void(const PathState&)> on_dequeue;
  /// Per-step trace sink, or nullptr.
  std::ostream* trace = nullptr;
};

/**
 * @brief Best (minimum) travel cost per ordered task sequence, keyed also by
 * the vertex the path currently stands on.
 *
 * The end vertex is part of the key because a path may stand on an earlier
 * task again (a task embedded on a road is passed through); two paths with the
 * same ordered tasks are only interchangeable when they continue from the
 * same place.
 */
class VisitedTaskRegistry {
 public:
  /// True when a path with the same key and travel <= p.travel was already
  /// registered; otherwise records p.travel and returns false.
  bool check_and_register(const PathState& p);

  std::size_t size() const { return best_.size(); }

 private:
  std::map<std::pair<std::vector<VertexId>, VertexId>, double> best_;
};

/// P1/P2: false iff u already occurs at or after the last task position
/// (position 0, the source, when no task has been visited).
bool may_extend(const PathState& p, VertexId u);

/// P3 test-and-register for a path whose last vertex is a task.
bool check_p3(const PathState& p, VisitedTaskRegistry& registry);

/// P4: TC(p) plus the straight-line distance from its end to d exceeds b.
bool check_p4(const PathState& p, const Query& q);

/// Exact skyline by best-first search in (detour, travel, FIFO) order.
SkylineSet exact_skyline(const Query& q, const ExactOptions& options = {},
                         ExactStats* stats = nullptr);

}  // namespace irts
