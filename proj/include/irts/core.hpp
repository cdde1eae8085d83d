#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "irts/network.hpp"
#include "irts/numeric.hpp"

namespace irts {

/**
 * @brief The tasks offered to one query, with their rewards.
 *
 * Only vertices in the set pay a reward; network vertices outside it are
 * ordinary intersections for that query.
 */
class TaskSet {
 public:
  TaskSet() = default;
  explicit TaskSet(std::size_t vertex_count) : reward_(vertex_count, 0.0) {}

  /// All positive-reward vertices of `net`, at their stored rewards.
  static TaskSet from_network(const RoadNetwork& net);

  /// Adds or overwrites a task. Throws InputError for non-positive rewards.
  void add(VertexId v, double reward);

  bool is_task(VertexId v) const { return v < reward_.size() && reward_[v] > 0.0; }
  double reward(VertexId v) const { return v < reward_.size() ? reward_[v] : 0.0; }
  /// Task vertices in insertion order.
  std::span<const VertexId> ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }

 private:
  std::vector<double> reward_;
  std::vector<VertexId> ids_;
};

/// A query: network, preferred path (source and destination are its ends),
/// offered tasks and travel budget. Holds references; the referenced objects
/// must outlive it.
struct Query {
  Query(const RoadNetwork& net, const PreferredPath& pref, const TaskSet& tasks, double budget);

  const RoadNetwork& net;
  const PreferredPath& pref;
  const TaskSet& tasks;
  double budget;

  VertexId source() const { return pref.source(); }
  VertexId destination() const { return pref.destination(); }
};

struct PathCosts {
  double travel = 0.0;
  double detour = 0.0;
  double reward = 0.0;
};

/// Evaluates travel, detour and (distinct-task) reward of a path from scratch.
/// Throws InputError if two consecutive vertices are not adjacent.
PathCosts recompute_costs(std::span<const VertexId> path, const RoadNetwork& net,
                          const PreferredPath& pref, const TaskSet& tasks);

/// A partial path under search, with incrementally maintained costs.
struct PathState {
  std::vector<VertexId> vertices;
  double travel = 0.0;
  double detour = 0.0;
  double reward = 0.0;
  std::optional<std::size_t> last_task_pos;
  /// Distinct tasks in first-visit order.
  std::vector<VertexId> task_seq;

  static PathState start(const Query& q);
  VertexId last() const { return vertices.back(); }
  PathState extended(VertexId u, double edge_cost, const Query& q) const;
};

struct Objective {
  double detour = 0.0;
  double reward = 0.0;
};

/// Strict Pareto dominance: no worse on both, strictly better on one.
bool dominates(Objective a, Objective b);

struct SkylinePoint {
  double detour = 0.0;
  double travel = 0.0;
  double reward = 0.0;
  std::vector<VertexId> path;

  Objective objective() const { return {detour, reward}; }
};

/**
 * @brief Skyline of mutually non-dominated points, built from candidates that
 * arrive in non-decreasing detour order.
 *
 * Only the last point needs to be compared: an accepted candidate has a
 * strictly larger reward than the last point, and replaces it when the detours
 * are equal. Equal (detour, reward) candidates keep the first one found.
 */
class SkylineSet {
 public:
  /// Returns whether `cand` was accepted. Throws std::logic_error when the
  /// caller's ordering is violated.
  bool insert(SkylinePoint cand);

  std::span<const SkylinePoint> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

 private:
  std::vector<SkylinePoint> points_;
};

/// Brute-force non-dominated filter over an arbitrary multiset of points,
/// returned with strictly increasing detour. Used as an order-free reference.
std::vector<SkylinePoint> non_dominated(std::vector<SkylinePoint> points);

/// Describes why `p` is not a valid answer to `q`, or nullopt if it is:
/// starts at s, ends at d, has a task, fits the budget, and its stored costs
/// match a from-scratch evaluation.
std::optional<std::string> point_violation(const SkylinePoint& p, const Query& q);

}  // namespace irts
