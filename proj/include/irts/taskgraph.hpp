#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "irts/core.hpp"

namespace irts {

/// A directed leg of the task graph: the minimum-detour network path between
/// two task-graph nodes.
struct TaskLeg {
  VertexId from = kNoVertex;
  VertexId to = kNoVertex;
  double detour = 0.0;
  double travel = 0.0;
  std::vector<VertexId> path;
};

/**
 * @brief Condensed directed graph over {s} ∪ feasible tasks ∪ {d}.
 *
 * Nodes are network vertex ids. Out-edges of each node are kept sorted by
 * (detour, travel, target id). There are no edges into s, out of d, or
 * from a node to itself.
 */
class TaskGraph {
 public:
  TaskGraph(VertexId source, VertexId destination);

  VertexId source() const { return source_; }
  VertexId destination() const { return destination_; }

  /// s, then tasks in insertion order, then d.
  std::vector<VertexId> nodes() const;
  std::span<const VertexId> task_nodes() const { return tasks_; }
  bool has_node(VertexId v) const;

  double reward(VertexId v) const;
  void add_task(VertexId v, double reward);
  void add_leg(TaskLeg leg);

  std::span<const TaskLeg> out_legs(VertexId v) const;
  const TaskLeg* find_leg(VertexId from, VertexId to) const;
  std::size_t leg_count() const;

  /// Rewards of every offered task, including those a leg merely passes
  /// through; used to price expanded network paths.
  void set_pass_rewards(const TaskSet& tasks) { pass_rewards_ = tasks; }
  const TaskSet& pass_rewards() const { return pass_rewards_; }

 private:
  std::size_t slot(VertexId v) const;

  VertexId source_;
  VertexId destination_;
  std::vector<VertexId> tasks_;
  std::vector<double> task_rewards_;
  // out_[0] = s, out_[1 + i] = tasks_[i]; d has no out-legs.
  std::vector<std::vector<TaskLeg>> out_;
  TaskSet pass_rewards_;
};

/// One min-detour search from s and from each reachable task.
TaskGraph build_task_graph(const Query& q);

/// Keeps, for each task node, only its k best task→task legs by
/// (detour, travel, target id). Legs from s and legs into d are untouched.
TaskGraph knn_reduce(const TaskGraph& tg, std::size_t k);

/// Concatenates the realized legs of a node sequence into one network path.
/// Throws std::invalid_argument when two consecutive nodes have no leg.
std::vector<VertexId> expand_to_network_path(const TaskGraph& tg,
                                             std::span<const VertexId> tg_path);

/// Debug dump: one `from to detour travel` line per leg, external ids.
void write_task_graph(std::ostream& os, const TaskGraph& tg, const RoadNetwork& net);

}  // namespace irts
