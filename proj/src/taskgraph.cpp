#include "irts/taskgraph.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <tuple>

namespace irts {

namespace {

bool leg_order(const TaskLeg& a, const TaskLeg& b) {
  return std::tie(a.detour, a.travel, a.to) < std::tie(b.detour, b.travel, b.to);
}

}  // namespace

TaskGraph::TaskGraph(VertexId source, VertexId destination)
    : source_(source), destination_(destination), out_(1) {}

std::vector<VertexId> TaskGraph::nodes() const {
  std::vector<VertexId> n;
  n.push_back(source_);
  n.insert(n.end(), tasks_.begin(), tasks_.end());
  n.push_back(destination_);
  return n;
}

bool TaskGraph::has_node(VertexId v) const {
  return v == source_ || v == destination_ ||
         std::find(tasks_.begin(), tasks_.end(), v) != tasks_.end();
}

std::size_t TaskGraph::slot(VertexId v) const {
  if (v == source_) return 0;
  auto it = std::find(tasks_.begin(), tasks_.end(), v);
  if (it == tasks_.end()) return out_.size();
  return 1 + static_cast<std::size_t>(it - tasks_.begin());
}

double TaskGraph::reward(VertexId v) const {
  auto it = std::find(tasks_.begin(), tasks_.end(), v);
  return it == tasks_.end() ? 0.0 : task_rewards_[static_cast<std::size_t>(it - tasks_.begin())];
}

void TaskGraph::add_task(VertexId v, double reward) {
  if (has_node(v)) throw std::invalid_argument("task graph node added twice");
  tasks_.push_back(v);
  task_rewards_.push_back(reward);
  out_.emplace_back();
}

void TaskGraph::add_leg(TaskLeg leg) {
  if (leg.from == leg.to) throw std::invalid_argument("self leg");
  if (leg.to == source_ || leg.from == destination_) {
    throw std::invalid_argument("legs may not enter s or leave d");
  }
  std::size_t s = slot(leg.from);
  if (s >= out_.size() || !has_node(leg.to)) throw std::invalid_argument("leg endpoint missing");
  auto& legs = out_[s];
  auto pos = std::upper_bound(legs.begin(), legs.end(), leg, leg_order);
  legs.insert(pos, std::move(leg));
}

std::span<const TaskLeg> TaskGraph::out_legs(VertexId v) const {
  std::size_t s = slot(v);
  if (s >= out_.size()) return {};
  return out_[s];
}

const TaskLeg* TaskGraph::find_leg(VertexId from, VertexId to) const {
  for (const TaskLeg& l : out_legs(from)) {
    if (l.to == to) return &l;
  }
  return nullptr;
}

std::size_t TaskGraph::leg_count() const {
  std::size_t n = 0;
  for (const auto& legs : out_) n += legs.size();
  return n;
}

TaskGraph build_task_graph(const Query& q) {
  const VertexId s = q.source();
  const VertexId d = q.destination();
  TaskGraph tg(s, d);
  tg.set_pass_rewards(q.tasks);

  std::vector<VertexId> targets(q.tasks.ids().begin(), q.tasks.ids().end());
  auto make_leg = [](const MinDetourTree& tree, VertexId from, VertexId to) {
    return TaskLeg{from, to, tree.detour(to), tree.travel(to), tree.path_to(to)};
  };

  // Legs out of s: every task whose min-detour leg fits the budget.
  std::vector<std::pair<VertexId, double>> included;  // task, travel of its s-leg
  {
    MinDetourTree tree(q.net, q.pref, s, targets, q.budget);
    for (VertexId t : targets) {
      if (tree.reached(t) && !definitely_greater(tree.travel(t), q.budget)) {
        included.emplace_back(t, tree.travel(t));
      }
    }
    for (auto [t, travel] : included) tg.add_task(t, q.tasks.reward(t));
    for (auto [t, travel] : included) tg.add_leg(make_leg(tree, s, t));
  }

  std::vector<VertexId> leg_targets;
  for (auto [t, travel] : included) leg_targets.push_back(t);
  leg_targets.push_back(d);

  for (auto [ti, s_travel] : included) {
    const double cap = q.budget - s_travel;
    // The t→d leg is unconditional, so the search may not stop at `cap`.
    MinDetourTree tree(q.net, q.pref, ti, leg_targets);
    for (auto [tj, unused] : included) {
      if (tj == ti || !tree.reached(tj)) continue;
      if (definitely_greater(tree.travel(tj), cap)) continue;
      tg.add_leg(make_leg(tree, ti, tj));
    }
    if (tree.reached(d)) tg.add_leg(make_leg(tree, ti, d));
  }
  return tg;
}

TaskGraph knn_reduce(const TaskGraph& tg, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  TaskGraph out(tg.source(), tg.destination());
  out.set_pass_rewards(tg.pass_rewards());
  for (VertexId t : tg.task_nodes()) out.add_task(t, tg.reward(t));
  for (const TaskLeg& l : tg.out_legs(tg.source())) out.add_leg(l);
  for (VertexId t : tg.task_nodes()) {
    std::size_t kept = 0;
    // out_legs is already in (detour, travel, id) order.
    for (const TaskLeg& l : tg.out_legs(t)) {
      if (l.to == tg.destination()) {
        out.add_leg(l);
      } else if (kept < k) {
        out.add_leg(l);
        ++kept;
      }
    }
  }
  return out;
}

std::vector<VertexId> expand_to_network_path(const TaskGraph& tg,
                                             std::span<const VertexId> tg_path) {
  std::vector<VertexId> path;
  if (tg_path.empty()) return path;
  path.push_back(tg_path.front());
  for (std::size_t i = 0; i + 1 < tg_path.size(); ++i) {
    const TaskLeg* leg = tg.find_leg(tg_path[i], tg_path[i + 1]);
    if (!leg) throw std::invalid_argument("task graph path uses a missing leg");
    path.insert(path.end(), leg->path.begin() + 1, leg->path.end());
  }
  return path;
}

void write_task_graph(std::ostream& os, const TaskGraph& tg, const RoadNetwork& net) {
  for (VertexId n : tg.nodes()) {
    for (const TaskLeg& l : tg.out_legs(n)) {
      os << net.external_id(l.from) << ' ' << net.external_id(l.to) << ' '
         << format_real(l.detour) << ' ' << format_real(l.travel) << '\n';
    }
  }
}

}  // namespace irts
