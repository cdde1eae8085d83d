#include "irts/core.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace irts {

std::string format_real(double value) {
  if (value == 0.0) return "0";  // folds -0
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

TaskSet TaskSet::from_network(const RoadNetwork& net) {
  TaskSet tasks(net.vertex_count());
  for (VertexId v : net.task_ids()) tasks.add(v, net.vertex(v).reward);
  return tasks;
}

void TaskSet::add(VertexId v, double reward) {
  if (!(reward > 0.0)) throw InputError("task reward must be positive");
  if (v >= reward_.size()) reward_.resize(v + 1, 0.0);
  if (reward_[v] == 0.0) ids_.push_back(v);
  reward_[v] = reward;
}

Query::Query(const RoadNetwork& n, const PreferredPath& p, const TaskSet& t, double b)
    : net(n), pref(p), tasks(t), budget(b) {
  if (p.vertices().empty()) throw InputError("query has no preferred path");
  if (t.is_task(p.source()) || t.is_task(p.destination())) {
    throw InputError("source and destination cannot be tasks");
  }
}

PathCosts recompute_costs(std::span<const VertexId> path, const RoadNetwork& net,
                          const PreferredPath& pref, const TaskSet& tasks) {
  PathCosts c;
  std::vector<VertexId> seen;
  for (std::size_t i = 0; i < path.size(); ++i) {
    VertexId v = path[i];
    if (tasks.is_task(v) && std::find(seen.begin(), seen.end(), v) == seen.end()) {
      seen.push_back(v);
      c.reward += tasks.reward(v);
    }
    if (i + 1 == path.size()) break;
    auto cost = net.edge_cost(v, path[i + 1]);
    if (!cost) {
      throw InputError("vertices " + std::to_string(net.external_id(v)) + " and " +
                       std::to_string(net.external_id(path[i + 1])) + " are not adjacent");
    }
    c.travel += *cost;
    c.detour += pref.detour(v, path[i + 1], *cost);
  }
  return c;
}

PathState PathState::start(const Query& q) {
  PathState p;
  p.vertices.push_back(q.source());
  return p;
}

PathState PathState::extended(VertexId u, double edge_cost, const Query& q) const {
  PathState p;
  p.vertices.reserve(vertices.size() + 1);
  p.vertices = vertices;
  p.vertices.push_back(u);
  p.travel = travel + edge_cost;
  p.detour = detour + q.pref.detour(last(), u, edge_cost);
  p.reward = reward;
  p.last_task_pos = last_task_pos;
  p.task_seq = task_seq;
  if (q.tasks.is_task(u)) {
    p.last_task_pos = p.vertices.size() - 1;
    if (std::find(task_seq.begin(), task_seq.end(), u) == task_seq.end()) {
      p.task_seq.push_back(u);
      p.reward += q.tasks.reward(u);
    }
  }
  return p;
}

bool dominates(Objective a, Objective b) {
  return (definitely_less(a.detour, b.detour) && !definitely_less(a.reward, b.reward)) ||
         (!definitely_greater(a.detour, b.detour) && definitely_greater(a.reward, b.reward));
}

bool SkylineSet::insert(SkylinePoint cand) {
  if (points_.empty()) {
    points_.push_back(std::move(cand));
    return true;
  }
  const SkylinePoint& last = points_.back();
  if (definitely_less(cand.detour, last.detour)) {
    throw std::logic_error("skyline candidates must arrive in non-decreasing detour order");
  }
  if (!definitely_greater(cand.reward, last.reward)) return false;
  if (approx_equal(cand.detour, last.detour)) points_.pop_back();
  points_.push_back(std::move(cand));
  return true;
}

std::vector<SkylinePoint> non_dominated(std::vector<SkylinePoint> points) {
  std::vector<SkylinePoint> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < points.size() && keep; ++j) {
      if (j == i) continue;
      if (dominates(points[j].objective(), points[i].objective())) keep = false;
      // Equal objectives: keep the earliest representative.
      if (j < i && approx_equal(points[j].detour, points[i].detour) &&
          approx_equal(points[j].reward, points[i].reward)) {
        keep = false;
      }
    }
    if (keep) out.push_back(points[i]);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SkylinePoint& a, const SkylinePoint& b) { return a.detour < b.detour; });
  return out;
}

std::optional<std::string> point_violation(const SkylinePoint& p, const Query& q) {
  if (p.path.empty()) return "empty path";
  if (p.path.front() != q.source()) return "path does not start at the source";
  if (p.path.back() != q.destination()) return "path does not end at the destination";
  PathCosts c;
  try {
    c = recompute_costs(p.path, q.net, q.pref, q.tasks);
  } catch (const InputError& e) {
    return std::string("broken path: ") + e.what();
  }
  if (!(c.reward > 0.0)) return "path performs no task";
  if (definitely_greater(c.travel, q.budget)) return "travel exceeds the budget";
  if (!approx_equal(c.travel, p.travel)) return "stored travel disagrees with recomputation";
  if (!approx_equal(c.detour, p.detour)) return "stored detour disagrees with recomputation";
  if (!approx_equal(c.reward, p.reward)) return "stored reward disagrees with recomputation";
  return std::nullopt;
}

}  // namespace irts
