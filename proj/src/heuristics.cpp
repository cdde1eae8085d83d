#include "irts/heuristics.hpp"

#include <algorithm>
#include <ostream>

#include "irts/path_format.hpp"

namespace irts {

namespace {

struct QueueEntry {
  std::size_t seq;
  TGPathState path;
};

bool later(const QueueEntry& a, const QueueEntry& b) {
  if (a.path.detour != b.path.detour) return a.path.detour > b.path.detour;
  if (a.path.travel != b.path.travel) return a.path.travel > b.path.travel;
  return a.seq > b.seq;
}

bool on_path(const TGPathState& p, VertexId u) {
  return std::find(p.nodes.begin(), p.nodes.end(), u) != p.nodes.end();
}

double distinct_reward(std::span<const VertexId> path, const TaskSet& tasks) {
  std::vector<VertexId> seen;
  double r = 0.0;
  for (VertexId v : path) {
    if (tasks.is_task(v) && std::find(seen.begin(), seen.end(), v) == seen.end()) {
      seen.push_back(v);
      r += tasks.reward(v);
    }
  }
  return r;
}

// Legs are stored in (detour, travel, id) order, so the first eligible one
// minimizes DC(P) + d(v,u) with the stated tie-breaks.
const TaskLeg* pick_min_detour(const TaskGraph&, const TGPathState& p,
                               std::span<const TaskLeg> legs) {
  for (const TaskLeg& l : legs) {
    if (!on_path(p, l.to)) return &l;
  }
  return nullptr;
}

// Highest reward among eligible task neighbors (ties: smaller detour, then
// id); d only when no task neighbor is left.
const TaskLeg* pick_max_reward(const TaskGraph& tg, const TGPathState& p,
                               std::span<const TaskLeg> legs) {
  const TaskLeg* best = nullptr;
  const TaskLeg* to_dest = nullptr;
  for (const TaskLeg& l : legs) {
    if (on_path(p, l.to)) continue;
    if (l.to == tg.destination()) {
      to_dest = &l;
      continue;
    }
    if (!best || definitely_greater(tg.reward(l.to), tg.reward(best->to))) {
      best = &l;
    }
    // Equal rewards keep `best`: legs arrive in (detour, travel, id) order.
  }
  return best ? best : to_dest;
}

}  // namespace

SkylineSet task_graph_search(const TaskGraph& tg, double budget, ExpansionPolicy policy,
                             const HeuristicOptions& options, HeuristicStats* stats) {
  HeuristicStats local;
  HeuristicStats& st = stats ? *stats : local;
  std::ostream* trace = options.trace;
  const VertexId dest = tg.destination();

  SkylineSet skyline;
  std::vector<QueueEntry> heap;
  std::size_t seq = 0;
  heap.push_back({seq++, TGPathState{{tg.source()}, 0.0, 0.0, 0.0}});

  auto try_child = [&](const TGPathState& p, const TaskLeg& leg) {
    TGPathState child = p;
    child.nodes.push_back(leg.to);
    child.travel += leg.travel;
    child.detour += leg.detour;
    child.reward += tg.reward(leg.to);
    if (leg.to != dest) ++st.generated;
    double to_dest = 0.0;
    if (leg.to != dest) {
      const TaskLeg* finish = tg.find_leg(leg.to, dest);
      to_dest = finish ? finish->travel : kInfinity;
    }
    bool feasible = !definitely_greater(child.travel + to_dest, budget);
    if (trace) {
      *trace << "  child " << join_path(options.net, child.nodes) << " detour=" << format_real(child.detour)
             << " travel=" << format_real(child.travel)
             << (feasible ? " enqueued\n" : " over budget\n");
    }
    if (feasible) {
      heap.push_back({seq++, std::move(child)});
      std::push_heap(heap.begin(), heap.end(), later);
    }
  };

  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), later);
    TGPathState p = std::move(heap.back().path);
    heap.pop_back();
    ++st.dequeued;
    if (options.on_dequeue) options.on_dequeue(p);
    if (trace) {
      *trace << "pop " << join_path(options.net, p.nodes) << " detour=" << format_real(p.detour)
             << " travel=" << format_real(p.travel) << " reward=" << format_real(p.reward)
             << '\n';
    }
    if (definitely_greater(p.detour, budget)) break;

    const VertexId v = p.nodes.back();
    if (v == dest) {
      SkylinePoint point{p.detour, p.travel, 0.0, expand_to_network_path(tg, p.nodes)};
      // A leg may pass through other offered tasks; the worker collects them too.
      point.reward = distinct_reward(point.path, tg.pass_rewards());
      bool accepted = skyline.insert(std::move(point));
      if (trace) *trace << (accepted ? "  skyline accept\n" : "  skyline reject\n");
      continue;
    }

    auto legs = tg.out_legs(v);
    switch (policy) {
      case ExpansionPolicy::all:
        for (const TaskLeg& l : legs) {
          if (!on_path(p, l.to)) try_child(p, l);
        }
        break;
      case ExpansionPolicy::min_detour:
        if (const TaskLeg* l = pick_min_detour(tg, p, legs)) try_child(p, *l);
        break;
      case ExpansionPolicy::max_reward:
        if (const TaskLeg* l = pick_max_reward(tg, p, legs)) try_child(p, *l);
        break;
    }
  }
  return skyline;
}

SkylineSet doh(const TaskGraph& tg, double budget, const HeuristicOptions& options,
               HeuristicStats* stats) {
  return task_graph_search(tg, budget, ExpansionPolicy::all, options, stats);
}

SkylineSet kgh(const TaskGraph& tg, std::size_t k, double budget,
               const HeuristicOptions& options, HeuristicStats* stats) {
  return task_graph_search(knn_reduce(tg, k), budget, ExpansionPolicy::all, options, stats);
}

SkylineSet mdh(const TaskGraph& tg, double budget, const HeuristicOptions& options,
               HeuristicStats* stats) {
  return task_graph_search(tg, budget, ExpansionPolicy::min_detour, options, stats);
}

SkylineSet mrh(const TaskGraph& tg, double budget, const HeuristicOptions& options,
               HeuristicStats* stats) {
  return task_graph_search(tg, budget, ExpansionPolicy::max_reward, options, stats);
}

}  // namespace irts
