#include "irts/exact.hpp"

#include <algorithm>
#include <ostream>

#include "irts/path_format.hpp"

namespace irts {

namespace {

struct QueueEntry {
  double detour;
  double travel;
  std::size_t seq;
  PathState path;
};

// Min-heap order on (detour, travel, seq) for std::push_heap/pop_heap.
bool later(const QueueEntry& a, const QueueEntry& b) {
  if (a.detour != b.detour) return a.detour > b.detour;
  if (a.travel != b.travel) return a.travel > b.travel;
  return a.seq > b.seq;
}

bool revisit_pruned(const PathState& p, VertexId u, const PruningRules& rules) {
  bool has_task = p.last_task_pos.has_value();
  if (has_task ? !rules.revisit_after_task : !rules.revisit_before_task) return false;
  return !may_extend(p, u);
}

}  // namespace

bool VisitedTaskRegistry::check_and_register(const PathState& p) {
  auto key = std::make_pair(p.task_seq, p.last());
  auto it = best_.find(key);
  if (it != best_.end() && !definitely_greater(it->second, p.travel)) return true;
  if (it == best_.end()) {
    best_.emplace(std::move(key), p.travel);
  } else {
    it->second = p.travel;
  }
  return false;
}

bool may_extend(const PathState& p, VertexId u) {
  std::size_t from = p.last_task_pos.value_or(0);
  return std::find(p.vertices.begin() + static_cast<std::ptrdiff_t>(from), p.vertices.end(),
                   u) == p.vertices.end();
}

bool check_p3(const PathState& p, VisitedTaskRegistry& registry) {
  return registry.check_and_register(p);
}

bool check_p4(const PathState& p, const Query& q) {
  return definitely_greater(p.travel + euclidean_lower_bound(q.net, p.last(), q.destination()),
                            q.budget);
}

SkylineSet exact_skyline(const Query& q, const ExactOptions& options, ExactStats* stats) {
  ExactStats local;
  ExactStats& st = stats ? *stats : local;
  const PruningRules& rules = options.rules;
  std::ostream* trace = options.trace;
  const VertexId dest = q.destination();

  SkylineSet skyline;
  VisitedTaskRegistry registry;
  std::vector<QueueEntry> heap;
  std::size_t seq = 0;

  heap.push_back({0.0, 0.0, seq++, PathState::start(q)});
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), later);
    PathState p = std::move(heap.back().path);
    heap.pop_back();
    ++st.dequeued;
    if (options.on_dequeue) options.on_dequeue(p);
    if (trace) {
      *trace << "pop detour=" << format_real(p.detour) << " travel=" << format_real(p.travel)
             << " reward=" << format_real(p.reward) << " path=" << join_path(q.net, p.vertices)
             << '\n';
    }
    if (definitely_greater(p.detour, q.budget)) break;

    const VertexId v = p.last();
    if (v == dest && !p.task_seq.empty()) {
      bool accepted = skyline.insert({p.detour, p.travel, p.reward, p.vertices});
      if (trace) *trace << (accepted ? "  skyline accept\n" : "  skyline reject\n");
    }
    if (rules.task_order_registry && q.tasks.is_task(v) && check_p3(p, registry)) {
      ++st.pruned_registry;
      if (trace) *trace << "  pruned by task-order registry\n";
      continue;
    }
    for (const Arc& arc : q.net.neighbors(v)) {
      if (revisit_pruned(p, arc.to, rules)) {
        ++st.pruned_revisit;
        continue;
      }
      double bound = rules.euclidean_bound ? euclidean_lower_bound(q.net, arc.to, dest) : 0.0;
      if (definitely_greater(p.travel + arc.cost + bound, q.budget)) {
        ++st.pruned_bound;
        continue;
      }
      PathState child = p.extended(arc.to, arc.cost, q);
      ++st.generated;
      double dc = child.detour;
      double tc = child.travel;
      heap.push_back({dc, tc, seq++, std::move(child)});
      std::push_heap(heap.begin(), heap.end(), later);
    }
  }
  return skyline;
}

}  // namespace irts
