#include "irts/oracle.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace irts {

namespace {

void check_size(const RoadNetwork& net, const OracleLimits& limits) {
  if (net.vertex_count() > limits.max_vertices) {
    throw OracleLimitError("oracle: " + std::to_string(net.vertex_count()) +
                           " vertices exceed the limit of " +
                           std::to_string(limits.max_vertices));
  }
}

// All-pairs travel distances by Floyd-Warshall. Deliberately separate from the
// Dijkstra code under test; only used to stop walks that cannot reach the
// target within the cap.
std::vector<std::vector<double>> all_pairs(const RoadNetwork& net) {
  std::size_t n = net.vertex_count();
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, kInfinity));
  for (VertexId v = 0; v < n; ++v) {
    dist[v][v] = 0.0;
    for (const Arc& a : net.neighbors(v)) dist[v][a.to] = std::min(dist[v][a.to], a.cost);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
  return dist;
}

// Depth-first walk enumeration. `visit` sees every walk that ends at `target`.
class WalkEnumerator {
 public:
  WalkEnumerator(const RoadNetwork& net, const PreferredPath& pref, VertexId target, double cap,
                 std::size_t max_paths)
      : net_(net), pref_(pref), target_(target), cap_(cap), max_paths_(max_paths),
        to_target_(net.vertex_count(), kInfinity) {
    auto dist = all_pairs(net);
    for (VertexId v = 0; v < net.vertex_count(); ++v) to_target_[v] = dist[v][target];
  }

  void run(VertexId start,
           const std::function<void(const std::vector<VertexId>&, double, double)>& visit) {
    walk_.assign(1, start);
    if (definitely_greater(to_target_[start], cap_)) return;
    recurse(0.0, 0.0, visit);
  }

 private:
  void recurse(double travel, double detour,
               const std::function<void(const std::vector<VertexId>&, double, double)>& visit) {
    if (++explored_ > max_paths_) {
      throw OracleLimitError("oracle: more than " + std::to_string(max_paths_) +
                             " walks enumerated");
    }
    VertexId v = walk_.back();
    if (v == target_) visit(walk_, travel, detour);
    for (const Arc& a : net_.neighbors(v)) {
      double t = travel + a.cost;
      if (definitely_greater(t + to_target_[a.to], cap_)) continue;
      walk_.push_back(a.to);
      recurse(t, detour + pref_.detour(v, a.to, a.cost), visit);
      walk_.pop_back();
    }
  }

  const RoadNetwork& net_;
  const PreferredPath& pref_;
  VertexId target_;
  double cap_;
  std::size_t max_paths_;
  std::vector<double> to_target_;
  std::vector<VertexId> walk_;
  std::size_t explored_ = 0;
};

}  // namespace

SkylineSet brute_skyline(const Query& q, const OracleLimits& limits) {
  check_size(q.net, limits);
  if (q.tasks.size() > limits.max_tasks) {
    throw OracleLimitError("oracle: " + std::to_string(q.tasks.size()) +
                           " tasks exceed the limit of " + std::to_string(limits.max_tasks));
  }
  std::vector<SkylinePoint> candidates;
  WalkEnumerator walks(q.net, q.pref, q.destination(), q.budget, limits.max_paths);
  walks.run(q.source(), [&](const std::vector<VertexId>& walk, double travel, double detour) {
    double reward = 0.0;
    std::vector<VertexId> seen;
    for (VertexId v : walk) {
      if (q.tasks.is_task(v) && std::find(seen.begin(), seen.end(), v) == seen.end()) {
        seen.push_back(v);
        reward += q.tasks.reward(v);
      }
    }
    if (seen.empty()) return;
    // Only the best walk per (detour, reward) matters; the dedup happens in the
    // final filter, but dropping dominated walks early keeps memory flat.
    for (const SkylinePoint& c : candidates) {
      if (dominates(c.objective(), {detour, reward}) ||
          (approx_equal(c.detour, detour) && approx_equal(c.reward, reward))) {
        return;
      }
    }
    std::erase_if(candidates, [&](const SkylinePoint& c) {
      return dominates({detour, reward}, c.objective());
    });
    candidates.push_back({detour, travel, reward, walk});
  });

  SkylineSet out;
  for (SkylinePoint& p : non_dominated(std::move(candidates))) out.insert(std::move(p));
  return out;
}

std::optional<LegCost> brute_min_detour_leg(const RoadNetwork& net, const PreferredPath& pref,
                                            VertexId a, VertexId b, double budget_cap,
                                            const OracleLimits& limits) {
  check_size(net, limits);
  std::optional<LegCost> best;
  WalkEnumerator walks(net, pref, b, budget_cap, limits.max_paths);
  walks.run(a, [&](const std::vector<VertexId>&, double travel, double detour) {
    if (!best || detour < best->detour || (detour == best->detour && travel < best->travel)) {
      best = LegCost{detour, travel};
    }
  });
  return best;
}

}  // namespace irts
