#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "irts/core.hpp"
#include "irts/network.hpp"

namespace irts::testing {

// Eight-vertex worked example: P* = s-v1-v2-d, tasks t1 ($3), t2 ($4), t3 ($5).
struct WorkedExample {
  RoadNetwork net;
  VertexId s, v1, v2, d, t1, t2, t3, v4;
  PreferredPath pref;
  TaskSet tasks;
  double budget = 21.0;

  Query query() const { return Query(net, pref, tasks, budget); }
  Query query(double b) const { return Query(net, pref, tasks, b); }
};

inline WorkedExample make_worked_example(bool with_coords = false) {
  WorkedExample f;
  auto at = [&](double x, double y) -> std::optional<Point> {
    if (!with_coords) return std::nullopt;
    return Point{x, y};
  };
  f.s = f.net.add_vertex(0, at(0, 0));
  f.v1 = f.net.add_vertex(1, at(5, 0));
  f.v2 = f.net.add_vertex(2, at(10, 0));
  f.d = f.net.add_vertex(3, at(15, 0));
  f.t1 = f.net.add_vertex(4, at(0, 3), 3.0);
  f.t2 = f.net.add_vertex(5, at(5, 2), 4.0);
  f.t3 = f.net.add_vertex(6, at(15, 2), 5.0);
  f.v4 = f.net.add_vertex(7, at(10, 2));
  f.net.add_edge(f.s, f.v1, 5);
  f.net.add_edge(f.v1, f.v2, 5);
  f.net.add_edge(f.v2, f.d, 5);
  f.net.add_edge(f.s, f.t1, 3);
  f.net.add_edge(f.v1, f.t2, 2);
  f.net.add_edge(f.d, f.t3, 2);
  f.net.add_edge(f.t2, f.v4, 5);
  f.net.add_edge(f.v4, f.t3, 5);
  f.pref = PreferredPath(f.net, {f.s, f.v1, f.v2, f.d});
  f.tasks = TaskSet::from_network(f.net);
  return f;
}

struct InstanceShape {
  std::size_t max_grid_vertices = 8;
  std::size_t max_tasks = 4;
  std::size_t min_tasks = 1;
  double budget_factor = 1.5;
};

// Small jittered grid with tasks embedded on random edges. Grid costs are
// integers in [2, 6] on a lattice of spacing 2, so coordinates are valid and
// all cost sums are exact in double precision.
struct SmallInstance {
  RoadNetwork net;
  PreferredPath pref;
  TaskSet tasks;
  double budget = 0.0;

  Query query() const { return Query(net, pref, tasks, budget); }
};

inline SmallInstance random_instance(std::uint64_t seed, const InstanceShape& shape = {}) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  std::size_t rows = 0, cols = 0;
  do {
    rows = pick(2, 4);
    cols = pick(2, 4);
  } while (rows * cols > shape.max_grid_vertices);

  SmallInstance inst;
  RoadNetwork& net = inst.net;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      net.add_vertex(static_cast<ExternalId>(r * cols + c),
                     Point{2.0 * static_cast<double>(c), 2.0 * static_cast<double>(r)});
    }
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      auto v = static_cast<VertexId>(r * cols + c);
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, static_cast<VertexId>(v + cols));
    }
  }
  for (auto [u, v] : edges) net.add_edge(u, v, static_cast<double>(pick(2, 6)));

  const std::size_t grid_n = rows * cols;
  VertexId s = static_cast<VertexId>(pick(0, grid_n - 1));
  VertexId d = s;
  while (d == s) d = static_cast<VertexId>(pick(0, grid_n - 1));

  std::size_t n_tasks = pick(shape.min_tasks, shape.max_tasks);
  for (std::size_t i = 0; i < n_tasks; ++i) {
    std::vector<std::pair<VertexId, VertexId>> splittable;
    for (VertexId u = 0; u < net.vertex_count(); ++u) {
      for (const Arc& a : net.neighbors(u)) {
        if (u < a.to && a.cost >= 2.0) splittable.emplace_back(u, a.to);
      }
    }
    auto [u, v] = splittable[pick(0, splittable.size() - 1)];
    double cost = *net.edge_cost(u, v);
    double offset = static_cast<double>(pick(1, static_cast<std::size_t>(cost) - 1));
    net.embed_task(u, v, offset, static_cast<double>(pick(1, 9)));
  }

  auto route = shortest_travel_path(net, s, d);
  inst.pref = PreferredPath(net, route->vertices);
  inst.tasks = TaskSet::from_network(net);
  inst.budget = shape.budget_factor * inst.pref.total_cost();
  return inst;
}

// s, d and n tasks, pairwise adjacent, with a budget large enough that the
// task graph is complete.
inline SmallInstance complete_instance(std::size_t n_tasks, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> cost(1, 9);
  SmallInstance inst;
  RoadNetwork& net = inst.net;
  VertexId s = net.add_vertex(0);
  VertexId d = net.add_vertex(1);
  for (std::size_t i = 0; i < n_tasks; ++i) {
    net.add_vertex(static_cast<ExternalId>(2 + i), std::nullopt, static_cast<double>(1 + i));
  }
  net.add_edge(s, d, 10);
  for (VertexId u = 0; u < net.vertex_count(); ++u) {
    for (VertexId v = u + 1; v < net.vertex_count(); ++v) {
      if (u == s && v == d) continue;
      net.add_edge(u, v, cost(rng));
    }
  }
  inst.pref = PreferredPath(net, {s, d});
  inst.tasks = TaskSet::from_network(net);
  inst.budget = 1000.0;
  return inst;
}

inline std::vector<std::pair<double, double>> objectives(const SkylineSet& sky) {
  std::vector<std::pair<double, double>> out;
  for (const auto& p : sky.points()) out.emplace_back(p.detour, p.reward);
  return out;
}

inline bool same_objectives(const SkylineSet& a, const SkylineSet& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!approx_equal(a.points()[i].detour, b.points()[i].detour) ||
        !approx_equal(a.points()[i].reward, b.points()[i].reward)) {
      return false;
    }
  }
  return true;
}

}  // namespace irts::testing
