#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace irts {

/// Dense internal vertex index. External ids from input files are kept on the
/// vertex and only used at I/O boundaries.
using VertexId = std::uint32_t;
using ExternalId = std::int64_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Raised for malformed or inconsistent input records.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct Vertex {
  ExternalId id = 0;
  std::optional<Point> coord;
  double reward = 0.0;
};

struct Arc {
  VertexId to = kNoVertex;
  double cost = 0.0;
};

/**
 * @brief Undirected road network with strictly positive edge costs.
 *
 * Tasks are vertices with positive reward. A task located in the middle of a
 * road segment is embedded by splitting that segment (see embed_task).
 * Construction-phase mutators validate every invariant; once built the network
 * is treated as immutable and may be shared by concurrent queries.
 */
class RoadNetwork {
 public:
  VertexId add_vertex(ExternalId id, std::optional<Point> coord = std::nullopt,
                      double reward = 0.0);
  void add_edge(VertexId u, VertexId v, double cost);

  /// Splits edge (u,v) at `offset` from u and inserts a task vertex there.
  /// The new vertex gets the next free external id and, when both endpoints
  /// have coordinates, an interpolated coordinate.
  VertexId embed_task(VertexId u, VertexId v, double offset, double reward);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const Vertex& vertex(VertexId v) const { return vertices_.at(v); }
  std::span<const Arc> neighbors(VertexId v) const { return adjacency_[v]; }

  /// Cost of edge {u,v}, or nullopt if the vertices are not adjacent.
  std::optional<double> edge_cost(VertexId u, VertexId v) const;

  /// Vertices carrying a positive reward, in increasing id order.
  std::vector<VertexId> task_ids() const;

  std::optional<VertexId> find(ExternalId id) const;
  VertexId require(ExternalId id) const;
  ExternalId external_id(VertexId v) const { return vertices_[v].id; }

 private:
  void remove_arc(VertexId from, VertexId to);

  std::vector<Vertex> vertices_;
  std::vector<std::vector<Arc>> adjacency_;
  std::unordered_map<ExternalId, VertexId> index_;
  std::size_t edge_count_ = 0;
  ExternalId max_external_ = -1;
};

/// Reads vertex records `id x y reward` (x and y may be `-`) and edge records
/// `u v cost`. Blank lines and lines starting with `#` are skipped.
RoadNetwork load_network(std::istream& vertex_records, std::istream& edge_records);

/// Single-file variant: records are told apart by field count (4 for a
/// vertex, 3 for an edge). Every vertex must precede the edges that use it.
RoadNetwork load_network(std::istream& records);
RoadNetwork load_network_file(const std::string& path);

void write_network(std::ostream& os, const RoadNetwork& net);

struct EmbeddedTask {
  RoadNetwork network;
  VertexId task = kNoVertex;
};

/// Returns a copy of `net` with a task embedded on edge (u,v).
EmbeddedTask embed_task(const RoadNetwork& net, VertexId u, VertexId v, double offset,
                        double reward);

/**
 * @brief A worker's preferred path together with its unordered edge set.
 */
class PreferredPath {
 public:
  PreferredPath() = default;
  /// Throws InputError if consecutive vertices are not adjacent.
  PreferredPath(const RoadNetwork& net, std::vector<VertexId> vertices);

  std::span<const VertexId> vertices() const { return vertices_; }
  VertexId source() const { return vertices_.front(); }
  VertexId destination() const { return vertices_.back(); }
  double total_cost() const { return total_cost_; }

  bool contains_edge(VertexId a, VertexId b) const {
    return edges_.contains(key(a, b));
  }

  /// Detour contribution of traversing edge {a,b} with the given cost.
  double detour(VertexId a, VertexId b, double cost) const {
    return contains_edge(a, b) ? 0.0 : cost;
  }

 private:
  static std::uint64_t key(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t{a} << 32) | b;
  }

  std::vector<VertexId> vertices_;
  std::unordered_set<std::uint64_t> edges_;
  double total_cost_ = 0.0;
};

struct Route {
  std::vector<VertexId> vertices;
  double cost = 0.0;
};

struct DetourRoute {
  std::vector<VertexId> vertices;
  double detour = 0.0;
  double travel = 0.0;
};

/// Single-source shortest travel costs (Dijkstra). Unreachable vertices get
/// kInfinity. `cutoff` stops the search once the frontier exceeds it.
std::vector<double> shortest_travel_costs(const RoadNetwork& net, VertexId source,
                                          double cutoff = kInfinity);

std::optional<Route> shortest_travel_path(const RoadNetwork& net, VertexId a, VertexId b);

/**
 * @brief Single-source label-setting search ordered by (detour, travel).
 *
 * Both components are additive over non-negative edge contributions, so the
 * lexicographic pair is settled Dijkstra-style. The search stops early once
 * every vertex in `targets` is settled or the frontier detour exceeds
 * `detour_cap`.
 */
class MinDetourTree {
 public:
  MinDetourTree(const RoadNetwork& net, const PreferredPath& pref, VertexId source,
                std::span<const VertexId> targets = {}, double detour_cap = kInfinity);

  bool reached(VertexId v) const { return settled_[v]; }
  double detour(VertexId v) const { return detour_[v]; }
  double travel(VertexId v) const { return travel_[v]; }
  std::vector<VertexId> path_to(VertexId v) const;

  /// Settled vertices in the order they left the queue.
  std::span<const VertexId> settle_order() const { return order_; }

 private:
  VertexId source_;
  std::vector<double> detour_;
  std::vector<double> travel_;
  std::vector<VertexId> parent_;
  std::vector<char> settled_;
  std::vector<VertexId> order_;
};

/// Minimum-detour path from a to b (ties broken by travel). Returns nullopt
/// when b is unreachable or the path's travel exceeds `budget_cap`.
std::optional<DetourRoute> min_detour_path(const RoadNetwork& net, VertexId a, VertexId b,
                                           const PreferredPath& pref, double budget_cap);

/// Straight-line distance when both vertices have coordinates, 0 otherwise.
double euclidean_lower_bound(const RoadNetwork& net, VertexId v, VertexId d);

}  // namespace irts
