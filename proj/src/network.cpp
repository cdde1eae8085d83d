#include "irts/network.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <tuple>

#include "irts/numeric.hpp"

namespace irts {

namespace {

double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Tolerance for the "edge cost >= straight-line distance" check, so that
// coordinates printed with finite precision still load.
bool shorter_than_chord(double cost, double chord) {
  return cost < chord - 1e-9 * std::max(1.0, chord);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> fields;
  std::string f;
  while (in >> f) fields.push_back(f);
  return fields;
}

bool skip_line(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

double parse_real(const std::string& text, const std::string& what, std::size_t line) {
  double value = 0.0;
  std::size_t used = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !std::isfinite(value)) {
    throw InputError("line " + std::to_string(line) + ": bad " + what + " '" + text + "'");
  }
  return value;
}

ExternalId parse_id(const std::string& text, std::size_t line) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size()) {
    throw InputError("line " + std::to_string(line) + ": bad vertex id '" + text + "'");
  }
  return value;
}

void read_vertex(RoadNetwork& net, const std::vector<std::string>& f, std::size_t line) {
  ExternalId id = parse_id(f[0], line);
  std::optional<Point> coord;
  if (f[1] != "-" || f[2] != "-") {
    if (f[1] == "-" || f[2] == "-") {
      throw InputError("line " + std::to_string(line) + ": vertex " + f[0] +
                       " has only one coordinate");
    }
    coord = Point{parse_real(f[1], "x coordinate", line), parse_real(f[2], "y coordinate", line)};
  }
  double reward = parse_real(f[3], "reward", line);
  if (reward < 0.0) {
    throw InputError("line " + std::to_string(line) + ": negative reward for vertex " + f[0]);
  }
  try {
    net.add_vertex(id, coord, reward);
  } catch (const InputError& e) {
    throw InputError("line " + std::to_string(line) + ": " + e.what());
  }
}

void read_edge(RoadNetwork& net, const std::vector<std::string>& f, std::size_t line,
               std::size_t edge_index) {
  auto u = net.find(parse_id(f[0], line));
  auto v = net.find(parse_id(f[1], line));
  const std::string where =
      "line " + std::to_string(line) + ": edge #" + std::to_string(edge_index) + " (" + f[0] +
      "," + f[1] + ")";
  if (!u || !v) throw InputError(where + ": dangling endpoint");
  double cost = parse_real(f[2], "edge cost", line);
  try {
    net.add_edge(*u, *v, cost);
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

}  // namespace

VertexId RoadNetwork::add_vertex(ExternalId id, std::optional<Point> coord, double reward) {
  if (index_.contains(id)) throw InputError("duplicate vertex id " + std::to_string(id));
  if (!(reward >= 0.0) || !std::isfinite(reward)) {
    throw InputError("invalid reward for vertex " + std::to_string(id));
  }
  auto v = static_cast<VertexId>(vertices_.size());
  vertices_.push_back(Vertex{id, coord, reward});
  adjacency_.emplace_back();
  index_.emplace(id, v);
  max_external_ = std::max(max_external_, id);
  return v;
}

void RoadNetwork::add_edge(VertexId u, VertexId v, double cost) {
  if (u >= vertices_.size() || v >= vertices_.size()) throw InputError("unknown endpoint");
  if (u == v) throw InputError("self-loop");
  if (!(cost > 0.0) || !std::isfinite(cost)) {
    throw InputError("non-positive edge cost " + std::to_string(cost));
  }
  if (edge_cost(u, v)) throw InputError("duplicate edge");
  const auto& a = vertices_[u].coord;
  const auto& b = vertices_[v].coord;
  if (a && b && shorter_than_chord(cost, distance(*a, *b))) {
    throw InputError("edge cost " + std::to_string(cost) +
                     " is shorter than the straight-line distance " +
                     std::to_string(distance(*a, *b)));
  }
  adjacency_[u].push_back(Arc{v, cost});
  adjacency_[v].push_back(Arc{u, cost});
  ++edge_count_;
}

void RoadNetwork::remove_arc(VertexId from, VertexId to) {
  auto& arcs = adjacency_[from];
  auto it = std::find_if(arcs.begin(), arcs.end(), [to](const Arc& a) { return a.to == to; });
  if (it != arcs.end()) arcs.erase(it);
}

VertexId RoadNetwork::embed_task(VertexId u, VertexId v, double offset, double reward) {
  auto cost = (u < vertices_.size() && v < vertices_.size()) ? edge_cost(u, v) : std::nullopt;
  if (!cost) throw InputError("cannot embed task: edge not found");
  if (!(offset > 0.0) || !(offset < *cost)) {
    throw InputError("cannot embed task: offset " + std::to_string(offset) +
                     " outside (0, " + std::to_string(*cost) + ")");
  }
  if (!(reward > 0.0)) throw InputError("cannot embed task: reward must be positive");

  std::optional<Point> coord;
  if (vertices_[u].coord && vertices_[v].coord) {
    const Point& a = *vertices_[u].coord;
    const Point& b = *vertices_[v].coord;
    double f = offset / *cost;
    coord = Point{a.x + f * (b.x - a.x), a.y + f * (b.y - a.y)};
  }
  remove_arc(u, v);
  remove_arc(v, u);
  --edge_count_;
  VertexId t = add_vertex(max_external_ + 1, coord, reward);
  // Bypass add_edge: interpolated coordinates satisfy the chord bound up to
  // rounding, and the split costs are positive by the offset check above.
  adjacency_[u].push_back(Arc{t, offset});
  adjacency_[t].push_back(Arc{u, offset});
  adjacency_[t].push_back(Arc{v, *cost - offset});
  adjacency_[v].push_back(Arc{t, *cost - offset});
  edge_count_ += 2;
  return t;
}

std::optional<double> RoadNetwork::edge_cost(VertexId u, VertexId v) const {
  for (const Arc& a : adjacency_[u]) {
    if (a.to == v) return a.cost;
  }
  return std::nullopt;
}

std::vector<VertexId> RoadNetwork::task_ids() const {
  std::vector<VertexId> ids;
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].reward > 0.0) ids.push_back(v);
  }
  return ids;
}

std::optional<VertexId> RoadNetwork::find(ExternalId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId RoadNetwork::require(ExternalId id) const {
  auto v = find(id);
  if (!v) throw InputError("unknown vertex id " + std::to_string(id));
  return *v;
}

RoadNetwork load_network(std::istream& vertex_records, std::istream& edge_records) {
  RoadNetwork net;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(vertex_records, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    auto f = split_fields(line);
    if (f.size() != 4) {
      throw InputError("line " + std::to_string(line_no) + ": expected `id x y reward`");
    }
    read_vertex(net, f, line_no);
  }
  line_no = 0;
  std::size_t edge_index = 0;
  while (std::getline(edge_records, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    auto f = split_fields(line);
    if (f.size() != 3) {
      throw InputError("line " + std::to_string(line_no) + ": expected `u v cost`");
    }
    read_edge(net, f, line_no, edge_index++);
  }
  return net;
}

RoadNetwork load_network(std::istream& records) {
  RoadNetwork net;
  std::string line;
  std::size_t line_no = 0;
  std::size_t edge_index = 0;
  while (std::getline(records, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    auto f = split_fields(line);
    if (f.size() == 4) {
      read_vertex(net, f, line_no);
    } else if (f.size() == 3) {
      read_edge(net, f, line_no, edge_index++);
    } else {
      throw InputError("line " + std::to_string(line_no) +
                       ": expected `id x y reward` or `u v cost`");
    }
  }
  return net;
}

RoadNetwork load_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open network file " + path);
  try {
    return load_network(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_network(std::ostream& os, const RoadNetwork& net) {
  os << "# vertices: id x y reward\n";
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    const Vertex& vx = net.vertex(v);
    os << vx.id << ' ';
    if (vx.coord) {
      os << format_real(vx.coord->x) << ' ' << format_real(vx.coord->y);
    } else {
      os << "- -";
    }
    os << ' ' << format_real(vx.reward) << '\n';
  }
  os << "# edges: u v cost\n";
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    for (const Arc& a : net.neighbors(v)) {
      if (v < a.to) {
        os << net.external_id(v) << ' ' << net.external_id(a.to) << ' ' << format_real(a.cost)
           << '\n';
      }
    }
  }
}

EmbeddedTask embed_task(const RoadNetwork& net, VertexId u, VertexId v, double offset,
                        double reward) {
  EmbeddedTask out{net, kNoVertex};
  out.task = out.network.embed_task(u, v, offset, reward);
  return out;
}

PreferredPath::PreferredPath(const RoadNetwork& net, std::vector<VertexId> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InputError("preferred path is empty");
  for (VertexId v : vertices_) {
    if (v >= net.vertex_count()) throw InputError("preferred path has an unknown vertex");
  }
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    auto c = net.edge_cost(vertices_[i], vertices_[i + 1]);
    if (!c) {
      throw InputError("preferred path vertices " +
                       std::to_string(net.external_id(vertices_[i])) + " and " +
                       std::to_string(net.external_id(vertices_[i + 1])) + " are not adjacent");
    }
    total_cost_ += *c;
    edges_.insert(key(vertices_[i], vertices_[i + 1]));
  }
}

std::vector<double> shortest_travel_costs(const RoadNetwork& net, VertexId source,
                                          double cutoff) {
  std::vector<double> dist(net.vertex_count(), kInfinity);
  using Entry = std::pair<double, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[source] = 0.0;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (d > dist[v]) continue;
    if (d > cutoff) break;
    for (const Arc& a : net.neighbors(v)) {
      double nd = d + a.cost;
      if (nd < dist[a.to]) {
        dist[a.to] = nd;
        queue.emplace(nd, a.to);
      }
    }
  }
  return dist;
}

std::optional<Route> shortest_travel_path(const RoadNetwork& net, VertexId a, VertexId b) {
  std::vector<double> dist(net.vertex_count(), kInfinity);
  std::vector<VertexId> parent(net.vertex_count(), kNoVertex);
  using Entry = std::pair<double, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[a] = 0.0;
  queue.emplace(0.0, a);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (d > dist[v]) continue;
    if (v == b) break;
    for (const Arc& arc : net.neighbors(v)) {
      double nd = d + arc.cost;
      if (nd < dist[arc.to]) {
        dist[arc.to] = nd;
        parent[arc.to] = v;
        queue.emplace(nd, arc.to);
      }
    }
  }
  if (dist[b] == kInfinity) return std::nullopt;
  Route route;
  route.cost = dist[b];
  for (VertexId v = b; v != kNoVertex; v = parent[v]) route.vertices.push_back(v);
  std::reverse(route.vertices.begin(), route.vertices.end());
  return route;
}

MinDetourTree::MinDetourTree(const RoadNetwork& net, const PreferredPath& pref,
                             VertexId source, std::span<const VertexId> targets,
                             double detour_cap)
    : source_(source),
      detour_(net.vertex_count(), kInfinity),
      travel_(net.vertex_count(), kInfinity),
      parent_(net.vertex_count(), kNoVertex),
      settled_(net.vertex_count(), 0) {
  std::vector<char> wanted(targets.empty() ? 0 : net.vertex_count(), 0);
  std::size_t remaining = 0;
  for (VertexId t : targets) {
    if (!wanted[t]) {
      wanted[t] = 1;
      ++remaining;
    }
  }

  using Entry = std::tuple<double, double, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  detour_[source] = 0.0;
  travel_[source] = 0.0;
  queue.emplace(0.0, 0.0, source);
  while (!queue.empty()) {
    auto [dc, tc, v] = queue.top();
    queue.pop();
    if (settled_[v]) continue;
    if (dc > detour_cap) break;
    settled_[v] = 1;
    order_.push_back(v);
    if (!wanted.empty() && wanted[v] && --remaining == 0) break;
    for (const Arc& a : net.neighbors(v)) {
      if (settled_[a.to]) continue;
      double nd = dc + pref.detour(v, a.to, a.cost);
      double nt = tc + a.cost;
      if (std::tie(nd, nt) < std::tie(detour_[a.to], travel_[a.to])) {
        detour_[a.to] = nd;
        travel_[a.to] = nt;
        parent_[a.to] = v;
        queue.emplace(nd, nt, a.to);
      }
    }
  }
}

std::vector<VertexId> MinDetourTree::path_to(VertexId v) const {
  std::vector<VertexId> path;
  if (!settled_[v]) return path;
  for (VertexId x = v; x != kNoVertex; x = parent_[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<DetourRoute> min_detour_path(const RoadNetwork& net, VertexId a, VertexId b,
                                           const PreferredPath& pref, double budget_cap) {
  const VertexId target[] = {b};
  MinDetourTree tree(net, pref, a, target, budget_cap);
  if (!tree.reached(b) || definitely_greater(tree.travel(b), budget_cap)) return std::nullopt;
  return DetourRoute{tree.path_to(b), tree.detour(b), tree.travel(b)};
}

double euclidean_lower_bound(const RoadNetwork& net, VertexId v, VertexId d) {
  const auto& a = net.vertex(v).coord;
  const auto& b = net.vertex(d).coord;
  if (!a || !b) return 0.0;
  return distance(*a, *b);
}

}  // namespace irts
