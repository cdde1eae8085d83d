#include "irts/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace irts {

namespace {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double sample_reward(Rng& rng, RewardDist dist) {
  switch (dist) {
    case RewardDist::equal:
      return 1.0;
    case RewardDist::uniform:
      return static_cast<double>(std::uniform_int_distribution<int>(1, 20)(rng));
    case RewardDist::exponential: {
      double x = std::exponential_distribution<double>(1.0)(rng);
      return std::round(x * 100.0) / 100.0 + 0.01;
    }
  }
  return 1.0;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_real(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || !std::isfinite(x)) throw InputError(key + ": bad number '" + v + "'");
  return x;
}

std::uint64_t to_count(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  unsigned long long x = 0;
  try {
    x = std::stoull(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.front() == '-') {
    throw InputError(key + ": bad integer '" + v + "'");
  }
  return x;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw InputError(key + ": expected true or false, got '" + v + "'");
}

SolverKind to_solver(const std::string& key, const std::string& v) {
  auto s = parse_solver(v);
  if (!s) throw InputError(key + ": unknown solver '" + v + "'");
  return *s;
}

std::optional<SweepParameter> parse_parameter(const std::string& name) {
  if (name == "pref_cost") return SweepParameter::pref_cost;
  if (name == "budget_factor") return SweepParameter::budget_factor;
  if (name == "num_tasks") return SweepParameter::num_tasks;
  if (name == "reward_dist") return SweepParameter::reward_dist;
  if (name == "clusters") return SweepParameter::clusters;
  return std::nullopt;
}

void apply_parameter(ScenarioConfig& cfg, SweepParameter p, const std::string& value) {
  switch (p) {
    case SweepParameter::pref_cost:
      cfg.pref_cost_target = to_real("pref_cost", value);
      if (!(cfg.pref_cost_target > 0.0)) throw InputError("pref_cost must be positive");
      break;
    case SweepParameter::budget_factor:
      cfg.budget_factor = to_real("budget_factor", value);
      if (!(cfg.budget_factor >= 1.0)) throw InputError("budget_factor must be at least 1");
      break;
    case SweepParameter::num_tasks:
      cfg.num_tasks = to_count("num_tasks", value);
      if (cfg.num_tasks == 0) throw InputError("num_tasks must be positive");
      break;
    case SweepParameter::reward_dist: {
      auto d = parse_reward_dist(value);
      if (!d) throw InputError("reward_dist: unknown distribution '" + value + "'");
      cfg.reward_dist = *d;
      break;
    }
    case SweepParameter::clusters:
      if (value == "none" || value.empty()) {
        cfg.clusters.reset();
      } else {
        cfg.clusters = to_count("clusters", value);
        if (*cfg.clusters == 0) throw InputError("clusters must be at least 1");
      }
      break;
  }
}

std::string parameter_value(const ScenarioConfig& cfg, SweepParameter p) {
  switch (p) {
    case SweepParameter::pref_cost:
      return format_real(cfg.pref_cost_target);
    case SweepParameter::budget_factor:
      return format_real(cfg.budget_factor);
    case SweepParameter::num_tasks:
      return std::to_string(cfg.num_tasks);
    case SweepParameter::reward_dist:
      return std::string(reward_dist_name(cfg.reward_dist));
    case SweepParameter::clusters:
      return cfg.clusters ? std::to_string(*cfg.clusters) : "none";
  }
  return "";
}

// Picks `count` members of `pool`: either a uniform sample or `clusters`
// groups, each a random centroid plus its nearest unpicked pool members.
std::vector<VertexId> pick_tasks(const RoadNetwork& net, std::vector<VertexId> pool,
                                 const ScenarioConfig& cfg, Rng& rng) {
  if (pool.size() <= cfg.num_tasks) return pool;
  std::vector<VertexId> picked;
  if (!cfg.clusters) {
    for (std::size_t i = 0; i < cfg.num_tasks; ++i) {
      std::size_t j = i + uniform_index(rng, pool.size() - i);
      std::swap(pool[i], pool[j]);
      picked.push_back(pool[i]);
    }
    return picked;
  }

  std::size_t c = std::min(*cfg.clusters, cfg.num_tasks);
  std::vector<VertexId> centroids;
  for (std::size_t i = 0; i < c; ++i) {
    std::size_t j = i + uniform_index(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
    centroids.push_back(pool[i]);
  }
  std::vector<char> taken(net.vertex_count(), 0);
  for (VertexId v : centroids) taken[v] = 1;
  for (std::size_t i = 0; i < c; ++i) {
    std::size_t group = cfg.num_tasks / c + (i < cfg.num_tasks % c ? 1 : 0);
    picked.push_back(centroids[i]);
    auto dist = shortest_travel_costs(net, centroids[i]);
    std::vector<VertexId> near;
    for (VertexId t : pool) {
      if (!taken[t]) near.push_back(t);
    }
    std::sort(near.begin(), near.end(), [&](VertexId a, VertexId b) {
      return std::tie(dist[a], a) < std::tie(dist[b], b);
    });
    for (std::size_t n = 0; n + 1 < group && n < near.size(); ++n) {
      taken[near[n]] = 1;
      picked.push_back(near[n]);
    }
  }
  return picked;
}

}  // namespace

RoadNetwork make_grid_network(const GridSpec& spec) {
  if (spec.rows == 0 || spec.cols == 0) throw InputError("grid must have at least one vertex");
  if (!(spec.cell > 0.0) || !(spec.jitter_low > 0.0) || spec.jitter_high < spec.jitter_low) {
    throw InputError("invalid grid cost parameters");
  }
  Rng rng(spec.seed);
  RoadNetwork net;
  const double spacing = spec.cell * spec.jitter_low;
  for (std::size_t r = 0; r < spec.rows; ++r) {
    for (std::size_t c = 0; c < spec.cols; ++c) {
      net.add_vertex(static_cast<ExternalId>(r * spec.cols + c),
                     Point{static_cast<double>(c) * spacing, static_cast<double>(r) * spacing});
    }
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  auto id = [&](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * spec.cols + c); };
  for (std::size_t r = 0; r < spec.rows; ++r) {
    for (std::size_t c = 0; c < spec.cols; ++c) {
      if (c + 1 < spec.cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < spec.rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  for (auto [u, v] : edges) {
    net.add_edge(u, v, spec.cell * uniform_real(rng, spec.jitter_low, spec.jitter_high));
  }
  if (spec.task_sites > edges.size()) throw InputError("more task sites than grid edges");
  for (std::size_t i = 0; i < spec.task_sites; ++i) {
    std::size_t j = i + uniform_index(rng, edges.size() - i);
    std::swap(edges[i], edges[j]);
    auto [u, v] = edges[i];
    double cost = *net.edge_cost(u, v);
    net.embed_task(u, v, cost * uniform_real(rng, 0.2, 0.8), 1.0);
  }
  return net;
}

std::optional<RewardDist> parse_reward_dist(std::string_view name) {
  if (name == "equal") return RewardDist::equal;
  if (name == "uniform") return RewardDist::uniform;
  if (name == "exponential") return RewardDist::exponential;
  return std::nullopt;
}

std::string_view reward_dist_name(RewardDist dist) {
  switch (dist) {
    case RewardDist::equal:
      return "equal";
    case RewardDist::uniform:
      return "uniform";
    case RewardDist::exponential:
      return "exponential";
  }
  return "?";
}

Scenario gen_scenario(const RoadNetwork& net, const ScenarioConfig& cfg) {
  if (!(cfg.budget_factor >= 1.0)) throw ScenarioError("budget factor must be at least 1");
  Rng rng(cfg.seed);
  const std::vector<VertexId> sites = net.task_ids();
  std::vector<VertexId> endpoints;
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    if (!(net.vertex(v).reward > 0.0)) endpoints.push_back(v);
  }
  if (endpoints.size() < 2) throw ScenarioError("network too small for a preferred path");

  const double lo = 0.8 * cfg.pref_cost_target;
  const double hi = 1.2 * cfg.pref_cost_target;
  std::optional<Route> route;
  for (int attempt = 0; attempt < 1000 && !route; ++attempt) {
    VertexId s = endpoints[uniform_index(rng, endpoints.size())];
    auto dist = shortest_travel_costs(net, s, hi);
    std::vector<VertexId> eligible;
    for (VertexId v : endpoints) {
      if (v != s && dist[v] >= lo && dist[v] <= hi) eligible.push_back(v);
    }
    if (eligible.empty()) continue;
    route = shortest_travel_path(net, s, eligible[uniform_index(rng, eligible.size())]);
  }
  if (!route) {
    throw ScenarioError("no shortest path within 20% of " + format_real(cfg.pref_cost_target) +
                        " after 1000 draws");
  }

  Scenario sc;
  sc.budget = cfg.budget_factor * route->cost;
  sc.pref = PreferredPath(net, std::move(route->vertices));
  auto from_s = shortest_travel_costs(net, sc.pref.source(), sc.budget);
  auto from_d = shortest_travel_costs(net, sc.pref.destination(), sc.budget);
  std::vector<VertexId> pool;
  for (VertexId t : sites) {
    if (!definitely_greater(from_s[t] + from_d[t], sc.budget)) pool.push_back(t);
  }
  if (pool.empty()) throw ScenarioError("no task can be completed within the budget");

  sc.tasks = TaskSet(net.vertex_count());
  for (VertexId t : pick_tasks(net, std::move(pool), cfg, rng)) {
    sc.tasks.add(t, sample_reward(rng, cfg.reward_dist));
  }
  return sc;
}

void write_tasks(std::ostream& os, const TaskSet& tasks, const RoadNetwork& net) {
  for (VertexId t : tasks.ids()) {
    os << net.external_id(t) << ' ' << format_real(tasks.reward(t)) << '\n';
  }
}

void write_query(std::ostream& os, const Scenario& sc, const RoadNetwork& net) {
  os << "source=" << net.external_id(sc.pref.source()) << '\n'
     << "destination=" << net.external_id(sc.pref.destination()) << '\n'
     << "budget=" << format_real(sc.budget) << '\n'
     << "path=";
  auto verts = sc.pref.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    os << (i ? "," : "") << net.external_id(verts[i]);
  }
  os << '\n';
}

Evaluation evaluate(const SkylineSet& result, const SkylineSet& baseline) {
  Evaluation ev;
  if (!baseline.empty()) {
    std::size_t found = 0;
    for (const SkylinePoint& b : baseline.points()) {
      bool hit = std::any_of(result.points().begin(), result.points().end(),
                             [&](const SkylinePoint& r) {
                               return approx_equal(r.detour, b.detour) &&
                                      approx_equal(r.reward, b.reward);
                             });
      found += hit ? 1 : 0;
    }
    ev.recall = static_cast<double>(found) / static_cast<double>(baseline.size());
  }
  if (!result.empty()) {
    std::size_t good = 0;
    for (const SkylinePoint& r : result.points()) {
      bool dominated = std::any_of(baseline.points().begin(), baseline.points().end(),
                                   [&](const SkylinePoint& b) {
                                     return dominates(b.objective(), r.objective());
                                   });
      good += dominated ? 0 : 1;
    }
    ev.precision = static_cast<double>(good) / static_cast<double>(result.size());
  }
  return ev;
}

SweepSpec parse_sweep_spec(std::istream& in) {
  SweepSpec spec;
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::vector<std::string>> values;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InputError("sweep line " + std::to_string(line_no) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "vary") {
        auto p = parse_parameter(value);
        if (!p) throw InputError("vary: unknown parameter '" + value + "'");
        spec.vary = *p;
      } else if (key == "values") {
        values = split_list(value);
      } else if (key == "repetitions") {
        spec.repetitions = to_count(key, value);
      } else if (key == "seed") {
        spec.seed = to_count(key, value);
      } else if (key == "solvers") {
        spec.solvers.clear();
        for (const auto& s : split_list(value)) spec.solvers.push_back(to_solver(key, s));
      } else if (key == "baseline") {
        spec.baseline = to_solver(key, value);
      } else if (key == "k") {
        spec.k = to_count(key, value);
        if (spec.k == 0) throw InputError("k must be at least 1");
      } else if (key == "timing") {
        spec.timing = to_bool(key, value);
      } else if (key == "force") {
        spec.force = to_bool(key, value);
      } else if (key == "network") {
        spec.network = value;
      } else if (key == "grid_rows") {
        spec.grid.rows = to_count(key, value);
      } else if (key == "grid_cols") {
        spec.grid.cols = to_count(key, value);
      } else if (key == "grid_cell") {
        spec.grid.cell = to_real(key, value);
      } else if (key == "task_sites") {
        spec.grid.task_sites = to_count(key, value);
      } else if (key == "grid_seed") {
        spec.grid.seed = to_count(key, value);
      } else if (auto p = parse_parameter(key)) {
        apply_parameter(spec.defaults, *p, value);
      } else {
        throw InputError("unknown key '" + key + "'");
      }
    } catch (const InputError& e) {
      throw InputError("sweep line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (values) {
    spec.values = *values;
  } else if (spec.vary != SweepParameter::budget_factor) {
    spec.values = {parameter_value(spec.defaults, spec.vary)};
  }
  if (spec.values.empty()) throw InputError("sweep has no values");
  // Validate every value up front.
  for (const auto& v : spec.values) {
    ScenarioConfig probe = spec.defaults;
    apply_parameter(probe, spec.vary, v);
  }
  return spec;
}

SweepResult run_sweep(const RoadNetwork& net, const SweepSpec& spec) {
  using Clock = std::chrono::steady_clock;
  SweepResult result;
  auto timed = [&](SolverKind kind, const Query& q, double& ms) {
    SolveOptions opts;
    opts.k = spec.k;
    auto t0 = Clock::now();
    SkylineSet sky = solve(kind, q, opts);
    ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return sky;
  };
  auto needs_guard = [](SolverKind k) {
    return k == SolverKind::exact || k == SolverKind::oracle;
  };

  for (std::size_t cell = 0; cell < spec.values.size(); ++cell) {
    ScenarioConfig cfg = spec.defaults;
    apply_parameter(cfg, spec.vary, spec.values[cell]);
    bool uses_exact = needs_guard(spec.baseline) ||
                      std::any_of(spec.solvers.begin(), spec.solvers.end(), needs_guard);
    if (uses_exact && !spec.force && cfg.pref_cost_target > 1000.0) {
      throw InputError("exact/oracle solvers are limited to preferred paths up to 1 km; "
                       "set force=true to override");
    }
    for (std::size_t rep = 0; rep < spec.repetitions; ++rep) {
      cfg.seed = splitmix64(spec.seed ^ splitmix64(cell * 1'000'003ULL + rep));
      ++result.scenarios;
      Scenario sc;
      try {
        sc = gen_scenario(net, cfg);
      } catch (const ScenarioError&) {
        ++result.failed_scenarios;
        continue;
      }
      Query q(net, sc.pref, sc.tasks, sc.budget);
      double baseline_ms = 0.0;
      SkylineSet baseline = timed(spec.baseline, q, baseline_ms);
      for (SolverKind kind : spec.solvers) {
        EvalRecord rec;
        rec.solver = std::string(solver_name(kind));
        rec.baseline = std::string(solver_name(spec.baseline));
        rec.seed = cfg.seed;
        rec.scenario = cfg;
        SkylineSet sky;
        if (kind == spec.baseline) {
          sky = baseline;
          rec.runtime_ms = baseline_ms;
        } else {
          sky = timed(kind, q, rec.runtime_ms);
        }
        Evaluation ev = evaluate(sky, baseline);
        rec.size = sky.size();
        rec.precision = ev.precision;
        rec.recall = ev.recall;
        result.records.push_back(std::move(rec));
      }
    }
  }
  return result;
}

void write_records_csv(std::ostream& os, const std::vector<EvalRecord>& records, bool timing) {
  os << kRecordHeader << '\n';
  for (const EvalRecord& r : records) {
    os << r.solver << ',' << r.seed << ',' << format_real(r.scenario.pref_cost_target) << ','
       << format_real(r.scenario.budget_factor) << ',' << r.scenario.num_tasks << ','
       << reward_dist_name(r.scenario.reward_dist) << ',';
    if (r.scenario.clusters) os << *r.scenario.clusters;
    os << ',';
    if (timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", r.runtime_ms);
      os << buf;
    }
    os << ',' << r.size << ',';
    if (r.precision) os << format_real(*r.precision);
    os << ',';
    if (r.recall) os << format_real(*r.recall);
    os << '\n';
  }
}

std::vector<SummaryRow> summarize(const std::vector<EvalRecord>& records, SweepParameter vary) {
  struct Acc {
    SummaryRow row;
    double runtime = 0.0, size = 0.0, precision = 0.0, recall = 0.0;
    std::size_t n_precision = 0, n_recall = 0;
  };
  std::vector<Acc> accs;
  std::map<std::pair<std::string, std::string>, std::size_t> index;
  for (const EvalRecord& r : records) {
    std::string cell = parameter_value(r.scenario, vary);
    auto [it, fresh] = index.try_emplace({cell, r.solver}, accs.size());
    if (fresh) {
      accs.emplace_back();
      accs.back().row.solver = r.solver;
      accs.back().row.cell = cell;
    }
    Acc& a = accs[it->second];
    ++a.row.count;
    a.runtime += r.runtime_ms;
    a.size += static_cast<double>(r.size);
    if (r.precision) {
      a.precision += *r.precision;
      ++a.n_precision;
    }
    if (r.recall) {
      a.recall += *r.recall;
      ++a.n_recall;
    }
  }
  std::vector<SummaryRow> rows;
  for (Acc& a : accs) {
    auto n = static_cast<double>(a.row.count);
    a.row.mean_runtime_ms = a.runtime / n;
    a.row.mean_size = a.size / n;
    if (a.n_precision) a.row.mean_precision = a.precision / static_cast<double>(a.n_precision);
    if (a.n_recall) a.row.mean_recall = a.recall / static_cast<double>(a.n_recall);
    rows.push_back(std::move(a.row));
  }
  return rows;
}

void write_summary(std::ostream& os, const std::vector<SummaryRow>& rows,
                   std::string_view baseline, bool timing) {
  bool optimistic = baseline != "exact" && baseline != "oracle";
  os << "baseline: " << baseline << (optimistic ? " (precision/recall are optimistic)" : "")
     << '\n';
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-12s %-8s %6s %12s %8s %10s %10s\n", "cell", "solver", "n",
                "runtime_ms", "size", "precision", "recall");
  os << buf;
  for (const SummaryRow& r : rows) {
    std::string p = r.mean_precision ? std::to_string(*r.mean_precision) : "n/a";
    std::string c = r.mean_recall ? std::to_string(*r.mean_recall) : "n/a";
    char rt[32] = "-";
    if (timing) std::snprintf(rt, sizeof rt, "%.3f", r.mean_runtime_ms);
    std::snprintf(buf, sizeof buf, "%-12s %-8s %6zu %12s %8.2f %10s %10s\n", r.cell.c_str(),
                  r.solver.c_str(), r.count, rt, r.mean_size, p.c_str(), c.c_str());
    os << buf;
  }
}

}  // namespace irts
