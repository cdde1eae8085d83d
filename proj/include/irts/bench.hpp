#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "irts/core.hpp"
#include "irts/solver.hpp"

namespace irts {

/// Scenario generation failures (no suitable preferred path, no feasible task).
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * @brief Jittered 4-connected grid with planar coordinates.
 *
 * Edge costs are uniform in [jitter_low, jitter_high] x cell. Coordinates are
 * laid out at jitter_low x cell spacing so that every edge is at least as
 * long as its chord and the Euclidean bound stays valid. `task_sites` task
 * vertices (reward 1) are embedded on random edges.
 */
struct GridSpec {
  std::size_t rows = 200;
  std::size_t cols = 200;
  double cell = 50.0;
  double jitter_low = 0.8;
  double jitter_high = 1.2;
  std::size_t task_sites = 1500;
  std::uint64_t seed = 1;
};

RoadNetwork make_grid_network(const GridSpec& spec);

enum class RewardDist { equal, uniform, exponential };

std::optional<RewardDist> parse_reward_dist(std::string_view name);
std::string_view reward_dist_name(RewardDist dist);

struct ScenarioConfig {
  double pref_cost_target = 2500.0;
  double budget_factor = 1.25;
  std::size_t num_tasks = 20;
  RewardDist reward_dist = RewardDist::uniform;
  std::optional<std::size_t> clusters;
  std::uint64_t seed = 0;
};

struct Scenario {
  PreferredPath pref;
  TaskSet tasks;
  double budget = 0.0;
};

/// Samples a shortest path within ±20% of the target cost, then draws tasks
/// from the network's task sites that can be completed within the budget.
Scenario gen_scenario(const RoadNetwork& net, const ScenarioConfig& cfg);

/// Writes `id reward` lines for the scenario's tasks.
void write_tasks(std::ostream& os, const TaskSet& tasks, const RoadNetwork& net);
/// Writes `source=`, `destination=`, `budget=` and `path=` lines.
void write_query(std::ostream& os, const Scenario& sc, const RoadNetwork& net);

struct Evaluation {
  std::optional<double> precision;
  std::optional<double> recall;
};

/// Recall: share of baseline points matched exactly by a result point.
/// Precision: share of result points no baseline point dominates.
Evaluation evaluate(const SkylineSet& result, const SkylineSet& baseline);

/// Which scenario parameter a sweep varies.
enum class SweepParameter { pref_cost, budget_factor, num_tasks, reward_dist, clusters };

/// Flat key=value sweep description. Unset keys keep the default cell.
struct SweepSpec {
  SweepParameter vary = SweepParameter::budget_factor;
  std::vector<std::string> values{"1.10", "1.25", "1.50"};
  std::size_t repetitions = 50;
  std::uint64_t seed = 42;
  std::vector<SolverKind> solvers{SolverKind::doh, SolverKind::kgh, SolverKind::mdh,
                                  SolverKind::mrh};
  SolverKind baseline = SolverKind::doh;
  std::size_t k = kDefaultNeighbors;
  bool timing = true;
  /// Allow exact/oracle on preferred paths longer than 1 km.
  bool force = false;
  ScenarioConfig defaults;

  /// Network source: "grid" (see `grid`) or a network file path.
  std::string network = "grid";
  GridSpec grid;
};

/// Throws InputError on unknown keys or malformed values.
SweepSpec parse_sweep_spec(std::istream& in);

struct EvalRecord {
  std::string solver;
  std::string baseline;
  std::uint64_t seed = 0;
  ScenarioConfig scenario;
  double runtime_ms = 0.0;
  std::size_t size = 0;
  std::optional<double> precision;
  std::optional<double> recall;
};

struct SweepResult {
  std::vector<EvalRecord> records;
  std::size_t scenarios = 0;
  std::size_t failed_scenarios = 0;
};

/// Deterministic given spec.seed: one record per (scenario, solver), in
/// (value, repetition, solver) order.
SweepResult run_sweep(const RoadNetwork& net, const SweepSpec& spec);

inline constexpr std::string_view kRecordHeader =
    "solver,seed,pref_cost,budget_factor,num_tasks,reward_dist,clusters,runtime_ms,size,"
    "precision,recall";

/// CSV with kRecordHeader. With `timing` false the runtime column is left
/// blank so that repeated runs are byte-identical.
void write_records_csv(std::ostream& os, const std::vector<EvalRecord>& records, bool timing);

struct SummaryRow {
  std::string solver;
  std::string cell;  // value of the varied parameter
  std::size_t count = 0;
  double mean_runtime_ms = 0.0;
  double mean_size = 0.0;
  std::optional<double> mean_precision;
  std::optional<double> mean_recall;
};

std::vector<SummaryRow> summarize(const std::vector<EvalRecord>& records, SweepParameter vary);
/// With `timing` false the runtime column prints "-".
void write_summary(std::ostream& os, const std::vector<SummaryRow>& rows,
                   std::string_view baseline, bool timing = true);

}  // namespace irts
