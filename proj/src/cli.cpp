#include "irts/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "irts/bench.hpp"
#include "irts/skyline_io.hpp"
#include "irts/solver.hpp"
#include "irts/taskgraph.hpp"

namespace irts {

namespace {

constexpr int kExitError = 2;
constexpr double kExactPathLimit = 1000.0;

struct Budget {
  double value = 0.0;
  bool factor = false;
};

Budget parse_budget(const std::string& text) {
  Budget b;
  std::string num = text;
  if (!num.empty() && (num.back() == 'x' || num.back() == 'X')) {
    b.factor = true;
    num.pop_back();
  }
  std::size_t used = 0;
  try {
    b.value = std::stod(num, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (num.empty() || used != num.size() || !(b.value >= 0.0)) {
    throw InputError("bad budget '" + text + "' (expected e.g. 21 or 1.25x)");
  }
  return b;
}

std::vector<ExternalId> parse_id_list(const std::string& text) {
  std::vector<ExternalId> ids;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw InputError("bad vertex id '" + item + "'");
    ids.push_back(v);
  }
  return ids;
}

// Reads `id reward` and `u v offset reward` task records; the latter are
// embedded into `net` first.
TaskSet load_tasks(const std::string& path, RoadNetwork& net) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open tasks file " + path);
  struct Pending {
    VertexId v;
    double reward;
  };
  std::vector<Pending> listed;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream fields(line);
    std::vector<std::string> f;
    std::string tok;
    while (fields >> tok) f.push_back(tok);
    const std::string where = path + ":" + std::to_string(line_no) + ": ";
    try {
      if (f.size() == 2) {
        listed.push_back({net.require(std::stoll(f[0])), std::stod(f[1])});
      } else if (f.size() == 4) {
        VertexId u = net.require(std::stoll(f[0]));
        VertexId v = net.require(std::stoll(f[1]));
        double reward = std::stod(f[3]);
        listed.push_back({net.embed_task(u, v, std::stod(f[2]), reward), reward});
      } else {
        throw InputError("expected `id reward` or `u v offset reward`");
      }
      if (!(listed.back().reward > 0.0)) throw InputError("task reward must be positive");
    } catch (const InputError& e) {
      throw InputError(where + e.what());
    } catch (const std::logic_error&) {
      throw InputError(where + "malformed number");
    }
  }
  TaskSet tasks(net.vertex_count());
  for (const auto& p : listed) tasks.add(p.v, p.reward);
  return tasks;
}

std::map<std::string, std::string> load_key_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open query file " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw InputError(path + ": expected key=value, got '" + line + "'");
    std::string value = line.substr(eq + 1);
    while (!value.empty() && (value.back() == '\r' || value.back() == ' ')) value.pop_back();
    kv[line.substr(pos, eq - pos)] = value;
  }
  return kv;
}

std::string format_ratio(std::optional<double> x) {
  if (!x) return "n/a";
  std::string s = format_real(*x);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

struct SolveArgs {
  std::string network;
  std::string tasks;
  std::string query;
  std::optional<ExternalId> source;
  std::optional<ExternalId> dest;
  std::string path;
  std::string budget;
  std::string solver = "doh";
  std::size_t k = kDefaultNeighbors;
  bool k_set = false;
  bool trace = false;
  bool force = false;
  bool json = false;
  std::string task_graph_out;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  auto kind = parse_solver(a.solver);
  if (!kind) {
    err << "error: unknown solver '" << a.solver << "' (exact, oracle, doh, kgh, mdh, mrh)\n";
    return kExitError;
  }
  if (a.k_set && *kind != SolverKind::kgh) {
    err << "error: --k only applies to the kgh solver\n";
    return kExitError;
  }
  RoadNetwork net = load_network_file(a.network);
  TaskSet tasks = a.tasks.empty() ? TaskSet::from_network(net) : load_tasks(a.tasks, net);

  std::map<std::string, std::string> kv;
  if (!a.query.empty()) kv = load_key_values(a.query);
  auto pick = [&](const std::string& key, const std::string& cli) {
    if (!cli.empty()) return cli;
    auto it = kv.find(key);
    return it == kv.end() ? std::string() : it->second;
  };
  std::string source_text = a.source ? std::to_string(*a.source) : pick("source", "");
  std::string dest_text = a.dest ? std::to_string(*a.dest) : pick("destination", "");
  std::string budget_text = pick("budget", a.budget);
  std::string path_text = pick("path", a.path);
  if (budget_text.empty()) throw InputError("a budget is required (--budget)");

  std::vector<VertexId> pref_vertices;
  if (!path_text.empty()) {
    for (ExternalId id : parse_id_list(path_text)) pref_vertices.push_back(net.require(id));
  } else {
    if (source_text.empty() || dest_text.empty()) {
      throw InputError("--source and --dest (or --path / --query) are required");
    }
    VertexId s = net.require(parse_id_list(source_text).at(0));
    VertexId d = net.require(parse_id_list(dest_text).at(0));
    auto route = shortest_travel_path(net, s, d);
    if (!route) throw InputError("destination is unreachable from source");
    pref_vertices = std::move(route->vertices);
  }
  PreferredPath pref(net, std::move(pref_vertices));
  if (!source_text.empty() && net.require(parse_id_list(source_text).at(0)) != pref.source()) {
    throw InputError("preferred path does not start at the source");
  }
  if (!dest_text.empty() && net.require(parse_id_list(dest_text).at(0)) != pref.destination()) {
    throw InputError("preferred path does not end at the destination");
  }

  Budget b = parse_budget(budget_text);
  double budget = b.factor ? b.value * pref.total_cost() : b.value;

  if (*kind == SolverKind::exact && pref.total_cost() > kExactPathLimit && !a.force) {
    err << "warning: the exact solver is impractical for preferred paths over 1 km (this one is "
        << format_real(pref.total_cost()) << "); use --force to run it anyway\n";
    return kExitError;
  }

  Query q(net, pref, tasks, budget);
  if (!a.task_graph_out.empty()) {
    std::ofstream tg_out(a.task_graph_out);
    if (!tg_out) throw InputError("cannot write " + a.task_graph_out);
    write_task_graph(tg_out, build_task_graph(q), net);
  }
  SolveOptions opts;
  opts.k = a.k;
  opts.trace = a.trace ? &err : nullptr;
  SkylineSet sky = solve(*kind, q, opts);
  if (a.json) {
    write_skyline_json(out, sky, net);
  } else {
    write_skyline_text(out, sky, net);
  }
  return 0;
}

struct GenArgs {
  std::string network;
  std::string grid;
  double cell = 50.0;
  std::size_t task_sites = 0;
  bool task_sites_set = false;
  std::uint64_t grid_seed = 1;
  ScenarioConfig cfg;
  std::string reward_dist = "uniform";
  std::size_t clusters = 0;
  std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  RoadNetwork net;
  bool generated = false;
  if (!a.grid.empty()) {
    GridSpec spec;
    auto x = a.grid.find('x');
    try {
      if (x == std::string::npos) throw std::invalid_argument("grid");
      spec.rows = std::stoul(a.grid.substr(0, x));
      spec.cols = std::stoul(a.grid.substr(x + 1));
    } catch (const std::logic_error&) {
      throw InputError("bad --grid '" + a.grid + "' (expected ROWSxCOLS)");
    }
    spec.cell = a.cell;
    spec.seed = a.grid_seed;
    // Default density of one task site per ~27 vertices.
    spec.task_sites = a.task_sites_set ? a.task_sites : (spec.rows * spec.cols) * 3 / 80;
    net = make_grid_network(spec);
    generated = true;
  } else if (!a.network.empty()) {
    net = load_network_file(a.network);
  } else {
    throw InputError("gen needs --grid or --network");
  }
  ScenarioConfig cfg = a.cfg;
  auto dist = parse_reward_dist(a.reward_dist);
  if (!dist) throw InputError("unknown reward distribution '" + a.reward_dist + "'");
  cfg.reward_dist = *dist;
  if (a.clusters > 0) cfg.clusters = a.clusters;

  Scenario sc = gen_scenario(net, cfg);
  auto write = [&](const std::string& suffix, auto&& fn) {
    std::string path = a.out + suffix;
    std::ofstream f(path);
    if (!f) throw InputError("cannot write " + path);
    fn(f);
    out << "wrote " << path << '\n';
  };
  if (a.out.empty()) {
    write_query(out, sc, net);
    write_tasks(out, sc.tasks, net);
    return 0;
  }
  if (generated) write(".net", [&](std::ostream& f) { write_network(f, net); });
  write(".tasks", [&](std::ostream& f) { write_tasks(f, sc.tasks, net); });
  write(".query", [&](std::ostream& f) { write_query(f, sc, net); });
  (void)err;
  return 0;
}

struct BenchArgs {
  std::string spec;
  std::string network;
  std::string out;
  std::string summary;
  bool no_timing = false;
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  std::ifstream spec_in(a.spec);
  if (!spec_in) throw InputError("cannot open sweep spec " + a.spec);
  SweepSpec spec;
  try {
    spec = parse_sweep_spec(spec_in);
  } catch (const InputError& e) {
    throw InputError(a.spec + ": " + e.what());
  }
  if (!a.network.empty()) spec.network = a.network;
  if (a.no_timing) spec.timing = false;
  RoadNetwork net =
      spec.network == "grid" ? make_grid_network(spec.grid) : load_network_file(spec.network);

  SweepResult res = run_sweep(net, spec);
  if (a.out.empty()) {
    write_records_csv(out, res.records, spec.timing);
  } else {
    std::ofstream f(a.out);
    if (!f) throw InputError("cannot write " + a.out);
    write_records_csv(f, res.records, spec.timing);
  }
  std::ostream* summary = &err;
  std::ofstream summary_file;
  if (!a.summary.empty()) {
    summary_file.open(a.summary);
    if (!summary_file) throw InputError("cannot write " + a.summary);
    summary = &summary_file;
  }
  *summary << "scenarios: " << res.scenarios << " (failed: " << res.failed_scenarios << ")\n";
  write_summary(*summary, summarize(res.records, spec.vary), solver_name(spec.baseline),
                spec.timing);
  return 0;
}

int cmd_eval(const std::string& result_path, const std::string& baseline_path,
             std::ostream& out) {
  SkylineSet result = to_skyline(read_skyline_file(result_path));
  SkylineSet baseline = to_skyline(read_skyline_file(baseline_path));
  Evaluation ev = evaluate(result, baseline);
  out << "precision " << format_ratio(ev.precision) << " recall " << format_ratio(ev.recall)
      << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"In-route task selection: skyline paths trading detour against reward"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Compute the skyline for one query");
  solve->add_option("--network", solve_args.network, "Network file")->required();
  solve->add_option("--tasks", solve_args.tasks,
                    "Tasks file (`id reward` or `u v offset reward` lines)");
  solve->add_option("--query", solve_args.query, "Query file written by `gen`");
  solve->add_option("--source", solve_args.source, "Source vertex id");
  solve->add_option("--dest", solve_args.dest, "Destination vertex id");
  solve->add_option("--path", solve_args.path,
                    "Preferred path as comma-separated ids (default: shortest path)");
  solve->add_option("--budget", solve_args.budget, "Budget, absolute (21) or factor (1.25x)");
  solve->add_option("--solver", solve_args.solver, "exact, oracle, doh, kgh, mdh or mrh");
  auto* k_opt = solve->add_option("--k", solve_args.k, "Neighbors per task for kgh");
  solve->add_flag("--trace", solve_args.trace, "Write a per-step search trace to stderr");
  solve->add_flag("--force", solve_args.force, "Run exact on preferred paths over 1 km");
  solve->add_flag("--json", solve_args.json, "Write the skyline as JSON");
  solve->add_option("--task-graph", solve_args.task_graph_out,
                    "Also write the task graph edge list to this file");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a scenario");
  gen->add_option("--network", gen_args.network, "Network file");
  gen->add_option("--grid", gen_args.grid, "Generate a ROWSxCOLS jittered grid instead");
  gen->add_option("--cell", gen_args.cell, "Grid cell size");
  auto* sites_opt = gen->add_option("--task-sites", gen_args.task_sites, "Task sites on the grid");
  gen->add_option("--grid-seed", gen_args.grid_seed, "Grid seed");
  gen->add_option("--pref-cost", gen_args.cfg.pref_cost_target, "Target preferred path cost");
  gen->add_option("--budget-factor", gen_args.cfg.budget_factor, "Budget as a factor of TC(P*)");
  gen->add_option("--num-tasks", gen_args.cfg.num_tasks, "Number of tasks");
  gen->add_option("--reward-dist", gen_args.reward_dist, "equal, uniform or exponential");
  gen->add_option("--clusters", gen_args.clusters, "Clustered task sampling with c clusters");
  gen->add_option("--seed", gen_args.cfg.seed, "Scenario seed");
  gen->add_option("--out", gen_args.out, "Output prefix (writes .net/.tasks/.query)");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Run a parameter sweep");
  bench->add_option("--spec", bench_args.spec, "Sweep spec (key=value)")->required();
  bench->add_option("--network", bench_args.network, "Network file (overrides the spec)");
  bench->add_option("--out", bench_args.out, "CSV output file (default stdout)");
  bench->add_option("--summary", bench_args.summary, "Summary output file (default stderr)");
  bench->add_flag("--no-timing", bench_args.no_timing, "Leave runtime_ms blank");

  std::string eval_result, eval_baseline;
  auto* eval = app.add_subcommand("eval", "Precision and recall of a skyline file");
  eval->add_option("result", eval_result, "Skyline to evaluate")->required();
  eval->add_option("baseline", eval_baseline, "Reference skyline")->required();

  std::vector<std::string> argv_store{"irts"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (*solve) {
      solve_args.k_set = k_opt->count() > 0;
      return cmd_solve(solve_args, out, err);
    }
    if (*gen) {
      gen_args.task_sites_set = sites_opt->count() > 0;
      return cmd_gen(gen_args, out, err);
    }
    if (*bench) return cmd_bench(bench_args, out, err);
    return cmd_eval(eval_result, eval_baseline, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace irts
