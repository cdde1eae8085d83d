#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "irts/cli.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kData = IRTS_TEST_DATA;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = irts::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "irts_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

std::vector<std::string> solve_args(std::initializer_list<std::string> extra) {
  std::vector<std::string> a{"solve", "--network", kData + "/example.net", "--source", "0",
                             "--dest", "3"};
  a.insert(a.end(), extra);
  return a;
}

}  // namespace

TEST_CASE("solve the worked example exactly") {
  Run r = run(solve_args({"--solver", "exact", "--budget", "21"}));
  CHECK(r.code == 0);
  CHECK(r.out ==
        "4 19 5 0 1 2 3 6 3\n"
        "14 19 9 0 1 5 7 6 3\n");
  CHECK(r.err.empty());
}

TEST_CASE("budget factor and tasks file") {
  Run r = run(solve_args({"--solver", "oracle", "--budget", "1.4x", "--tasks",
                          kData + "/example.tasks"}));
  CHECK(r.code == 0);
  CHECK(r.out ==
        "4 19 5 0 1 2 3 6 3\n"
        "14 19 9 0 1 5 7 6 3\n");
}

TEST_CASE("query file supplies endpoints, path and budget") {
  Run r = run({"solve", "--network", kData + "/example.net", "--query", kData + "/example.query",
               "--solver", "doh"});
  CHECK(r.code == 0);
  CHECK(r.out == "4 19 5 0 1 2 3 6 3\n");
  Run b = run({"solve", "--network", kData + "/example.net", "--query", kData + "/example.query",
               "--solver", "doh", "--budget", "18"});
  CHECK(b.code == 0);
  CHECK(b.out.empty());
}

TEST_CASE("heuristic solvers") {
  CHECK(run(solve_args({"--solver", "kgh", "--budget", "21"})).out == "4 19 5 0 1 2 3 6 3\n");
  CHECK(run(solve_args({"--solver", "kgh", "--k", "1", "--budget", "21"})).out ==
        "4 19 5 0 1 2 3 6 3\n");
  CHECK(run(solve_args({"--solver", "mdh", "--budget", "21"})).out == "4 19 4 0 1 5 1 2 3\n");
  CHECK(run(solve_args({"--solver", "mrh", "--budget", "21"})).out == "4 19 5 0 1 2 3 6 3\n");
}

TEST_CASE("embedded tasks get fresh ids") {
  Run r = run({"solve", "--network", kData + "/roads.net", "--tasks", kData + "/roads.tasks",
               "--source", "0", "--dest", "3", "--solver", "exact", "--budget", "21"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "4 19 5 0 1 2 3 13 3\n"
        "14 19 9 0 1 12 9 7 10 13 3\n");
}

TEST_CASE("zero budget prints nothing and succeeds") {
  Run r = run(solve_args({"--solver", "exact", "--budget", "0"}));
  CHECK(r.code == 0);
  CHECK(r.out.empty());
}

TEST_CASE("JSON output") {
  Run r = run(solve_args({"--solver", "doh", "--budget", "21", "--json"}));
  CHECK(r.code == 0);
  CHECK(r.out ==
        "[\n"
        "  {\n"
        "    \"detour\": 4.0,\n"
        "    \"travel\": 19.0,\n"
        "    \"reward\": 5.0,\n"
        "    \"path\": [\n"
        "      0,\n      1,\n      2,\n      3,\n      6,\n      3\n"
        "    ]\n"
        "  }\n"
        "]\n");
}

TEST_CASE("trace goes to stderr and the task graph to a file") {
  fs::path tg = scratch("example.tg");
  Run r = run(solve_args({"--solver", "mdh", "--budget", "21", "--trace", "--task-graph",
                          tg.string()}));
  CHECK(r.code == 0);
  CHECK(r.err.rfind("pop 0 detour=0 travel=0 reward=0\n", 0) == 0);
  CHECK(r.out == "4 19 4 0 1 5 1 2 3\n");
  CHECK(slurp(tg) ==
        "0 5 2 7\n0 6 2 17\n0 4 3 3\n4 3 3 18\n4 5 5 10\n5 3 2 12\n5 6 4 14\n5 4 5 10\n6 3 2 2\n");
}

TEST_CASE("bad input exits with status 2") {
  Run unknown = run(solve_args({"--solver", "magic", "--budget", "21"}));
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("unknown solver") != std::string::npos);

  CHECK(run(solve_args({"--solver", "doh", "--k", "3", "--budget", "21"})).code == 2);
  CHECK(run(solve_args({"--solver", "doh", "--budget", "lots"})).code == 2);
  CHECK(run(solve_args({"--solver", "doh"})).code == 2);
  CHECK(run({"solve", "--network", "/nonexistent.net", "--source", "0", "--dest", "3",
             "--budget", "5"})
            .code == 2);
  CHECK(run({"solve"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);

  fs::path bad = scratch("bad.net");
  write_file(bad, "0 - - 0\n1 - - 0\n0 1 0\n");
  Run r = run({"solve", "--network", bad.string(), "--source", "0", "--dest", "1", "--budget",
               "5"});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);

  fs::path bad_tasks = scratch("bad.tasks");
  write_file(bad_tasks, "4 3\n5 -1\n");
  Run t = run(solve_args({"--budget", "21", "--tasks", bad_tasks.string()}));
  CHECK(t.code == 2);
  CHECK(t.err.find(":2:") != std::string::npos);

  Run task_end = run(solve_args({"--budget", "21", "--path", "0,4"}));
  CHECK(task_end.code == 2);
}

TEST_CASE("help exits cleanly") {
  Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("solve") != std::string::npos);
}

TEST_CASE("eval prints precision and recall") {
  fs::path exact = scratch("exact.sky");
  fs::path doh = scratch("doh.sky");
  write_file(exact, run(solve_args({"--solver", "exact", "--budget", "21"})).out);
  write_file(doh, run(solve_args({"--solver", "doh", "--budget", "21", "--json"})).out);
  CHECK(run({"eval", exact.string(), exact.string()}).out == "precision 1.0 recall 1.0\n");
  CHECK(run({"eval", doh.string(), exact.string()}).out == "precision 1.0 recall 0.5\n");
  fs::path empty = scratch("empty.sky");
  write_file(empty, "");
  CHECK(run({"eval", empty.string(), exact.string()}).out == "precision n/a recall 0.0\n");
  CHECK(run({"eval", empty.string(), "/nonexistent"}).code == 2);
}

TEST_CASE("gen is deterministic and feeds solve") {
  fs::path a = scratch("gen_a");
  fs::path b = scratch("gen_b");
  std::vector<std::string> common{"gen", "--grid", "30x30", "--task-sites", "100",
                                  "--pref-cost", "600", "--num-tasks", "8", "--seed", "17"};
  auto args_a = common;
  args_a.insert(args_a.end(), {"--out", a.string()});
  auto args_b = common;
  args_b.insert(args_b.end(), {"--out", b.string()});
  REQUIRE(run(args_a).code == 0);
  REQUIRE(run(args_b).code == 0);
  for (const char* ext : {".net", ".tasks", ".query"}) {
    std::string x = slurp(a.string() + ext);
    CHECK(!x.empty());
    CHECK(x == slurp(b.string() + ext));
  }
  Run s1 = run({"solve", "--network", a.string() + ".net", "--tasks", a.string() + ".tasks",
                "--query", a.string() + ".query", "--solver", "kgh"});
  Run s2 = run({"solve", "--network", b.string() + ".net", "--tasks", b.string() + ".tasks",
                "--query", b.string() + ".query", "--solver", "kgh"});
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);

  Run other = run({"gen", "--grid", "30x30", "--task-sites", "100", "--pref-cost", "600",
                   "--seed", "18"});
  CHECK(other.code == 0);
  CHECK(other.out.find("budget=") != std::string::npos);
  CHECK(run({"gen", "--grid", "banana"}).code == 2);
}

TEST_CASE("exact refuses long preferred paths without --force") {
  fs::path g = scratch("long");
  REQUIRE(run({"gen", "--grid", "40x40", "--task-sites", "60", "--pref-cost", "1500",
               "--num-tasks", "3", "--seed", "2", "--out", g.string()})
              .code == 0);
  Run r = run({"solve", "--network", g.string() + ".net", "--tasks", g.string() + ".tasks",
               "--query", g.string() + ".query", "--solver", "exact"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--force") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("bench writes a deterministic CSV") {
  fs::path spec = scratch("sweep.cfg");
  write_file(spec,
             "vary = budget_factor\n"
             "values = 1.1, 1.5\n"
             "repetitions = 2\n"
             "seed = 4\n"
             "pref_cost = 600\n"
             "num_tasks = 8\n"
             "grid_rows = 30\n"
             "grid_cols = 30\n"
             "task_sites = 100\n");
  fs::path csv = scratch("sweep.csv");
  Run a = run({"bench", "--spec", spec.string(), "--no-timing"});
  Run b = run({"bench", "--spec", spec.string(), "--no-timing", "--out", csv.string()});
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(a.out == slurp(csv));
  CHECK(a.out.rfind(
            "solver,seed,pref_cost,budget_factor,num_tasks,reward_dist,clusters,runtime_ms,size,"
            "precision,recall\n",
            0) == 0);
  std::size_t lines = 0;
  for (char c : a.out) lines += c == '\n';
  CHECK(lines == 1 + 2 * 2 * 4);
  CHECK(a.err.find("scenarios: 4 (failed: 0)") != std::string::npos);
  CHECK(a.err.find("optimistic") != std::string::npos);

  CHECK(run({"bench", "--spec", "/nonexistent.cfg"}).code == 2);
}
