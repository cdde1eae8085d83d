#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "irts/oracle.hpp"
#include "irts/taskgraph.hpp"

using namespace irts;
using irts::testing::make_worked_example;
using irts::testing::random_instance;

namespace {

void check_leg(const TaskGraph& tg, VertexId from, VertexId to, double detour, double travel) {
  const TaskLeg* leg = tg.find_leg(from, to);
  REQUIRE(leg != nullptr);
  CHECK(leg->detour == detour);
  CHECK(leg->travel == travel);
}

}  // namespace

TEST_CASE("task graph of the worked example") {
  auto f = make_worked_example();
  TaskGraph tg = build_task_graph(f.query());
  CHECK(tg.task_nodes().size() == 3);
  check_leg(tg, f.s, f.t1, 3, 3);
  check_leg(tg, f.s, f.t2, 2, 7);
  check_leg(tg, f.s, f.t3, 2, 17);
  check_leg(tg, f.t1, f.d, 3, 18);
  check_leg(tg, f.t2, f.d, 2, 12);
  check_leg(tg, f.t3, f.d, 2, 2);
  check_leg(tg, f.t1, f.t2, 5, 10);
  check_leg(tg, f.t2, f.t1, 5, 10);
  check_leg(tg, f.t2, f.t3, 4, 14);
  CHECK(tg.find_leg(f.t3, f.t2) == nullptr);
  CHECK(tg.find_leg(f.t1, f.t3) == nullptr);
  CHECK(tg.find_leg(f.t3, f.t1) == nullptr);
  CHECK(tg.leg_count() == 9);
}

TEST_CASE("task graph dump") {
  auto f = make_worked_example();
  std::ostringstream out;
  write_task_graph(out, build_task_graph(f.query()), f.net);
  CHECK(out.str() ==
        "0 5 2 7\n"
        "0 6 2 17\n"
        "0 4 3 3\n"
        "4 3 3 18\n"
        "4 5 5 10\n"
        "5 3 2 12\n"
        "5 6 4 14\n"
        "5 4 5 10\n"
        "6 3 2 2\n");
}

TEST_CASE("zero budget leaves only s and d") {
  auto f = make_worked_example();
  TaskGraph tg = build_task_graph(f.query(0));
  CHECK(tg.task_nodes().empty());
  CHECK(tg.nodes() == std::vector<VertexId>{f.s, f.d});
  CHECK(tg.leg_count() == 0);
}

TEST_CASE("legs are realized by recomputable network paths") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto inst = random_instance(seed);
    Query q = inst.query();
    TaskGraph tg = build_task_graph(q);
    for (VertexId from : tg.nodes()) {
      for (const TaskLeg& leg : tg.out_legs(from)) {
        REQUIRE(!leg.path.empty());
        CHECK(leg.path.front() == leg.from);
        CHECK(leg.path.back() == leg.to);
        auto c = recompute_costs(leg.path, inst.net, inst.pref, inst.tasks);
        CHECK(c.detour == doctest::Approx(leg.detour));
        CHECK(c.travel == doctest::Approx(leg.travel));
        CHECK(leg.to != tg.source());
        CHECK(leg.from != tg.destination());
      }
    }
    for (VertexId t : tg.task_nodes()) CHECK(tg.find_leg(t, tg.destination()) != nullptr);
  }
}

TEST_CASE("task graph legs agree with exhaustive leg enumeration") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto inst = random_instance(seed);
    Query q = inst.query();
    TaskGraph tg = build_task_graph(q);
    const double b = q.budget;
    auto s_leg = [&](VertexId t) { return tg.find_leg(tg.source(), t)->travel; };
    for (VertexId t : inst.tasks.ids()) {
      auto best = brute_min_detour_leg(inst.net, inst.pref, q.source(), t, b);
      const TaskLeg* leg = tg.find_leg(q.source(), t);
      if (leg) {
        REQUIRE(best);
        CHECK(leg->detour == doctest::Approx(best->detour));
        CHECK(leg->travel == doctest::Approx(best->travel));
      } else if (best) {
        // The unconstrained min-detour leg overshoots the budget.
        auto free_leg = min_detour_path(inst.net, q.source(), t, inst.pref, kInfinity);
        REQUIRE(free_leg);
        CHECK(free_leg->travel > b);
      }
    }
    for (VertexId ti : tg.task_nodes()) {
      for (VertexId tj : tg.task_nodes()) {
        if (ti == tj) continue;
        const TaskLeg* leg = tg.find_leg(ti, tj);
        auto best = brute_min_detour_leg(inst.net, inst.pref, ti, tj, b);
        if (leg) {
          REQUIRE(best);
          CHECK(leg->detour == doctest::Approx(best->detour));
          CHECK(leg->travel == doctest::Approx(best->travel));
          CHECK(leg->travel <= b - s_leg(ti) + kEps);
        } else if (best) {
          auto free_leg = min_detour_path(inst.net, ti, tj, inst.pref, kInfinity);
          REQUIRE(free_leg);
          CHECK(free_leg->travel > b - s_leg(ti));
        }
      }
    }
  }
}

TEST_CASE("knn_reduce keeps the closest task neighbors") {
  auto f = make_worked_example();
  TaskGraph tg = build_task_graph(f.query());
  TaskGraph k1 = knn_reduce(tg, 1);
  CHECK(k1.find_leg(f.t2, f.t3) != nullptr);
  CHECK(k1.find_leg(f.t2, f.t1) == nullptr);
  CHECK(k1.find_leg(f.t1, f.t2) != nullptr);
  CHECK(k1.find_leg(f.t2, f.d) != nullptr);
  CHECK(k1.out_legs(f.s).size() == 3);
  CHECK(k1.leg_count() == 8);
  CHECK(k1.nodes() == tg.nodes());

  TaskGraph k5 = knn_reduce(tg, 5);
  std::ostringstream a, b;
  write_task_graph(a, tg, f.net);
  write_task_graph(b, k5, f.net);
  CHECK(a.str() == b.str());
  CHECK_THROWS_AS(knn_reduce(tg, 0), std::invalid_argument);
}

TEST_CASE("knn_reduce output is a subset of its input") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto inst = random_instance(seed);
    TaskGraph tg = build_task_graph(inst.query());
    for (std::size_t k : {1u, 2u}) {
      TaskGraph r = knn_reduce(tg, k);
      CHECK(r.nodes() == tg.nodes());
      for (VertexId v : r.nodes()) {
        std::size_t task_legs = 0;
        for (const TaskLeg& leg : r.out_legs(v)) {
          const TaskLeg* orig = tg.find_leg(leg.from, leg.to);
          REQUIRE(orig);
          CHECK(orig->detour == leg.detour);
          if (v != tg.source() && leg.to != tg.destination()) ++task_legs;
        }
        CHECK(task_legs <= k);
      }
    }
  }
}

TEST_CASE("expand_to_network_path composes legs") {
  auto f = make_worked_example();
  Query q = f.query();
  TaskGraph tg = build_task_graph(q);

  std::vector<VertexId> via_t2{f.s, f.t2, f.d};
  auto p = expand_to_network_path(tg, via_t2);
  CHECK(p == std::vector<VertexId>{f.s, f.v1, f.t2, f.v1, f.v2, f.d});
  auto c = recompute_costs(p, f.net, f.pref, f.tasks);
  CHECK(c.travel == 19.0);
  CHECK(c.detour == 4.0);

  std::vector<VertexId> single{f.s, f.t1};
  CHECK(expand_to_network_path(tg, single) == tg.find_leg(f.s, f.t1)->path);

  std::vector<VertexId> via_t3{f.s, f.t3, f.d};
  auto c3 = recompute_costs(expand_to_network_path(tg, via_t3), f.net, f.pref, f.tasks);
  CHECK(c3.travel == 19.0);
  CHECK(c3.detour == 4.0);

  std::vector<VertexId> missing{f.s, f.t3, f.t2};
  CHECK_THROWS_AS(expand_to_network_path(tg, missing), std::invalid_argument);
}

TEST_CASE("TaskGraph rejects malformed legs") {
  TaskGraph tg(0, 1);
  tg.add_task(2, 1.0);
  CHECK_THROWS_AS(tg.add_task(2, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(tg.add_leg({2, 0, 1, 1, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(tg.add_leg({1, 2, 1, 1, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(tg.add_leg({2, 2, 0, 0, {2}}), std::invalid_argument);
  CHECK_NOTHROW(tg.add_leg({0, 2, 1, 1, {0, 2}}));
}
