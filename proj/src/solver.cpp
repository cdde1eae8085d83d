#include "irts/solver.hpp"

#include <array>
#include <utility>

#include "irts/exact.hpp"
#include "irts/taskgraph.hpp"

namespace irts {

namespace {

constexpr std::array<std::pair<SolverKind, std::string_view>, 6> kNames{{
    {SolverKind::exact, "exact"},
    {SolverKind::oracle, "oracle"},
    {SolverKind::doh, "doh"},
    {SolverKind::kgh, "kgh"},
    {SolverKind::mdh, "mdh"},
    {SolverKind::mrh, "mrh"},
}};

}  // namespace

std::optional<SolverKind> parse_solver(std::string_view name) {
  for (auto [kind, n] : kNames) {
    if (n == name) return kind;
  }
  return std::nullopt;
}

std::string_view solver_name(SolverKind kind) {
  for (auto [k, n] : kNames) {
    if (k == kind) return n;
  }
  return "?";
}

SkylineSet solve(SolverKind kind, const Query& q, const SolveOptions& options) {
  switch (kind) {
    case SolverKind::exact: {
      ExactOptions eo;
      eo.trace = options.trace;
      return exact_skyline(q, eo);
    }
    case SolverKind::oracle:
      return brute_skyline(q, options.oracle_limits);
    default:
      break;
  }
  HeuristicOptions ho;
  ho.trace = options.trace;
  ho.net = &q.net;
  TaskGraph tg = build_task_graph(q);
  switch (kind) {
    case SolverKind::doh:
      return doh(tg, q.budget, ho);
    case SolverKind::kgh:
      return kgh(tg, options.k, q.budget, ho);
    case SolverKind::mdh:
      return mdh(tg, q.budget, ho);
    default:
      return mrh(tg, q.budget, ho);
  }
}

}  // namespace irts
