#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "irts/core.hpp"
#include "irts/heuristics.hpp"
#include "irts/oracle.hpp"

namespace irts {

enum class SolverKind { exact, oracle, doh, kgh, mdh, mrh };

std::optional<SolverKind> parse_solver(std::string_view name);
std::string_view solver_name(SolverKind kind);

struct SolveOptions {
  std::size_t k = kDefaultNeighbors;
  std::ostream* trace = nullptr;
  OracleLimits oracle_limits;
};

/// Runs one solver end to end (heuristics include task-graph construction).
SkylineSet solve(SolverKind kind, const Query& q, const SolveOptions& options = {});

}  // namespace irts
