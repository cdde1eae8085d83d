#pragma once

#include <string>

namespace irts {

/// Absolute tolerance for every equality/ordering test on costs and rewards.
inline constexpr double kEps = 1e-9;

inline bool approx_equal(double a, double b) { return a - b <= kEps && b - a <= kEps; }
inline bool definitely_less(double a, double b) { return a < b - kEps; }
inline bool definitely_greater(double a, double b) { return a > b + kEps; }

/// Shortest decimal text that round-trips to the same double.
std::string format_real(double value);

}  // namespace irts
