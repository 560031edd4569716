#pragma once

#include <cstdint>
#include <vector>

namespace forestcolor {

struct Assignment {
  std::int64_t cost = 0;
  std::vector<int> column_of_row;
};

// Minimum-cost assignment of every row to a distinct column (rows <= columns).
// cost[r][c] must be finite.
Assignment solve_assignment(const std::vector<std::vector<std::int64_t>>& cost);

}  // namespace forestcolor
