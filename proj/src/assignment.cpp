#include "forestcolor/assignment.hpp"

#include <limits>
#include <stdexcept>

namespace forestcolor {

// Hungarian method with potentials, O(rows^2 * cols).
Assignment solve_assignment(const std::vector<std::vector<std::int64_t>>& cost) {
  const int rows = static_cast<int>(cost.size());
  Assignment out;
  out.column_of_row.assign(rows, -1);
  if (rows == 0) return out;
  const int cols = static_cast<int>(cost[0].size());
  if (rows > cols) throw std::invalid_argument("more rows than columns");
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(rows + 1, 0), v(cols + 1, 0);
  std::vector<int> p(cols + 1, 0), way(cols + 1, 0);
  for (int i = 1; i <= rows; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<std::int64_t> minv(cols + 1, kInf);
    std::vector<char> used(cols + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0];
      std::int64_t delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= cols; ++j) {
        if (used[j]) continue;
        std::int64_t cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= cols; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  for (int j = 1; j <= cols; ++j) {
    if (p[j] != 0) out.column_of_row[p[j] - 1] = j - 1;
  }
  for (int r = 0; r < rows; ++r) out.cost += cost[r][out.column_of_row[r]];
  return out;
}

}  // namespace forestcolor
