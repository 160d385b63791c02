#pragma once

#include <vector>

namespace pedfuse {

/// Solves the square assignment problem: cost is an n*n row-major matrix,
/// the result maps each row to the column it is assigned to, minimizing the
/// total cost. O(n^3) Hungarian algorithm with potentials; deterministic.
std::vector<int> solve_assignment(const std::vector<double>& cost, int n);

}  // namespace pedfuse
