#pragma once

#include <string>
#include <vector>

#include "tspforge/instance.hpp"

namespace tspforge::exact {

struct ExactResult {
  double optimal_length = 0.0;
  std::vector<int> optimal_order;  // canonical: starts at 0, order[1] < back
  int node_count = 0;
  std::string method;  // "brute-force" or "held-karp"
};

/// Exhaustive enumeration of the (n-1)!/2 distinct cycles. n <= 10.
ExactResult brute_force_optimum(const Instance& inst);

/// Held-Karp subset DP. n <= 20 (memory is 2^(n-1) * (n-1) doubles).
ExactResult held_karp_optimum(const Instance& inst);

/// Percentage excess of a solver tour over the optimum,
/// 100 * (solver - optimal) / optimal. A solver length below the optimum by
/// more than 1e-9 signals a broken oracle or tour and is an internal error.
double discrepancy(double solver_length, double optimal_length);

/// Relative length difference <= 1e-6 counts as having found the optimum.
bool found_optimum(double solver_length, double optimal_length);

}  // namespace tspforge::exact
