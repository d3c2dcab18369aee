#include "tspforge/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "tspforge/distance_matrix.hpp"
#include "tspforge/errors.hpp"

namespace tspforge::exact {

namespace {

// Start at city 0 and make the orientation unique: order[1] < order[n-1].
std::vector<int> canonicalize(std::vector<int> order) {
  const size_t n = order.size();
  size_t z = 0;
  while (order[z] != 0) ++z;
  std::rotate(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(z),
              order.end());
  if (n >= 3 && order[1] > order[n - 1]) {
    std::reverse(order.begin() + 1, order.end());
  }
  return order;
}

}  // namespace

ExactResult brute_force_optimum(const Instance& inst) {
  const int n = inst.n();
  require(n <= 10, "brute_force_optimum refuses n > 10");
  const DistanceMatrix dm(inst);

  std::vector<int> perm(static_cast<size_t>(n - 1));
  std::iota(perm.begin(), perm.end(), 1);

  double best = std::numeric_limits<double>::infinity();
  std::vector<int> best_order;
  do {
    // Fixing city 0 first and requiring perm.front() < perm.back() halves
    // the enumeration to distinct cycles.
    if (perm.front() > perm.back()) continue;
    double len = dm(0, perm.front());
    for (size_t i = 0; i + 1 < perm.size(); ++i) {
      len += dm(perm[i], perm[i + 1]);
    }
    len += dm(perm.back(), 0);
    if (len < best) {
      best = len;
      best_order = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  ExactResult res;
  res.node_count = n;
  res.method = "brute-force";
  res.optimal_order.push_back(0);
  res.optimal_order.insert(res.optimal_order.end(), best_order.begin(),
                           best_order.end());
  res.optimal_order = canonicalize(std::move(res.optimal_order));
  res.optimal_length = tour_length(inst, res.optimal_order);
  return res;
}

ExactResult held_karp_optimum(const Instance& inst) {
  const int n = inst.n();
  require(n <= 20, "held_karp_optimum refuses n > 20 (memory bound 2^n * n)");
  const DistanceMatrix dm(inst);

  // dp[mask][j]: shortest path 0 -> j visiting {0} + mask, where mask is a
  // subset of cities 1..n-1 (bit i-1 for city i) and j in mask.
  const int m = n - 1;
  const size_t masks = size_t{1} << m;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dp(masks * static_cast<size_t>(m), inf);
  std::vector<std::uint8_t> parent(masks * static_cast<size_t>(m), 0xff);

  for (int j = 0; j < m; ++j) {
    const size_t mask = size_t{1} << j;
    dp[mask * static_cast<size_t>(m) + static_cast<size_t>(j)] = dm(0, j + 1);
  }

  // Forward extension: build from small masks up.
  for (size_t mask = 1; mask < masks; ++mask) {
    const size_t base = mask * static_cast<size_t>(m);
    for (int j = 0; j < m; ++j) {
      if (!(mask & (size_t{1} << j))) continue;
      const double cur = dp[base + static_cast<size_t>(j)];
      if (cur == inf) continue;
      for (int k = 0; k < m; ++k) {
        if (mask & (size_t{1} << k)) continue;
        const size_t nmask = mask | (size_t{1} << k);
        const size_t idx = nmask * static_cast<size_t>(m) + static_cast<size_t>(k);
        const double cand = cur + dm(j + 1, k + 1);
        if (cand < dp[idx]) {
          dp[idx] = cand;
          parent[idx] = static_cast<std::uint8_t>(j);
        }
      }
    }
  }

  const size_t full = masks - 1;
  double best = inf;
  int best_end = -1;
  for (int j = 0; j < m; ++j) {
    const double cand =
        dp[full * static_cast<size_t>(m) + static_cast<size_t>(j)] +
        dm(j + 1, 0);
    if (cand < best) {
      best = cand;
      best_end = j;
    }
  }

  std::vector<int> order;
  order.reserve(static_cast<size_t>(n));
  size_t mask = full;
  int j = best_end;
  while (j >= 0) {
    order.push_back(j + 1);
    const std::uint8_t p =
        parent[mask * static_cast<size_t>(m) + static_cast<size_t>(j)];
    mask ^= size_t{1} << j;
    j = (p == 0xff) ? -1 : static_cast<int>(p);
  }
  order.push_back(0);
  std::reverse(order.begin(), order.end());

  ExactResult res;
  res.node_count = n;
  res.method = "held-karp";
  res.optimal_order = canonicalize(std::move(order));
  res.optimal_length = tour_length(inst, res.optimal_order);
  return res;
}

double discrepancy(double solver_length, double optimal_length) {
  require(optimal_length > 0.0, "discrepancy needs a positive optimum");
  check_invariant(solver_length >= optimal_length - 1e-9,
                  "solver tour shorter than the exact optimum");
  return 100.0 * (solver_length - optimal_length) / optimal_length;
}

bool found_optimum(double solver_length, double optimal_length) {
  return solver_length - optimal_length <= 1e-6 * std::abs(optimal_length);
}

}  // namespace tspforge::exact
