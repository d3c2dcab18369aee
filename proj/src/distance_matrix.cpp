#include "tspforge/distance_matrix.hpp"

#include <algorithm>
#include <numeric>

#include "tspforge/errors.hpp"
#include "tspforge/kernels.hpp"

namespace tspforge {

DistanceMatrix::DistanceMatrix(const Instance& inst) : n_(inst.n()) {
  const size_t n = static_cast<size_t>(n_);
  d_.resize(n * n);
  const double* xs = inst.xs().data();
  const double* ys = inst.ys().data();
  for (size_t i = 0; i < n; ++i) {
    kern::dist_point_to_many(xs[i], ys[i], xs, ys, n, d_.data() + i * n);
    d_[i * n + i] = 0.0;
  }
}

NeighborLists::NeighborLists(const DistanceMatrix& dm, int k) {
  const int n = dm.n();
  require(k >= 1, "neighbor list size must be >= 1");
  k_ = std::min(k, n - 1);
  ids_.resize(static_cast<size_t>(n) * static_cast<size_t>(k_));

  std::vector<int> cand(static_cast<size_t>(n - 1));
  for (int i = 0; i < n; ++i) {
    int w = 0;
    for (int j = 0; j < n; ++j) {
      if (j != i) cand[static_cast<size_t>(w++)] = j;
    }
    const auto by_dist = [&](int a, int b) {
      const double da = dm(i, a);
      const double db = dm(i, b);
      if (da != db) return da < db;
      return a < b;
    };
    std::partial_sort(cand.begin(), cand.begin() + k_, cand.end(), by_dist);
    std::copy(cand.begin(), cand.begin() + k_,
              ids_.begin() + static_cast<size_t>(i) * static_cast<size_t>(k_));
  }
}

}  // namespace tspforge
