#pragma once

#include <span>
#include <vector>

#include "tspforge/distance_matrix.hpp"

namespace tspforge::lk {

/// c(v,w) = minimax path cost between v and w in the complete Euclidean
/// graph: the smallest possible "heaviest edge" over all v-w paths. Equals
/// the maximum edge on the v-w path in any minimum spanning tree, which is
/// how it is computed (Prim + per-root tree walk, O(n^2) total).
///
/// Properties (tested): c(v,w) <= d(v,w); c(v,w) <= max(c(v,u), c(u,w));
/// symmetric with zero diagonal.
class ClusterDistanceMatrix {
 public:
  int n() const { return n_; }
  double operator()(int i, int j) const {
    return c_[static_cast<size_t>(i) * static_cast<size_t>(n_) +
              static_cast<size_t>(j)];
  }

 private:
  friend ClusterDistanceMatrix cluster_distances(const DistanceMatrix&);
  int n_ = 0;
  std::vector<double> c_;
};

ClusterDistanceMatrix cluster_distances(const DistanceMatrix& dm);

}  // namespace tspforge::lk
