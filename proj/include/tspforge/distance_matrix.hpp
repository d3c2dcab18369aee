#pragma once

#include <span>
#include <vector>

#include "tspforge/instance.hpp"

namespace tspforge {

/// Full n x n matrix of unrounded Euclidean distances. Symmetric, zero
/// diagonal. Immutable after construction; shareable across threads.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Instance& inst);

  int n() const { return n_; }
  double operator()(int i, int j) const {
    return d_[static_cast<size_t>(i) * static_cast<size_t>(n_) +
              static_cast<size_t>(j)];
  }
  std::span<const double> row(int i) const {
    return {d_.data() + static_cast<size_t>(i) * static_cast<size_t>(n_),
            static_cast<size_t>(n_)};
  }

 private:
  int n_;
  std::vector<double> d_;
};

/// The k nearest neighbors of every city, ascending by distance, distance
/// ties broken by city index. k is clamped to n-1.
class NeighborLists {
 public:
  NeighborLists(const DistanceMatrix& dm, int k);

  int k() const { return k_; }
  std::span<const int> of(int city) const {
    return {ids_.data() + static_cast<size_t>(city) * static_cast<size_t>(k_),
            static_cast<size_t>(k_)};
  }

 private:
  int k_;
  std::vector<int> ids_;
};

}  // namespace tspforge
