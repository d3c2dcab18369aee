#include "tspforge/tour.hpp"

#include <utility>

#include "tspforge/errors.hpp"

namespace tspforge {

Tour::Tour(const Instance& inst, const DistanceMatrix& dm,
           std::vector<int> order)
    : inst_(&inst), dm_(&dm), order_(std::move(order)) {
  require(dm.n() == inst.n(), "distance matrix does not match instance");
  require(is_permutation_of_n(order_, inst.n()),
          "tour order is not a permutation of 0..n-1");
  pos_.resize(order_.size());
  for (size_t p = 0; p < order_.size(); ++p) {
    pos_[static_cast<size_t>(order_[p])] = static_cast<int>(p);
  }
  length_ = recompute_length();
}

double Tour::recompute_length() const {
  const int nc = n();
  const DistanceMatrix& d = *dm_;
  double sum = 0.0;
  for (int i = 0; i + 1 < nc; ++i) {
    sum += d(order_[static_cast<size_t>(i)], order_[static_cast<size_t>(i + 1)]);
  }
  sum += d(order_[static_cast<size_t>(nc - 1)], order_[0]);
  return sum;
}

double Tour::flip_delta(int i, int j) const {
  const int nc = n();
  if ((j - i + nc) % nc + 1 == nc) return 0.0;  // whole-cycle reversal
  const int a = order_[static_cast<size_t>(i)];
  const int b = order_[static_cast<size_t>(j)];
  const int ap = order_[static_cast<size_t>((i == 0) ? nc - 1 : i - 1)];
  const int bn = order_[static_cast<size_t>((j + 1 == nc) ? 0 : j + 1)];
  const DistanceMatrix& d = *dm_;
  return d(ap, b) + d(a, bn) - d(ap, a) - d(b, bn);
}

void Tour::reverse_positions(int i, int j, int count) {
  const int nc = n();
  for (int s = 0; s < count / 2; ++s) {
    std::swap(order_[static_cast<size_t>(i)], order_[static_cast<size_t>(j)]);
    pos_[static_cast<size_t>(order_[static_cast<size_t>(i)])] = i;
    pos_[static_cast<size_t>(order_[static_cast<size_t>(j)])] = j;
    i = (i + 1 == nc) ? 0 : i + 1;
    j = (j == 0) ? nc - 1 : j - 1;
  }
}

void Tour::flip(int i, int j) {
  require(0 <= i && i < j && j < n(), "flip requires 0 <= i < j < n");
  ++flips_;
  length_ += flip_delta(i, j);
  reverse_positions(i, j, j - i + 1);
}

void Tour::flip_cyclic(int i, int j) {
  const int nc = n();
  ++flips_;
  length_ += flip_delta(i, j);
  const int count = (j - i + nc) % nc + 1;
  if (count <= nc - count) {
    reverse_positions(i, j, count);
  } else {
    // Reverse the complement; same cyclic tour, reflected.
    reverse_positions((j + 1 == nc) ? 0 : j + 1, (i == 0) ? nc - 1 : i - 1,
                      nc - count);
  }
}

void Tour::set_order(std::span<const int> order) {
  require(is_permutation_of_n(order, n()),
          "set_order: not a permutation of 0..n-1");
  std::copy(order.begin(), order.end(), order_.begin());
  for (size_t p = 0; p < order_.size(); ++p) {
    pos_[static_cast<size_t>(order_[p])] = static_cast<int>(p);
  }
  length_ = recompute_length();
}

Tour nearest_neighbor_tour(const Instance& inst, const DistanceMatrix& dm,
                           int start, Rng& rng) {
  const int n = inst.n();
  require(start >= 0 && start < n, "start city out of range");

  std::vector<bool> visited(static_cast<size_t>(n), false);
  std::vector<int> order;
  order.reserve(static_cast<size_t>(n));
  std::vector<int> ties;

  int cur = start;
  visited[static_cast<size_t>(cur)] = true;
  order.push_back(cur);

  for (int step = 1; step < n; ++step) {
    double best = -1.0;
    ties.clear();
    for (int j = 0; j < n; ++j) {
      if (visited[static_cast<size_t>(j)]) continue;
      const double dj = dm(cur, j);
      if (ties.empty() || dj < best) {
        best = dj;
        ties.clear();
        ties.push_back(j);
      } else if (dj == best) {
        ties.push_back(j);
      }
    }
    cur = ties.size() == 1
              ? ties[0]
              : ties[static_cast<size_t>(rng.below(ties.size()))];
    visited[static_cast<size_t>(cur)] = true;
    order.push_back(cur);
  }
  return Tour(inst, dm, std::move(order));
}

}  // namespace tspforge
