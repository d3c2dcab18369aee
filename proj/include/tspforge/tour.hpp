#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tspforge/distance_matrix.hpp"
#include "tspforge/instance.hpp"
#include "tspforge/rng.hpp"

namespace tspforge {

/// A Hamiltonian cycle over an instance: a permutation of city indices plus
/// a cached length and an inverse position index. Single-owner mutable
/// value; never shared across threads.
///
/// Every segment reversal goes through the flip primitive and bumps a
/// lifetime counter — the solvers' search-effort measure is exactly the
/// number of these invocations.
class Tour {
 public:
  Tour(const Instance& inst, const DistanceMatrix& dm, std::vector<int> order);

  int n() const { return static_cast<int>(order_.size()); }
  std::span<const int> order() const { return order_; }
  int at(int pos) const { return order_[static_cast<size_t>(pos)]; }
  int position_of(int city) const { return pos_[static_cast<size_t>(city)]; }
  int next(int city) const {
    const int p = pos_[static_cast<size_t>(city)];
    return order_[static_cast<size_t>((p + 1 == n()) ? 0 : p + 1)];
  }
  int prev(int city) const {
    const int p = pos_[static_cast<size_t>(city)];
    return order_[static_cast<size_t>((p == 0) ? n() - 1 : p - 1)];
  }

  double length() const { return length_; }

  /// 2-opt segment reversal: reverses order[i..j] and updates the cached
  /// length incrementally from the two removed and two added edges.
  /// Requires 0 <= i < j < n.
  void flip(int i, int j);

  /// Engine-path flip: reverses the cyclic segment from position i to
  /// position j walking forward (wrapping allowed), physically reversing
  /// whichever side is shorter. Same edge change and length update as
  /// flip(); the resulting cyclic tour is identical up to reflection.
  void flip_cyclic(int i, int j);

  std::uint64_t flip_count() const { return flips_; }

  double recompute_length() const;
  /// Replaces the incrementally maintained length with an exact
  /// from-scratch recomputation (drift control after long flip sequences).
  void refresh_length() { length_ = recompute_length(); }

  /// Overwrites the cycle wholesale (not a flip; used for kick/revert).
  void set_order(std::span<const int> order);

  const Instance& instance() const { return *inst_; }
  const DistanceMatrix& matrix() const { return *dm_; }

 private:
  double flip_delta(int i, int j) const;
  void reverse_positions(int i, int j, int count);

  const Instance* inst_;
  const DistanceMatrix* dm_;
  std::vector<int> order_;
  std::vector<int> pos_;
  double length_ = 0.0;
  std::uint64_t flips_ = 0;
};

/// Greedy construction: repeatedly visit the nearest unvisited city.
/// Distance ties are broken by a uniform draw from `rng`, so the result is
/// deterministic for a given (instance, start, seed).
Tour nearest_neighbor_tour(const Instance& inst, const DistanceMatrix& dm,
                           int start, Rng& rng);

}  // namespace tspforge
