#pragma once

#include <span>
#include <string>
#include <vector>

#include "tspforge/rng.hpp"

namespace tspforge {

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// A Euclidean TSP instance: n integer grid coordinates on a
/// grid_size x grid_size square. Immutable after construction and safe to
/// share across threads. Duplicate coordinates are allowed (mutation may
/// collide); the distance between duplicates is 0.
class Instance {
 public:
  Instance(std::string id, int grid_size, std::vector<Point> cities);

  static Instance uniform_random(std::string id, int n, int grid_size,
                                 Rng& rng);

  int n() const { return static_cast<int>(cities_.size()); }
  int grid_size() const { return grid_size_; }
  const std::string& id() const { return id_; }
  const std::vector<Point>& cities() const { return cities_; }
  const Point& city(int i) const { return cities_[static_cast<size_t>(i)]; }

  // Coordinates as doubles, structure-of-arrays, for the batch kernels.
  std::span<const double> xs() const { return xs_; }
  std::span<const double> ys() const { return ys_; }

 private:
  std::string id_;
  int grid_size_;
  std::vector<Point> cities_;
  std::vector<double> xs_;
  std::vector<double> ys_;
};

/// Unrounded Euclidean distance between cities i and j.
double distance(const Instance& inst, int i, int j);

/// Cyclic tour length of `order` (must be a permutation of 0..n-1); includes
/// the closing edge order[n-1] -> order[0]. Summation is left to right from
/// order[0] — the canonical length everywhere in the toolkit.
double tour_length(const Instance& inst, std::span<const int> order);

bool is_permutation_of_n(std::span<const int> order, int n);

}  // namespace tspforge
