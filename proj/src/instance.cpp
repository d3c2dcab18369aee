#include "tspforge/instance.hpp"

#include <cmath>
#include <utility>

#include "tspforge/errors.hpp"
#include "tspforge/kernels.hpp"

namespace tspforge {

Instance::Instance(std::string id, int grid_size, std::vector<Point> cities)
    : id_(std::move(id)), grid_size_(grid_size), cities_(std::move(cities)) {
  require(grid_size_ >= 1, "grid_size must be positive");
  require(cities_.size() >= 3, "instance needs at least 3 cities");
  for (const Point& p : cities_) {
    if (p.x < 0 || p.x >= grid_size_ || p.y < 0 || p.y >= grid_size_) {
      throw usage_error("city coordinate outside grid in instance '" + id_ +
                        "'");
    }
  }
  xs_.reserve(cities_.size());
  ys_.reserve(cities_.size());
  for (const Point& p : cities_) {
    xs_.push_back(static_cast<double>(p.x));
    ys_.push_back(static_cast<double>(p.y));
  }
}

Instance Instance::uniform_random(std::string id, int n, int grid_size,
                                  Rng& rng) {
  require(n >= 3, "instance needs at least 3 cities");
  std::vector<Point> cities(static_cast<size_t>(n));
  for (Point& p : cities) {
    p.x = static_cast<int>(rng.below(static_cast<std::uint64_t>(grid_size)));
    p.y = static_cast<int>(rng.below(static_cast<std::uint64_t>(grid_size)));
  }
  return Instance(std::move(id), grid_size, std::move(cities));
}

double distance(const Instance& inst, int i, int j) {
  require(i >= 0 && i < inst.n() && j >= 0 && j < inst.n(),
          "city index out of range");
  return std::sqrt(kern::detail::sq_dist_scalar(
      inst.xs()[static_cast<size_t>(i)], inst.ys()[static_cast<size_t>(i)],
      inst.xs()[static_cast<size_t>(j)], inst.ys()[static_cast<size_t>(j)]));
}

bool is_permutation_of_n(std::span<const int> order, int n) {
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : order) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = true;
  }
  return true;
}

double tour_length(const Instance& inst, std::span<const int> order) {
  require(is_permutation_of_n(order, inst.n()),
          "tour_length: order is not a permutation of 0..n-1");
  const size_t n = order.size();
  double sum = 0.0;
  for (size_t i = 0; i + 1 < n; ++i) {
    sum += distance(inst, order[i], order[i + 1]);
  }
  sum += distance(inst, order[n - 1], order[0]);
  return sum;
}

}  // namespace tspforge
