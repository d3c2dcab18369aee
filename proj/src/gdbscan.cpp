#include "tspforge/gdbscan.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "tspforge/errors.hpp"
#include "tspforge/kernels.hpp"

namespace tspforge::cluster {

namespace {

// Grid-bucket spatial index with cell size eps: a radius query only has to
// look at the 3x3 cell block around the query point.
class GridIndex {
 public:
  GridIndex(const Instance& inst, double eps)
      : inst_(inst), eps_sq_(eps * eps), cell_(eps) {
    cols_ = static_cast<int>(std::floor(inst.grid_size() / cell_)) + 1;
    rows_ = cols_;
    buckets_.resize(static_cast<size_t>(cols_) * static_cast<size_t>(rows_));
    for (int i = 0; i < inst.n(); ++i) {
      buckets_[bucket_of(inst.city(i))].push_back(i);
    }
    scratch_x_.reserve(static_cast<size_t>(inst.n()));
    scratch_y_.reserve(static_cast<size_t>(inst.n()));
    scratch_id_.reserve(static_cast<size_t>(inst.n()));
    scratch_d_.resize(static_cast<size_t>(inst.n()));
  }

  // Cities within eps of city q, excluding q itself, ascending by index.
  void query(int q, std::vector<int>& out) {
    out.clear();
    scratch_x_.clear();
    scratch_y_.clear();
    scratch_id_.clear();
    const Point& p = inst_.city(q);
    const int cx = static_cast<int>(p.x / cell_);
    const int cy = static_cast<int>(p.y / cell_);
    for (int by = std::max(0, cy - 1); by <= std::min(rows_ - 1, cy + 1); ++by) {
      for (int bx = std::max(0, cx - 1); bx <= std::min(cols_ - 1, cx + 1); ++bx) {
        for (int id : buckets_[static_cast<size_t>(by) * static_cast<size_t>(cols_) +
                               static_cast<size_t>(bx)]) {
          scratch_id_.push_back(id);
          scratch_x_.push_back(inst_.xs()[static_cast<size_t>(id)]);
          scratch_y_.push_back(inst_.ys()[static_cast<size_t>(id)]);
        }
      }
    }
    kern::sq_dist_point_to_many(static_cast<double>(p.x),
                                static_cast<double>(p.y), scratch_x_.data(),
                                scratch_y_.data(), scratch_id_.size(),
                                scratch_d_.data());
    for (size_t i = 0; i < scratch_id_.size(); ++i) {
      if (scratch_id_[i] != q && scratch_d_[i] <= eps_sq_) {
        out.push_back(scratch_id_[i]);
      }
    }
    std::sort(out.begin(), out.end());
  }

 private:
  size_t bucket_of(const Point& p) const {
    return static_cast<size_t>(static_cast<int>(p.y / cell_)) *
               static_cast<size_t>(cols_) +
           static_cast<size_t>(static_cast<int>(p.x / cell_));
  }

  const Instance& inst_;
  double eps_sq_;
  double cell_;
  int cols_ = 0;
  int rows_ = 0;
  std::vector<std::vector<int>> buckets_;
  std::vector<double> scratch_x_;
  std::vector<double> scratch_y_;
  std::vector<int> scratch_id_;
  std::vector<double> scratch_d_;
};

}  // namespace

ClusterResult gdbscan(const Instance& inst, double epsilon, int min_pts) {
  require(epsilon > 0.0, "epsilon must be positive");
  require(min_pts >= 1, "min_pts must be >= 1");

  const int n = inst.n();
  constexpr int kUnvisited = -2;

  ClusterResult res;
  res.epsilon = epsilon;
  res.min_pts = min_pts;
  res.labels.assign(static_cast<size_t>(n), kUnvisited);

  GridIndex index(inst, epsilon);
  std::vector<std::vector<int>> neighbors(static_cast<size_t>(n));
  std::vector<bool> core(static_cast<size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    index.query(i, neighbors[static_cast<size_t>(i)]);
    core[static_cast<size_t>(i)] =
        static_cast<int>(neighbors[static_cast<size_t>(i)].size()) >= min_pts;
  }

  int cid = 0;
  std::deque<int> frontier;
  for (int i = 0; i < n; ++i) {
    if (res.labels[static_cast<size_t>(i)] != kUnvisited) continue;
    if (!core[static_cast<size_t>(i)]) {
      res.labels[static_cast<size_t>(i)] = kNoise;
      continue;
    }
    res.labels[static_cast<size_t>(i)] = cid;
    frontier.assign(neighbors[static_cast<size_t>(i)].begin(),
                    neighbors[static_cast<size_t>(i)].end());
    while (!frontier.empty()) {
      const int q = frontier.front();
      frontier.pop_front();
      int& lab = res.labels[static_cast<size_t>(q)];
      if (lab == kNoise) {
        lab = cid;  // border point, claimed by the discovering cluster
        continue;
      }
      if (lab != kUnvisited) continue;
      lab = cid;
      if (core[static_cast<size_t>(q)]) {
        for (int r : neighbors[static_cast<size_t>(q)]) {
          const int rl = res.labels[static_cast<size_t>(r)];
          if (rl == kUnvisited || rl == kNoise) frontier.push_back(r);
        }
      }
    }
    ++cid;
  }
  res.cluster_count = cid;
  return res;
}

ClusterSweep cluster_sweep(const Instance& inst, int min_pts) {
  ClusterSweep sweep;
  sweep.min_pts = min_pts;
  sweep.counts_by_eps.reserve(kSweepEpsMax - kSweepEpsMin + 1);
  int max_count = 0;
  for (int eps = kSweepEpsMin; eps <= kSweepEpsMax; ++eps) {
    const ClusterResult r = gdbscan(inst, static_cast<double>(eps), min_pts);
    sweep.counts_by_eps.push_back(r.cluster_count);
    max_count = std::max(max_count, r.cluster_count);
  }
  sweep.occurrences.assign(static_cast<size_t>(max_count) + 1, 0.0);
  for (int c : sweep.counts_by_eps) {
    sweep.occurrences[static_cast<size_t>(c)] += 1.0;
  }
  return sweep;
}

ClusterSweep average_sweep(const std::vector<ClusterSweep>& sweeps) {
  require(!sweeps.empty(), "average_sweep needs a non-empty set");
  ClusterSweep avg;
  avg.min_pts = sweeps.front().min_pts;
  avg.instances = static_cast<int>(sweeps.size());
  size_t width = 0;
  for (const ClusterSweep& s : sweeps) {
    width = std::max(width, s.occurrences.size());
  }
  avg.occurrences.assign(width, 0.0);
  for (const ClusterSweep& s : sweeps) {
    for (size_t i = 0; i < s.occurrences.size(); ++i) {
      avg.occurrences[i] += s.occurrences[i];
    }
  }
  for (double& v : avg.occurrences) {
    v /= static_cast<double>(sweeps.size());
  }
  return avg;
}

}  // namespace tspforge::cluster
