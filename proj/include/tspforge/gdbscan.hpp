#pragma once

#include <vector>

#include "tspforge/instance.hpp"

namespace tspforge::cluster {

inline constexpr int kNoise = -1;

inline constexpr int kSweepEpsMin = 10;
inline constexpr int kSweepEpsMax = 80;  // inclusive; 71 settings
inline constexpr int kDefaultMinPts = 4;

struct ClusterResult {
  double epsilon = 0.0;
  int min_pts = 0;
  std::vector<int> labels;  // cluster id in 0..cluster_count-1, or kNoise
  int cluster_count = 0;
};

/// Density clustering with a Euclidean eps-ball neighborhood. A city is a
/// core point when it has >= min_pts neighbors within eps (itself excluded,
/// boundary inclusive). Clusters are the density-connected components of
/// core points; border points join the first cluster that reaches them;
/// everything else is noise. Deterministic for a given city ordering.
ClusterResult gdbscan(const Instance& inst, double epsilon, int min_pts);

/// Cluster counts for every eps in {10..80} plus the histogram
/// "cluster count -> number of eps settings yielding it" (occurrences over
/// one instance sum to 71).
struct ClusterSweep {
  std::vector<int> counts_by_eps;     // indexed by eps - kSweepEpsMin
  std::vector<double> occurrences;    // indexed by cluster count
  int min_pts = kDefaultMinPts;
  int instances = 1;                  // 1 for a single-instance sweep
};

ClusterSweep cluster_sweep(const Instance& inst, int min_pts = kDefaultMinPts);

/// Bin-wise mean of the per-instance occurrence histograms.
ClusterSweep average_sweep(const std::vector<ClusterSweep>& sweeps);

}  // namespace tspforge::cluster
