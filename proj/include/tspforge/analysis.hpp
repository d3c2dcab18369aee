#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tspforge/instance.hpp"
#include "tspforge/lk.hpp"

namespace tspforge::analysis {

/// Binned counts with fixed bin width; bins[i] covers
/// [i*bin_width, (i+1)*bin_width). For a set of instances the bins hold the
/// mean count per instance; ci_half, when filled, is the 95% confidence
/// half-width across instances (normal approximation).
struct Histogram {
  double bin_width = 1.0;
  std::vector<double> bins;
  std::vector<double> ci_half;
  std::uint64_t observations = 0;  // raw observations across the whole set
  int instances = 0;

  /// Sum of mean counts over bins whose left edge lies in [lo, hi).
  double mass(double lo, double hi) const;
  double total() const;
};

/// Per-tour segment (edge) lengths, one histogram averaged over the set.
/// instances and orders are aligned; each order must be a permutation of
/// its instance's cities and contributes exactly n observations.
Histogram segment_length_histogram(
    const std::vector<const Instance*>& instances,
    const std::vector<std::vector<int>>& orders, double bin_width = 1.0);

/// All n(n-1)/2 pair distances per instance, averaged over the set, with a
/// 95% confidence band per bin.
Histogram pairwise_distance_histogram(
    const std::vector<const Instance*>& instances, double bin_width = 1.0);

/// Mean and population standard deviation (N divisor), median and 5th/95th
/// percentiles by nearest rank (value at index ceil(p/100 * N), 1-based).
struct EffortSummary {
  double mean = 0.0;
  double stdev = 0.0;
  double median = 0.0;
  double p5 = 0.0;
  double p95 = 0.0;
  std::size_t count = 0;
};

EffortSummary effort_summary(std::span<const std::uint64_t> efforts);
EffortSummary effort_summary(const std::vector<lk::SolveStats>& stats);

double median_of(std::span<const std::uint64_t> values);

/// One cell of the set-swapping table: a variant run over a named set.
struct SwapCell {
  std::string set_name;
  lk::Variant variant = lk::Variant::kClk;
  EffortSummary summary;
  std::vector<std::uint64_t> efforts;  // per instance, in set order
};

struct SwapMatrix {
  std::vector<SwapCell> cells;
  const SwapCell& cell(const std::string& set_name, lk::Variant v) const;
  std::string csv() const;
};

/// Runs every variant on every named set (one seeded solve per instance,
/// seeds derived from master_seed) and summarizes the efforts per cell.
SwapMatrix swap_matrix(
    const std::vector<std::pair<std::string, const std::vector<Instance>*>>&
        sets,
    const std::vector<lk::Variant>& variants, const lk::SolverConfig& cfg,
    std::uint64_t master_seed, int jobs = 1);

}  // namespace tspforge::analysis
