#include "tspforge/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "tspforge/csv.hpp"
#include "tspforge/errors.hpp"
#include "tspforge/kernels.hpp"
#include "tspforge/parallel.hpp"
#include "tspforge/rng.hpp"

namespace tspforge::analysis {

namespace {

size_t bin_of(double value, double bin_width) {
  return static_cast<size_t>(std::floor(value / bin_width));
}

// Accumulates one instance's raw counts, then folds them into the running
// per-bin mean/variance (stable summation in declared input order).
struct SetAccumulator {
  explicit SetAccumulator(double bw) : bin_width(bw) {}

  void add_observation(double v) {
    const size_t b = bin_of(v, bin_width);
    if (b >= current.size()) current.resize(b + 1, 0.0);
    current[b] += 1.0;
    ++observations;
  }

  void finish_instance() {
    if (current.size() > sum.size()) {
      sum.resize(current.size(), 0.0);
      sum_sq.resize(current.size(), 0.0);
    }
    for (size_t b = 0; b < current.size(); ++b) {
      sum[b] += current[b];
      sum_sq[b] += current[b] * current[b];
    }
    current.assign(current.size(), 0.0);
    ++instances;
  }

  Histogram build(bool with_ci) const {
    Histogram h;
    h.bin_width = bin_width;
    h.observations = observations;
    h.instances = instances;
    const double m = static_cast<double>(instances);
    h.bins.resize(sum.size());
    if (with_ci) h.ci_half.resize(sum.size());
    for (size_t b = 0; b < sum.size(); ++b) {
      const double mean = sum[b] / m;
      h.bins[b] = mean;
      if (with_ci) {
        const double var = std::max(0.0, sum_sq[b] / m - mean * mean);
        h.ci_half[b] = 1.96 * std::sqrt(var / m);
      }
    }
    return h;
  }

  double bin_width;
  std::vector<double> current;
  std::vector<double> sum;
  std::vector<double> sum_sq;
  std::uint64_t observations = 0;
  int instances = 0;
};

double nearest_rank(std::span<const double> sorted, double pct) {
  const size_t n = sorted.size();
  size_t rank = static_cast<size_t>(
      std::ceil(pct / 100.0 * static_cast<double>(n)));
  if (rank < 1) rank = 1;
  if (rank > n) rank = n;
  return sorted[rank - 1];
}

}  // namespace

double Histogram::mass(double lo, double hi) const {
  double acc = 0.0;
  for (size_t b = 0; b < bins.size(); ++b) {
    const double left = static_cast<double>(b) * bin_width;
    if (left >= lo && left < hi) acc += bins[b];
  }
  return acc;
}

double Histogram::total() const {
  double acc = 0.0;
  for (double v : bins) acc += v;
  return acc;
}

Histogram segment_length_histogram(
    const std::vector<const Instance*>& instances,
    const std::vector<std::vector<int>>& orders, double bin_width) {
  require(!instances.empty(), "segment_length_histogram needs instances");
  require(instances.size() == orders.size(),
          "segment_length_histogram: instances and orders are misaligned");

  SetAccumulator acc(bin_width);
  for (size_t k = 0; k < instances.size(); ++k) {
    const Instance& inst = *instances[k];
    const std::vector<int>& order = orders[k];
    require(is_permutation_of_n(order, inst.n()),
            "segment_length_histogram: order is not a tour of its instance");
    const int n = inst.n();
    for (int i = 0; i < n; ++i) {
      const int a = order[static_cast<size_t>(i)];
      const int b = order[static_cast<size_t>((i + 1 == n) ? 0 : i + 1)];
      acc.add_observation(distance(inst, a, b));
    }
    acc.finish_instance();
  }
  return acc.build(false);
}

Histogram pairwise_distance_histogram(
    const std::vector<const Instance*>& instances, double bin_width) {
  require(!instances.empty(), "pairwise_distance_histogram needs instances");

  SetAccumulator acc(bin_width);
  std::vector<double> row;
  for (const Instance* pinst : instances) {
    const Instance& inst = *pinst;
    const size_t n = static_cast<size_t>(inst.n());
    row.resize(n);
    const double* xs = inst.xs().data();
    const double* ys = inst.ys().data();
    for (size_t i = 0; i + 1 < n; ++i) {
      kern::dist_point_to_many(xs[i], ys[i], xs + i + 1, ys + i + 1,
                               n - i - 1, row.data());
      for (size_t j = 0; j < n - i - 1; ++j) {
        acc.add_observation(row[j]);
      }
    }
    acc.finish_instance();
  }
  return acc.build(true);
}

EffortSummary effort_summary(std::span<const std::uint64_t> efforts) {
  require(!efforts.empty(), "effort_summary needs a non-empty list");
  std::vector<double> vals(efforts.begin(), efforts.end());
  std::sort(vals.begin(), vals.end());

  EffortSummary s;
  s.count = vals.size();
  double sum = 0.0;
  for (double v : vals) sum += v;
  s.mean = sum / static_cast<double>(vals.size());
  double sq = 0.0;
  for (double v : vals) sq += (v - s.mean) * (v - s.mean);
  s.stdev = std::sqrt(sq / static_cast<double>(vals.size()));
  s.median = nearest_rank(vals, 50.0);
  s.p5 = nearest_rank(vals, 5.0);
  s.p95 = nearest_rank(vals, 95.0);
  check_invariant(s.p5 <= s.median && s.median <= s.p95,
                  "percentiles out of order");
  return s;
}

EffortSummary effort_summary(const std::vector<lk::SolveStats>& stats) {
  std::vector<std::uint64_t> efforts;
  efforts.reserve(stats.size());
  for (const lk::SolveStats& st : stats) efforts.push_back(st.edge_exchanges);
  return effort_summary(efforts);
}

double median_of(std::span<const std::uint64_t> values) {
  return effort_summary(values).median;
}

const SwapCell& SwapMatrix::cell(const std::string& set_name,
                                 lk::Variant v) const {
  for (const SwapCell& c : cells) {
    if (c.set_name == set_name && c.variant == v) return c;
  }
  throw usage_error("swap matrix has no cell (" + set_name + ", " +
                    lk::variant_name(v) + ")");
}

std::string SwapMatrix::csv() const {
  std::string out = "set,variant,count,mean,stdev,median,p5,p95\n";
  for (const SwapCell& c : cells) {
    out += c.set_name;
    out += ',';
    out += lk::variant_name(c.variant);
    out += ',';
    out += std::to_string(c.summary.count);
    out += ',';
    append_double(out, c.summary.mean);
    out += ',';
    append_double(out, c.summary.stdev);
    out += ',';
    append_double(out, c.summary.median);
    out += ',';
    append_double(out, c.summary.p5);
    out += ',';
    append_double(out, c.summary.p95);
    out += '\n';
  }
  return out;
}

SwapMatrix swap_matrix(
    const std::vector<std::pair<std::string, const std::vector<Instance>*>>&
        sets,
    const std::vector<lk::Variant>& variants, const lk::SolverConfig& cfg,
    std::uint64_t master_seed, int jobs) {
  require(!sets.empty(), "swap_matrix needs sets");
  require(!variants.empty(), "swap_matrix needs variants");

  SwapMatrix table;
  for (size_t vi = 0; vi < variants.size(); ++vi) {
    for (size_t si = 0; si < sets.size(); ++si) {
      const std::vector<Instance>& insts = *sets[si].second;
      require(!insts.empty(), "swap_matrix set is empty");
      SwapCell cell;
      cell.set_name = sets[si].first;
      cell.variant = variants[vi];
      cell.efforts.assign(insts.size(), 0);
      parallel_for(insts.size(), jobs, [&](size_t k) {
        const std::uint64_t seed =
            derive_seed(master_seed, {kSeedSolve, vi, si, k});
        cell.efforts[k] =
            lk::solve(insts[k], variants[vi], cfg, seed).edge_exchanges;
      });
      cell.summary = effort_summary(cell.efforts);
      table.cells.push_back(std::move(cell));
    }
  }
  return table;
}

}  // namespace tspforge::analysis
