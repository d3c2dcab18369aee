#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tspforge/cluster_distance.hpp"
#include "tspforge/distance_matrix.hpp"
#include "tspforge/instance.hpp"
#include "tspforge/rng.hpp"
#include "tspforge/tour.hpp"

namespace tspforge::lk {

enum class Variant { kLk, kClk, kLkCc };

const char* variant_name(Variant v);  // "LK" / "CLK" / "LK-CC"
std::optional<Variant> variant_from_name(std::string_view name);

struct SolverConfig {
  int neighbor_list_size = 8;
  int backtrack_breadth = 5;  // candidates tried at depths 1-2
  int max_depth = 5;          // maximum sequential move depth
  double chain_length_factor = 1.0;  // CLK kicks = ceil(factor * n)
  std::optional<std::uint64_t> effort_cap = 100'000'000;  // flips per solve

  void validate() const;
};

/// Monotone flip counter with an optional cap. Never reset during a run.
class EffortCounter {
 public:
  explicit EffortCounter(std::optional<std::uint64_t> cap) : cap_(cap) {}
  void add() { ++count_; }
  std::uint64_t count() const { return count_; }
  bool cap_exceeded() const { return cap_ && count_ >= *cap_; }

 private:
  std::uint64_t count_ = 0;
  std::optional<std::uint64_t> cap_;
};

struct SolveStats {
  std::string instance_id;
  Variant variant = Variant::kClk;
  std::uint64_t seed = 0;
  std::vector<int> tour_order;
  double length = 0.0;
  std::uint64_t edge_exchanges = 0;
  bool capped = false;

  // Cross-check instrumentation: the solve tour's own flip-primitive count.
  // Always equals edge_exchanges; not serialized.
  std::uint64_t flip_invocations = 0;

  static const char* csv_header();
  std::string csv_row() const;
};

/// Lin-Kernighan local search over `tour`, in place. Sequential edge
/// exchanges from k-nearest-neighbor candidate lists with backtracking at
/// shallow depths and don't-look bits. Every applied segment reversal,
/// including tentative ones later undone (and the undo itself), bumps
/// `counter`. When `compensation` is given, candidate scoring and pruning
/// use the compensated cost d(v,w) - c(v,w) for added edges; move
/// acceptance always uses true distances. Returns with the cached length
/// refreshed from scratch.
void lk_optimize(Tour& tour, const NeighborLists& nbrs,
                 const SolverConfig& cfg, EffortCounter& counter, Rng& rng,
                 const ClusterDistanceMatrix* compensation = nullptr);

/// Chained Lin-Kernighan: nearest-neighbor construction, one LK pass, then
/// ceil(chain_length_factor * n) double-bridge kicks each followed by
/// re-optimization; a kicked result is kept iff not longer than the
/// incumbent. Instances with n < 8 get no kicks.
SolveStats chained_lk(const Instance& inst, const SolverConfig& cfg,
                      std::uint64_t seed);

/// Lin-Kernighan with cluster compensation: a single LK pass whose move
/// guidance discounts candidate edges by the bottleneck cluster distance.
SolveStats lk_cc(const Instance& inst, const SolverConfig& cfg,
                 std::uint64_t seed);

/// Plain single-pass LK (no chaining, no compensation).
SolveStats plain_lk(const Instance& inst, const SolverConfig& cfg,
                    std::uint64_t seed);

SolveStats solve(const Instance& inst, Variant variant,
                 const SolverConfig& cfg, std::uint64_t seed);

/// Double-bridge perturbation over 3 uniformly chosen distinct cut points.
/// Rebuilds the order wholesale (not an edge exchange; not counted).
void double_bridge_kick(Tour& tour, Rng& rng);

}  // namespace tspforge::lk
