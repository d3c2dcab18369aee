#include "tspforge/lk.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "tspforge/csv.hpp"
#include "tspforge/errors.hpp"

namespace tspforge::lk {

namespace {

// Gains below this are treated as zero; stops FP ties from cycling.
constexpr double kGainEps = 1e-9;
constexpr int kMaxBreadth = 16;

class Engine {
 public:
  Engine(Tour& tour, const NeighborLists& nbrs, const SolverConfig& cfg,
         EffortCounter& counter, Rng& rng, const ClusterDistanceMatrix* comp)
      : tour_(tour),
        dm_(tour.matrix()),
        nbrs_(nbrs),
        cfg_(cfg),
        counter_(counter),
        rng_(rng),
        comp_(comp),
        n_(tour.n()),
        in_queue_(static_cast<size_t>(n_), 0) {}

  void run() {
    std::vector<int> order(static_cast<size_t>(n_));
    std::iota(order.begin(), order.end(), 0);
    rng_.shuffle(order.data(), order.size());
    for (int c : order) push(c);
    while (!queue_.empty() && !counter_.cap_exceeded()) {
      improve_city(pop());
    }
    tour_.refresh_length();
  }

 private:
  struct Hop {
    int last;
    int cand;
    int newlast;
  };

  double guide_cost(int a, int b) const {
    const double d = dm_(a, b);
    return comp_ ? d - (*comp_)(a, b) : d;
  }

  void push(int c) {
    if (!in_queue_[static_cast<size_t>(c)]) {
      in_queue_[static_cast<size_t>(c)] = 1;
      queue_.push_back(c);
    }
  }

  int pop() {
    const int c = queue_.front();
    queue_.pop_front();
    in_queue_[static_cast<size_t>(c)] = 0;
    return c;
  }

  // Reverses the tour path from `from` to `to`, where `from` is adjacent to
  // t1: removes edges (t1, from) and (to, beyond-to), adds (t1, to) and
  // (from, beyond-to). One counted edge exchange.
  void flip_between(int t1, int from, int to) {
    counter_.add();
    if (tour_.next(t1) == from) {
      tour_.flip_cyclic(tour_.position_of(from), tour_.position_of(to));
    } else {
      tour_.flip_cyclic(tour_.position_of(to), tour_.position_of(from));
    }
  }

  void improve_city(int t1) {
    for (int orientation = 0; orientation < 2; ++orientation) {
      while (!counter_.cap_exceeded()) {
        const int t2 = orientation == 0 ? tour_.next(t1) : tour_.prev(t1);
        const double g = dm_(t1, t2);
        path_.clear();
        if (!step(1, t1, t2, g, g)) break;
        push(t1);
        for (const Hop& h : path_) {
          push(h.last);
          push(h.cand);
          push(h.newlast);
        }
      }
    }
  }

  bool step(int level, int t1, int last, double gain_true, double gain_guide) {
    const bool fwd = tour_.next(t1) == last;
    const int skip = fwd ? tour_.next(last) : tour_.prev(last);

    struct Cand {
      int c;
      int newlast;
      double rank;
    };
    Cand cands[kMaxBreadth];
    int m = 0;
    const int breadth =
        std::min(level <= 2 ? cfg_.backtrack_breadth : 1, kMaxBreadth);

    for (int c : nbrs_.of(last)) {
      if (c == t1 || c == skip) continue;
      const double add_guide = guide_cost(last, c);
      if (!(add_guide < gain_guide - kGainEps)) continue;
      const int newlast = fwd ? tour_.prev(c) : tour_.next(c);
      const double rank = add_guide - dm_(c, newlast);
      if (m == breadth && rank >= cands[m - 1].rank) continue;
      int at = m < breadth ? m : m - 1;
      if (m < breadth) ++m;
      while (at > 0 && cands[at - 1].rank > rank) {
        cands[at] = cands[at - 1];
        --at;
      }
      cands[at] = Cand{c, newlast, rank};
    }

    for (int idx = 0; idx < m; ++idx) {
      if (counter_.cap_exceeded()) return false;
      const int c = cands[idx].c;
      const int newlast = cands[idx].newlast;
      const double removed = dm_(c, newlast);
      const double g_true = gain_true - dm_(last, c) + removed;
      const double g_guide = gain_guide - guide_cost(last, c) + removed;
      const double close_gain = g_true - dm_(t1, newlast);

      flip_between(t1, last, newlast);
      path_.push_back(Hop{last, c, newlast});

      if (close_gain > kGainEps) return true;
      if (level < cfg_.max_depth && g_guide > kGainEps &&
          step(level + 1, t1, newlast, g_true, g_guide)) {
        return true;
      }

      path_.pop_back();
      flip_between(t1, newlast, last);
    }
    return false;
  }

  Tour& tour_;
  const DistanceMatrix& dm_;
  const NeighborLists& nbrs_;
  const SolverConfig& cfg_;
  EffortCounter& counter_;
  Rng& rng_;
  const ClusterDistanceMatrix* comp_;
  int n_;
  std::deque<int> queue_;
  std::vector<char> in_queue_;
  std::vector<Hop> path_;
};

SolveStats finish_stats(const Instance& inst, Variant variant,
                        std::uint64_t seed, const Tour& tour,
                        std::span<const int> best_order, double best_length,
                        const EffortCounter& counter) {
  SolveStats st;
  st.instance_id = inst.id();
  st.variant = variant;
  st.seed = seed;
  st.tour_order.assign(best_order.begin(), best_order.end());
  st.length = best_length;
  st.edge_exchanges = counter.count();
  st.capped = counter.cap_exceeded();
  st.flip_invocations = tour.flip_count();
  check_invariant(is_permutation_of_n(st.tour_order, inst.n()),
                  "solver produced a non-permutation tour");
  return st;
}

SolveStats run_single_pass(const Instance& inst, const SolverConfig& cfg,
                           std::uint64_t seed, Variant variant,
                           bool compensate) {
  cfg.validate();
  Rng rng(seed);
  const DistanceMatrix dm(inst);
  const NeighborLists nbrs(dm, cfg.neighbor_list_size);
  ClusterDistanceMatrix cdm;
  if (compensate) cdm = cluster_distances(dm);

  EffortCounter counter(cfg.effort_cap);
  const int start = static_cast<int>(rng.below(inst.n()));
  Tour tour = nearest_neighbor_tour(inst, dm, start, rng);
  Engine(tour, nbrs, cfg, counter, rng, compensate ? &cdm : nullptr).run();
  return finish_stats(inst, variant, seed, tour, tour.order(), tour.length(),
                      counter);
}

}  // namespace

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::kLk:
      return "LK";
    case Variant::kClk:
      return "CLK";
    case Variant::kLkCc:
      return "LK-CC";
  }
  return "?";
}

std::optional<Variant> variant_from_name(std::string_view name) {
  if (name == "LK" || name == "lk") return Variant::kLk;
  if (name == "CLK" || name == "clk") return Variant::kClk;
  if (name == "LK-CC" || name == "lk-cc" || name == "lkcc") {
    return Variant::kLkCc;
  }
  return std::nullopt;
}

void SolverConfig::validate() const {
  require(neighbor_list_size >= 1, "neighbor_list_size must be >= 1");
  require(backtrack_breadth >= 1, "backtrack_breadth must be >= 1");
  require(max_depth >= 1, "max_depth must be >= 1");
  require(chain_length_factor > 0.0, "chain_length_factor must be positive");
  require(!effort_cap || *effort_cap >= 1, "effort_cap must be >= 1 if set");
}

const char* SolveStats::csv_header() {
  return "instance_id,variant,seed,length,edge_exchanges,capped";
}

std::string SolveStats::csv_row() const {
  std::string row = instance_id;
  row += ',';
  row += variant_name(variant);
  row += ',';
  row += std::to_string(seed);
  row += ',';
  append_double(row, length);
  row += ',';
  row += std::to_string(edge_exchanges);
  row += ',';
  row += capped ? '1' : '0';
  return row;
}

void lk_optimize(Tour& tour, const NeighborLists& nbrs,
                 const SolverConfig& cfg, EffortCounter& counter, Rng& rng,
                 const ClusterDistanceMatrix* compensation) {
  cfg.validate();
  Engine(tour, nbrs, cfg, counter, rng, compensation).run();
}

void double_bridge_kick(Tour& tour, Rng& rng) {
  const int n = tour.n();
  require(n >= 8, "double bridge needs n >= 8");
  int cuts[3];
  for (;;) {
    for (int& c : cuts) {
      c = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    }
    std::sort(cuts, cuts + 3);
    if (cuts[0] != cuts[1] && cuts[1] != cuts[2]) break;
  }
  const auto order = tour.order();
  std::vector<int> kicked;
  kicked.reserve(static_cast<size_t>(n));
  auto emit = [&](int from, int to) {
    for (int i = from; i < to; ++i) kicked.push_back(order[i]);
  };
  emit(0, cuts[0]);
  emit(cuts[1], cuts[2]);
  emit(cuts[0], cuts[1]);
  emit(cuts[2], n);
  tour.set_order(kicked);
}

SolveStats chained_lk(const Instance& inst, const SolverConfig& cfg,
                      std::uint64_t seed) {
  cfg.validate();
  Rng rng(seed);
  const DistanceMatrix dm(inst);
  const NeighborLists nbrs(dm, cfg.neighbor_list_size);
  const int n = inst.n();

  EffortCounter counter(cfg.effort_cap);
  const int start = static_cast<int>(rng.below(n));
  Tour tour = nearest_neighbor_tour(inst, dm, start, rng);
  Engine(tour, nbrs, cfg, counter, rng, nullptr).run();

  std::vector<int> best(tour.order().begin(), tour.order().end());
  double best_length = tour.length();

  const int kicks =
      n >= 8 ? static_cast<int>(std::ceil(cfg.chain_length_factor * n)) : 0;
  for (int k = 0; k < kicks && !counter.cap_exceeded(); ++k) {
    double_bridge_kick(tour, rng);
    Engine(tour, nbrs, cfg, counter, rng, nullptr).run();
    if (tour.length() <= best_length) {
      best.assign(tour.order().begin(), tour.order().end());
      best_length = tour.length();
    } else {
      tour.set_order(best);
    }
  }
  return finish_stats(inst, Variant::kClk, seed, tour, best, best_length,
                      counter);
}

SolveStats lk_cc(const Instance& inst, const SolverConfig& cfg,
                 std::uint64_t seed) {
  return run_single_pass(inst, cfg, seed, Variant::kLkCc, true);
}

SolveStats plain_lk(const Instance& inst, const SolverConfig& cfg,
                    std::uint64_t seed) {
  return run_single_pass(inst, cfg, seed, Variant::kLk, false);
}

SolveStats solve(const Instance& inst, Variant variant,
                 const SolverConfig& cfg, std::uint64_t seed) {
  switch (variant) {
    case Variant::kLk:
      return plain_lk(inst, cfg, seed);
    case Variant::kClk:
      return chained_lk(inst, cfg, seed);
    case Variant::kLkCc:
      return lk_cc(inst, cfg, seed);
  }
  throw internal_error("unknown solver variant");
}

}  // namespace tspforge::lk
