#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tspforge/instance.hpp"
#include "tspforge/lk.hpp"
#include "tspforge/rng.hpp"

namespace tspforge::evolve {

struct EAConfig {
  int population_size = 30;
  int generations = 600;
  int offspring_per_generation = 29;
  int elitism = 1;
  double pm_start = 0.5;
  double pm_end = 0.01;
  double bias = 2.0;
  int n_cities = 100;
  int grid_size = 400;
  std::uint64_t master_seed = 0;
  lk::Variant solver_variant = lk::Variant::kClk;
  lk::SolverConfig solver;
  std::string run_label = "run0";

  void validate() const;
};

/// pm(g) = pm_end + (pm_start - pm_end) * 2^(-g / bias); strictly
/// decreasing in g with asymptote pm_end. g is 0-based, so the first
/// offspring batch mutates at exactly pm_start.
double mutation_rate(int generation, const EAConfig& cfg);

/// Per-gene uniform choice between the parents' city at the same index.
Instance uniform_crossover(const Instance& a, const Instance& b, Rng& rng,
                           const std::string& child_id);

/// Replaces each city independently with probability pm by a uniform random
/// grid coordinate.
Instance mutate(const Instance& inst, double pm, Rng& rng,
                const std::string& child_id);

struct EvaluatedInstance {
  Instance instance;
  std::uint64_t fitness = 0;  // edge exchanges of exactly one recorded solve
  std::uint64_t solve_seed = 0;
  bool capped = false;
};

/// Two-tournament selection: two distinct individuals drawn uniformly
/// without replacement; higher fitness wins, ties broken uniformly.
const EvaluatedInstance& tournament_select(
    const std::vector<EvaluatedInstance>& population, Rng& rng);

struct GenerationRecord {
  int generation = 0;  // 0 = initial population
  std::uint64_t best_fitness = 0;
  double mean_fitness = 0.0;
  std::string best_id;
};

struct EvolutionRun {
  EAConfig config;
  std::vector<GenerationRecord> records;  // generations + 1 entries
  std::vector<EvaluatedInstance> final_population;
  std::size_t final_best_index = 0;
  std::uint64_t total_solver_invocations = 0;
  std::uint64_t offspring_evaluations = 0;  // excludes the initial population

  const EvaluatedInstance& hardest() const {
    return final_population[final_best_index];
  }
};

/// The full evolutionary loop: fitness = solver edge exchanges, tournament
/// selection, uniform crossover, decaying mutation, 1-elitism. Fitness is
/// evaluated once per individual with a seed derived from (master_seed,
/// generation, index) and cached; the elite is never re-solved. Offspring
/// fitness evaluations may run on eval_jobs threads; results merge by index
/// so the run record is identical for any job count.
EvolutionRun evolve(const EAConfig& cfg,
                    const std::optional<std::vector<Instance>>& initial =
                        std::nullopt,
                    int eval_jobs = 1);

}  // namespace tspforge::evolve
