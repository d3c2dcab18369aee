#include "tspforge/evolver.hpp"

#include <cmath>
#include <utility>

#include "tspforge/errors.hpp"
#include "tspforge/parallel.hpp"

namespace tspforge::evolve {

void EAConfig::validate() const {
  require(population_size >= 2, "population_size must be >= 2");
  require(generations >= 0, "generations must be >= 0");
  require(elitism >= 0, "elitism must be >= 0");
  require(offspring_per_generation + elitism == population_size,
          "offspring_per_generation + elitism must equal population_size");
  require(pm_end > 0.0 && pm_end <= pm_start && pm_start <= 1.0,
          "need 0 < pm_end <= pm_start <= 1");
  require(bias > 0.0, "bias must be positive");
  require(n_cities >= 3, "n_cities must be >= 3");
  require(grid_size >= 1, "grid_size must be positive");
  solver.validate();
}

double mutation_rate(int generation, const EAConfig& cfg) {
  require(generation >= 0, "generation must be >= 0");
  return cfg.pm_end +
         (cfg.pm_start - cfg.pm_end) *
             std::exp2(-static_cast<double>(generation) / cfg.bias);
}

Instance uniform_crossover(const Instance& a, const Instance& b, Rng& rng,
                           const std::string& child_id) {
  require(a.n() == b.n() && a.grid_size() == b.grid_size(),
          "uniform_crossover parents have mismatched shapes");
  std::vector<Point> cities(static_cast<size_t>(a.n()));
  for (size_t i = 0; i < cities.size(); ++i) {
    cities[i] = rng.coin_flip() ? a.cities()[i] : b.cities()[i];
  }
  return Instance(child_id, a.grid_size(), std::move(cities));
}

Instance mutate(const Instance& inst, double pm, Rng& rng,
                const std::string& child_id) {
  require(pm >= 0.0 && pm <= 1.0, "mutation probability must be in [0,1]");
  std::vector<Point> cities = inst.cities();
  const std::uint64_t grid = static_cast<std::uint64_t>(inst.grid_size());
  for (Point& p : cities) {
    if (rng.unit_real() < pm) {
      p.x = static_cast<int>(rng.below(grid));
      p.y = static_cast<int>(rng.below(grid));
    }
  }
  return Instance(child_id, inst.grid_size(), std::move(cities));
}

const EvaluatedInstance& tournament_select(
    const std::vector<EvaluatedInstance>& population, Rng& rng) {
  require(population.size() >= 2, "tournament needs at least 2 individuals");
  const size_t n = population.size();
  const size_t i = static_cast<size_t>(rng.below(n));
  size_t j = static_cast<size_t>(rng.below(n - 1));
  if (j >= i) ++j;
  const EvaluatedInstance& a = population[i];
  const EvaluatedInstance& b = population[j];
  if (a.fitness != b.fitness) {
    return a.fitness > b.fitness ? a : b;
  }
  return rng.coin_flip() ? a : b;
}

namespace {

GenerationRecord record_of(int generation,
                           const std::vector<EvaluatedInstance>& population,
                           size_t* best_index_out) {
  GenerationRecord rec;
  rec.generation = generation;
  size_t best = 0;
  double sum = 0.0;
  for (size_t i = 0; i < population.size(); ++i) {
    sum += static_cast<double>(population[i].fitness);
    if (population[i].fitness > population[best].fitness) best = i;
  }
  rec.best_fitness = population[best].fitness;
  rec.mean_fitness = sum / static_cast<double>(population.size());
  rec.best_id = population[best].instance.id();
  if (best_index_out) *best_index_out = best;
  return rec;
}

}  // namespace

EvolutionRun evolve(const EAConfig& cfg,
                    const std::optional<std::vector<Instance>>& initial,
                    int eval_jobs) {
  cfg.validate();
  require(cfg.elitism == 1,
          "this evolver implements exactly 1-elitism generational replacement");

  EvolutionRun run;
  run.config = cfg;

  auto evaluate = [&](Instance inst, std::uint64_t seed) {
    lk::SolveStats st = lk::solve(inst, cfg.solver_variant, cfg.solver, seed);
    EvaluatedInstance ev{std::move(inst), st.edge_exchanges, seed, st.capped};
    return ev;
  };

  // Initial population: provided externally (the shared random set) or
  // sampled uniformly from the master seed.
  std::vector<EvaluatedInstance> population(
      static_cast<size_t>(cfg.population_size),
      EvaluatedInstance{Instance("tmp", 1, {{0, 0}, {0, 0}, {0, 0}}), 0, 0,
                        false});
  if (initial) {
    require(static_cast<int>(initial->size()) == cfg.population_size,
            "initial population must have population_size instances");
  }
  parallel_for(population.size(), eval_jobs, [&](size_t i) {
    const std::uint64_t seed =
        derive_seed(cfg.master_seed, {kSeedFitness, 0, i});
    if (initial) {
      population[i] = evaluate((*initial)[i], seed);
    } else {
      Rng gen_rng(derive_seed(cfg.master_seed, {kSeedInitPopulation, i}));
      population[i] = evaluate(
          Instance::uniform_random(cfg.run_label + "_g0_i" + std::to_string(i),
                                   cfg.n_cities, cfg.grid_size, gen_rng),
          seed);
    }
  });
  run.total_solver_invocations += population.size();

  size_t best_index = 0;
  run.records.push_back(record_of(0, population, &best_index));

  std::vector<EvaluatedInstance> offspring;
  for (int g = 0; g < cfg.generations; ++g) {
    const double pm = mutation_rate(g, cfg);
    const int count = cfg.offspring_per_generation;

    // Build all offspring genomes first (cheap, sequential by index), then
    // evaluate them, possibly in parallel; everything is keyed by (g, i).
    std::vector<Instance> children;
    children.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
      Rng rng(derive_seed(cfg.master_seed,
                          {kSeedOffspring, static_cast<std::uint64_t>(g),
                           static_cast<std::uint64_t>(i)}));
      const std::string id = cfg.run_label + "_g" + std::to_string(g + 1) +
                             "_i" + std::to_string(i);
      const EvaluatedInstance& pa = tournament_select(population, rng);
      const EvaluatedInstance& pb = tournament_select(population, rng);
      Instance child = uniform_crossover(pa.instance, pb.instance, rng, id);
      children.push_back(mutate(child, pm, rng, id));
    }

    offspring.assign(static_cast<size_t>(count),
                     EvaluatedInstance{population[0].instance, 0, 0, false});
    parallel_for(children.size(), eval_jobs, [&](size_t i) {
      const std::uint64_t seed = derive_seed(
          cfg.master_seed,
          {kSeedFitness, static_cast<std::uint64_t>(g) + 1, i});
      offspring[i] = evaluate(std::move(children[i]), seed);
    });
    run.total_solver_invocations += offspring.size();
    run.offspring_evaluations += offspring.size();

    // 1-elitism: offspring plus the current best, fitness kept cached.
    EvaluatedInstance elite = std::move(population[best_index]);
    population.clear();
    population = std::move(offspring);
    offspring = {};
    population.push_back(std::move(elite));

    run.records.push_back(record_of(g + 1, population, &best_index));
    check_invariant(
        run.records.back().best_fitness >=
            run.records[run.records.size() - 2].best_fitness,
        "elitism must keep the best fitness non-decreasing");
  }

  run.final_best_index = best_index;
  run.final_population = std::move(population);
  return run;
}

}  // namespace tspforge::evolve
