#include "tspforge/artifact_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "tspforge/csv.hpp"
#include "tspforge/errors.hpp"
#include "tspforge/tsplib.hpp"

namespace tspforge {

std::string artifact_header(std::uint64_t master_seed,
                            const nlohmann::json& config_echo) {
  std::string out = "# tspforge ";
  out += kToolVersion;
  out += "\n# master_seed: ";
  out += std::to_string(master_seed);
  out += "\n# config: ";
  out += config_echo.dump();
  out += "\n";
  return out;
}

nlohmann::json artifact_meta(std::uint64_t master_seed,
                             const nlohmann::json& config_echo) {
  return nlohmann::json{{"tool", "tspforge"},
                        {"version", kToolVersion},
                        {"master_seed", master_seed},
                        {"config", config_echo}};
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot open for writing: " + path.string());
  f << content;
  if (!f) throw io_error("write failed: " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot open: " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

namespace {

// Strict-schema helper: every consumed key is crossed off; leftovers are
// usage errors (a silently ignored typo would corrupt an experiment).
class StrictObject {
 public:
  explicit StrictObject(const nlohmann::json& j, const char* what)
      : j_(j), what_(what) {
    require(j.is_object(), "expected a JSON object");
    for (const auto& item : j.items()) pending_.insert(item.key());
  }

  template <typename T>
  void get(const char* key, T& out) {
    if (auto it = j_.find(key); it != j_.end()) {
      try {
        out = it->get<T>();
      } catch (const nlohmann::json::exception&) {
        throw usage_error(std::string(what_) + ": key '" + key +
                          "' has the wrong type");
      }
      pending_.erase(key);
    }
  }

  const nlohmann::json* sub(const char* key) {
    if (auto it = j_.find(key); it != j_.end()) {
      pending_.erase(key);
      return &*it;
    }
    return nullptr;
  }

  void finish() const {
    if (!pending_.empty()) {
      throw usage_error(std::string(what_) + ": unknown key '" +
                        *pending_.begin() + "'");
    }
  }

 private:
  const nlohmann::json& j_;
  const char* what_;
  std::set<std::string> pending_;
};

}  // namespace
}  // namespace tspforge

namespace tspforge::lk {

nlohmann::json to_json(const SolverConfig& cfg) {
  nlohmann::json j{{"neighbor_list_size", cfg.neighbor_list_size},
                   {"backtrack_breadth", cfg.backtrack_breadth},
                   {"max_depth", cfg.max_depth},
                   {"chain_length_factor", cfg.chain_length_factor}};
  if (cfg.effort_cap) {
    j["effort_cap"] = *cfg.effort_cap;
  } else {
    j["effort_cap"] = nullptr;
  }
  return j;
}

SolverConfig solver_config_from_json(const nlohmann::json& j) {
  SolverConfig cfg;
  StrictObject o(j, "solver config");
  o.get("neighbor_list_size", cfg.neighbor_list_size);
  o.get("backtrack_breadth", cfg.backtrack_breadth);
  o.get("max_depth", cfg.max_depth);
  o.get("chain_length_factor", cfg.chain_length_factor);
  if (const nlohmann::json* cap = o.sub("effort_cap")) {
    if (cap->is_null()) {
      cfg.effort_cap = std::nullopt;
    } else {
      cfg.effort_cap = cap->get<std::uint64_t>();
    }
  }
  o.finish();
  cfg.validate();
  return cfg;
}

}  // namespace tspforge::lk

namespace tspforge::evolve {

nlohmann::json to_json(const EAConfig& cfg) {
  return nlohmann::json{{"population_size", cfg.population_size},
                        {"generations", cfg.generations},
                        {"offspring_per_generation",
                         cfg.offspring_per_generation},
                        {"elitism", cfg.elitism},
                        {"pm_start", cfg.pm_start},
                        {"pm_end", cfg.pm_end},
                        {"bias", cfg.bias},
                        {"n_cities", cfg.n_cities},
                        {"grid_size", cfg.grid_size},
                        {"master_seed", cfg.master_seed},
                        {"variant", variant_name(cfg.solver_variant)},
                        {"run_label", cfg.run_label},
                        {"solver", to_json(cfg.solver)}};
}

EAConfig ea_config_from_json(const nlohmann::json& j) {
  EAConfig cfg;
  StrictObject o(j, "evolver config");
  o.get("population_size", cfg.population_size);
  o.get("generations", cfg.generations);
  o.get("offspring_per_generation", cfg.offspring_per_generation);
  o.get("elitism", cfg.elitism);
  o.get("pm_start", cfg.pm_start);
  o.get("pm_end", cfg.pm_end);
  o.get("bias", cfg.bias);
  o.get("n_cities", cfg.n_cities);
  o.get("grid_size", cfg.grid_size);
  o.get("master_seed", cfg.master_seed);
  o.get("run_label", cfg.run_label);
  std::string variant;
  o.get("variant", variant);
  if (!variant.empty()) {
    const auto v = lk::variant_from_name(variant);
    require(v.has_value(), "evolver config: variant must be CLK or LK-CC");
    cfg.solver_variant = *v;
  }
  if (const nlohmann::json* s = o.sub("solver")) {
    cfg.solver = lk::solver_config_from_json(*s);
  }
  o.finish();
  cfg.validate();
  return cfg;
}

nlohmann::json run_to_json(const EvolutionRun& run) {
  nlohmann::json gens = nlohmann::json::array();
  for (const GenerationRecord& r : run.records) {
    gens.push_back(nlohmann::json{{"generation", r.generation},
                                  {"best_fitness", r.best_fitness},
                                  {"mean_fitness", r.mean_fitness},
                                  {"best_id", r.best_id}});
  }
  const EvaluatedInstance& hardest = run.hardest();
  nlohmann::json j = artifact_meta(run.config.master_seed, to_json(run.config));
  j["generations"] = gens;
  j["total_solver_invocations"] = run.total_solver_invocations;
  j["offspring_evaluations"] = run.offspring_evaluations;
  j["hardest"] = nlohmann::json{{"id", hardest.instance.id()},
                                {"fitness", hardest.fitness},
                                {"solve_seed", hardest.solve_seed},
                                {"capped", hardest.capped},
                                {"tsplib", to_tsplib(hardest.instance)}};
  return j;
}

std::string run_fitness_csv(const EvolutionRun& run) {
  std::string out =
      artifact_header(run.config.master_seed, to_json(run.config));
  out += "generation,best_fitness,mean_fitness,best_id\n";
  for (const GenerationRecord& r : run.records) {
    out += std::to_string(r.generation);
    out += ',';
    out += std::to_string(r.best_fitness);
    out += ',';
    append_double(out, r.mean_fitness);
    out += ',';
    out += r.best_id;
    out += '\n';
  }
  return out;
}

}  // namespace tspforge::evolve

namespace tspforge::cluster {

std::string sweep_csv(const ClusterSweep& sweep) {
  std::string out = "epsilon,cluster_count\n";
  for (size_t i = 0; i < sweep.counts_by_eps.size(); ++i) {
    out += std::to_string(kSweepEpsMin + static_cast<int>(i));
    out += ',';
    out += std::to_string(sweep.counts_by_eps[i]);
    out += '\n';
  }
  return out;
}

std::string averaged_sweep_csv(const ClusterSweep& sweep) {
  std::string out = "cluster_count,mean_occurrences\n";
  for (size_t c = 0; c < sweep.occurrences.size(); ++c) {
    out += std::to_string(c);
    out += ',';
    append_double(out, sweep.occurrences[c]);
    out += '\n';
  }
  return out;
}

nlohmann::json sweep_to_json(const ClusterSweep& sweep) {
  return nlohmann::json{{"min_pts", sweep.min_pts},
                        {"instances", sweep.instances},
                        {"occurrences", sweep.occurrences}};
}

}  // namespace tspforge::cluster

namespace tspforge::analysis {

std::string histogram_csv(const Histogram& h) {
  const bool ci = !h.ci_half.empty();
  std::string out = ci ? "bin_lo,bin_hi,mean_count,ci_half\n"
                       : "bin_lo,bin_hi,mean_count\n";
  for (size_t b = 0; b < h.bins.size(); ++b) {
    append_double(out, static_cast<double>(b) * h.bin_width);
    out += ',';
    append_double(out, static_cast<double>(b + 1) * h.bin_width);
    out += ',';
    append_double(out, h.bins[b]);
    if (ci) {
      out += ',';
      append_double(out, h.ci_half[b]);
    }
    out += '\n';
  }
  return out;
}

std::string histogram_dat(const Histogram& h) {
  const bool ci = !h.ci_half.empty();
  std::string out;
  for (size_t b = 0; b < h.bins.size(); ++b) {
    append_double(out, (static_cast<double>(b) + 0.5) * h.bin_width);
    out += ' ';
    append_double(out, h.bins[b]);
    if (ci) {
      out += ' ';
      append_double(out, h.ci_half[b]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json histogram_to_json(const Histogram& h) {
  nlohmann::json j{{"bin_width", h.bin_width},
                   {"bins", h.bins},
                   {"observations", h.observations},
                   {"instances", h.instances}};
  if (!h.ci_half.empty()) j["ci_half"] = h.ci_half;
  return j;
}

nlohmann::json summary_to_json(const EffortSummary& s) {
  return nlohmann::json{{"count", s.count}, {"mean", s.mean},
                        {"stdev", s.stdev}, {"median", s.median},
                        {"p5", s.p5},       {"p95", s.p95}};
}

}  // namespace tspforge::analysis
