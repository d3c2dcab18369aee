#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "tspforge/analysis.hpp"
#include "tspforge/evolver.hpp"
#include "tspforge/gdbscan.hpp"

namespace tspforge {

inline constexpr const char* kToolVersion = "0.1.0";

// Every artifact embeds tool version, master seed and a config echo:
// CSV files as leading '#' comment lines, JSON files as a "meta" object.
std::string artifact_header(std::uint64_t master_seed,
                            const nlohmann::json& config_echo);
nlohmann::json artifact_meta(std::uint64_t master_seed,
                             const nlohmann::json& config_echo);

void write_text_file(const std::filesystem::path& path,
                     const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace tspforge

namespace tspforge::lk {

nlohmann::json to_json(const SolverConfig& cfg);
// Strict: unknown keys are usage errors naming the key.
SolverConfig solver_config_from_json(const nlohmann::json& j);

}  // namespace tspforge::lk

namespace tspforge::evolve {

nlohmann::json to_json(const EAConfig& cfg);
EAConfig ea_config_from_json(const nlohmann::json& j);

nlohmann::json run_to_json(const EvolutionRun& run);
// generation,best_fitness,mean_fitness,best_id
std::string run_fitness_csv(const EvolutionRun& run);

}  // namespace tspforge::evolve

namespace tspforge::cluster {

// epsilon,cluster_count (one row per eps setting of one instance)
std::string sweep_csv(const ClusterSweep& sweep);
// cluster_count,mean_occurrences
std::string averaged_sweep_csv(const ClusterSweep& sweep);
nlohmann::json sweep_to_json(const ClusterSweep& sweep);

}  // namespace tspforge::cluster

namespace tspforge::analysis {

// bin_lo,bin_hi,mean_count[,ci_half]
std::string histogram_csv(const Histogram& h);
// gnuplot-friendly: bin_center mean_count [ci_half]
std::string histogram_dat(const Histogram& h);
nlohmann::json histogram_to_json(const Histogram& h);
nlohmann::json summary_to_json(const EffortSummary& s);

}  // namespace tspforge::analysis
