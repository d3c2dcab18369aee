#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tspforge/lk.hpp"

namespace tspforge::cli {

// Expands files and directories (*.tsp inside, sorted) to a flat file list.
std::vector<std::filesystem::path> expand_instance_paths(
    const std::vector<std::string>& inputs);

std::uint64_t seed_or_env(std::optional<std::uint64_t> seed_flag);

struct GenRandomArgs {
  int count = 1;
  int n = 100;
  int grid = 400;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
};
int cmd_gen_random(const GenRandomArgs& args);

struct EvolveArgs {
  std::string config_path;
  std::string out_dir;
  int jobs = 1;
  // CLI overrides of config-file values.
  std::optional<int> runs;
  std::optional<int> generations;
  std::optional<std::string> variant;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> initial_dir;
};
int cmd_evolve(const EvolveArgs& args);

struct SolveArgs {
  std::vector<std::string> instances;
  std::string variant = "clk";
  std::optional<std::uint64_t> seed;
  int repeats = 1;
  std::string out_csv;
  int jobs = 1;
  std::optional<std::uint64_t> effort_cap;
};
int cmd_solve(const SolveArgs& args);

struct ExactArgs {
  std::vector<std::string> instances;
  std::string out_csv;
  std::string method = "auto";  // auto | brute-force | held-karp
};
int cmd_exact(const ExactArgs& args);

struct ClusterArgs {
  std::vector<std::string> instances;
  std::string out_dir;
  int min_pts = 4;
};
int cmd_cluster(const ClusterArgs& args);

struct AnalyzeArgs {
  std::vector<std::string> instances;
  std::string out_dir;
  std::string tour_source = "solver";  // solver | exact | none
  std::string variant = "clk";
  std::optional<std::uint64_t> seed;
  std::optional<std::string> solve_csv;
  bool emit_dat = false;
  int jobs = 1;
};
int cmd_analyze(const AnalyzeArgs& args);

struct ReportArgs {
  std::string in_dir;
  std::string out_json;
};
int cmd_report(const ReportArgs& args);

}  // namespace tspforge::cli
