#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "tspforge/artifact_io.hpp"
#include "tspforge/errors.hpp"

using namespace tspforge;

int main(int argc, char** argv) {
  CLI::App app{"tspforge: evolve and analyze hard Euclidean TSP instances"};
  app.set_version_flag("--version", std::string("tspforge ") + kToolVersion);
  app.require_subcommand(1);

  cli::GenRandomArgs gen;
  CLI::App* cmd_gen =
      app.add_subcommand("gen-random", "Write uniform random instances");
  cmd_gen->add_option("--count", gen.count, "Number of instances")
      ->default_val(1);
  cmd_gen->add_option("--n", gen.n, "Cities per instance")->default_val(100);
  cmd_gen->add_option("--grid", gen.grid, "Grid side length")
      ->default_val(400);
  cmd_gen->add_option("--seed", gen.seed, "Master seed");
  cmd_gen->add_option("--out-dir", gen.out_dir, "Output directory")
      ->required();

  cli::EvolveArgs evo;
  CLI::App* cmd_evo = app.add_subcommand(
      "evolve", "Evolve hard instances against a solver variant");
  cmd_evo->add_option("--config", evo.config_path, "JSON config file")
      ->required();
  cmd_evo->add_option("--out-dir", evo.out_dir, "Output directory")
      ->required();
  cmd_evo->add_option("--jobs", evo.jobs, "Worker threads")->default_val(1);
  cmd_evo->add_option("--runs", evo.runs, "Independent runs (override)");
  cmd_evo->add_option("--generations", evo.generations,
                      "Generations (override)");
  cmd_evo->add_option("--variant", evo.variant, "clk | lk-cc (override)");
  cmd_evo->add_option("--seed", evo.seed, "Master seed (override)");
  cmd_evo->add_option("--initial-instances", evo.initial_dir,
                      "Directory with runs*population_size .tsp files");

  cli::SolveArgs sol;
  CLI::App* cmd_sol =
      app.add_subcommand("solve", "Run a solver over instance files");
  cmd_sol->add_option("--instances", sol.instances, "Files or directories")
      ->required()
      ->expected(-1);
  cmd_sol->add_option("--variant", sol.variant, "clk | lk-cc | lk")
      ->default_val("clk");
  cmd_sol->add_option("--seed", sol.seed, "Master seed");
  cmd_sol->add_option("--repeats", sol.repeats, "Seeded runs per instance")
      ->default_val(1);
  cmd_sol->add_option("--out", sol.out_csv, "Output CSV")->required();
  cmd_sol->add_option("--jobs", sol.jobs, "Worker threads")->default_val(1);
  cmd_sol->add_option("--effort-cap", sol.effort_cap,
                      "Edge-exchange cap per solve");

  cli::ExactArgs exa;
  CLI::App* cmd_exa =
      app.add_subcommand("exact", "Exact optima for desk-scale instances");
  cmd_exa->add_option("--instances", exa.instances, "Files or directories")
      ->required()
      ->expected(-1);
  cmd_exa->add_option("--out", exa.out_csv, "Output CSV")->required();
  cmd_exa->add_option("--method", exa.method,
                      "auto | brute-force | held-karp")
      ->default_val("auto");

  cli::ClusterArgs clu;
  CLI::App* cmd_clu =
      app.add_subcommand("cluster", "GDBSCAN eps-sweep cluster counts");
  cmd_clu->add_option("--instances", clu.instances, "Files or directories")
      ->required()
      ->expected(-1);
  cmd_clu->add_option("--out-dir", clu.out_dir, "Output directory")
      ->required();
  cmd_clu->add_option("--min-pts", clu.min_pts,
                      "Core-point neighbor threshold")
      ->default_val(4);

  cli::AnalyzeArgs ana;
  CLI::App* cmd_ana = app.add_subcommand(
      "analyze", "Segment-length and pairwise-distance distributions");
  cmd_ana->add_option("--instances", ana.instances, "Files or directories")
      ->required()
      ->expected(-1);
  cmd_ana->add_option("--out-dir", ana.out_dir, "Output directory")
      ->required();
  cmd_ana->add_option("--tour-source", ana.tour_source,
                      "solver | exact | none")
      ->default_val("solver");
  cmd_ana->add_option("--variant", ana.variant, "Solver for tours")
      ->default_val("clk");
  cmd_ana->add_option("--seed", ana.seed, "Master seed");
  cmd_ana->add_option("--solve-csv", ana.solve_csv,
                      "Solve CSV to summarize efforts from");
  cmd_ana->add_flag("--dat", ana.emit_dat, "Also write gnuplot .dat files");
  cmd_ana->add_option("--jobs", ana.jobs, "Worker threads")->default_val(1);

  cli::ReportArgs rep;
  CLI::App* cmd_rep = app.add_subcommand(
      "report", "Bundle a directory of artifacts into one JSON document");
  cmd_rep->add_option("--in-dir", rep.in_dir, "Artifact directory")
      ->required();
  cmd_rep->add_option("--out", rep.out_json, "Output JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cmd_gen->parsed()) return cli::cmd_gen_random(gen);
    if (cmd_evo->parsed()) return cli::cmd_evolve(evo);
    if (cmd_sol->parsed()) return cli::cmd_solve(sol);
    if (cmd_exa->parsed()) return cli::cmd_exact(exa);
    if (cmd_clu->parsed()) return cli::cmd_cluster(clu);
    if (cmd_ana->parsed()) return cli::cmd_analyze(ana);
    if (cmd_rep->parsed()) return cli::cmd_report(rep);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
