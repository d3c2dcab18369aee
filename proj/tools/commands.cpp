#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>

#include <json.hpp>

#include "tspforge/analysis.hpp"
#include "tspforge/artifact_io.hpp"
#include "tspforge/csv.hpp"
#include "tspforge/errors.hpp"
#include "tspforge/evolver.hpp"
#include "tspforge/exact.hpp"
#include "tspforge/gdbscan.hpp"
#include "tspforge/parallel.hpp"
#include "tspforge/rng.hpp"
#include "tspforge/tsplib.hpp"

namespace fs = std::filesystem;

namespace tspforge::cli {

namespace {

std::vector<Instance> load_instances(
    const std::vector<std::string>& inputs,
    std::vector<fs::path>* paths_out = nullptr) {
  const auto paths = expand_instance_paths(inputs);
  require(!paths.empty(), "no instance files given");
  std::vector<Instance> instances;
  instances.reserve(paths.size());
  for (const fs::path& p : paths) {
    instances.push_back(read_tsplib(p));
  }
  if (paths_out) *paths_out = paths;
  return instances;
}

lk::Variant parse_variant(const std::string& name) {
  const auto v = lk::variant_from_name(name);
  require(v.has_value(), "unknown variant (expected clk, lk-cc or lk)");
  return *v;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw io_error("cannot create directory: " + dir.string());
}

// CSV cell -> JSON number when it parses fully, else string.
nlohmann::json csv_cell_to_json(const std::string& cell) {
  if (cell.empty()) return cell;
  char* end = nullptr;
  const double v = std::strtod(cell.c_str(), &end);
  if (end == cell.c_str() + cell.size()) return v;
  return cell;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  size_t start = 0;
  for (;;) {
    const size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      cells.push_back(line.substr(start));
      break;
    }
    cells.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return cells;
}

struct ParsedCsv {
  std::vector<std::string> meta;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

ParsedCsv parse_csv_text(const std::string& text) {
  ParsedCsv out;
  size_t pos = 0;
  bool have_header = false;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    const std::string line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty()) continue;
    if (line[0] == '#') {
      out.meta.push_back(line);
    } else if (!have_header) {
      out.header = split_csv_line(line);
      have_header = true;
    } else {
      out.rows.push_back(split_csv_line(line));
    }
  }
  return out;
}

}  // namespace

std::vector<fs::path> expand_instance_paths(
    const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const std::string& in : inputs) {
    const fs::path p(in);
    if (fs::is_directory(p)) {
      std::vector<fs::path> here;
      for (const auto& entry : fs::directory_iterator(p)) {
        if (entry.is_regular_file() && entry.path().extension() == ".tsp") {
          here.push_back(entry.path());
        }
      }
      std::sort(here.begin(), here.end());
      files.insert(files.end(), here.begin(), here.end());
    } else if (fs::is_regular_file(p)) {
      files.push_back(p);
    } else {
      throw io_error("no such file or directory: " + in);
    }
  }
  return files;
}

std::uint64_t seed_or_env(std::optional<std::uint64_t> seed_flag) {
  if (seed_flag) return *seed_flag;
  if (const char* env = std::getenv("TSPFORGE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw usage_error("TSPFORGE_SEED is not an unsigned integer");
    }
  }
  return 1;
}

int cmd_gen_random(const GenRandomArgs& args) {
  require(args.count >= 1, "count must be >= 1");
  const std::uint64_t seed = seed_or_env(args.seed);
  ensure_dir(args.out_dir);
  for (int i = 0; i < args.count; ++i) {
    Rng rng(
        derive_seed(seed, {kSeedGenRandom, static_cast<std::uint64_t>(i)}));
    const std::string id =
        "rand_" + std::to_string(seed) + "_" + std::to_string(i);
    const Instance inst = Instance::uniform_random(id, args.n, args.grid, rng);
    write_tsplib(inst, fs::path(args.out_dir) / (id + ".tsp"));
  }
  std::cout << "wrote " << args.count << " instances to " << args.out_dir
            << "\n";
  return 0;
}

int cmd_evolve(const EvolveArgs& args) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text_file(args.config_path));
  } catch (const nlohmann::json::exception& e) {
    throw io_error("config parse error in " + args.config_path + ": " +
                   e.what());
  }
  require(j.is_object(), "config must be a JSON object");

  int runs = 1;
  std::string initial_dir;
  if (j.contains("runs")) {
    runs = j["runs"].get<int>();
    j.erase("runs");
  }
  if (j.contains("initial_instances")) {
    initial_dir = j["initial_instances"].get<std::string>();
    j.erase("initial_instances");
  }
  evolve::EAConfig base = evolve::ea_config_from_json(j);

  if (args.runs) runs = *args.runs;
  if (args.generations) base.generations = *args.generations;
  if (args.variant) base.solver_variant = parse_variant(*args.variant);
  if (args.seed) base.master_seed = *args.seed;
  if (args.initial_dir) initial_dir = *args.initial_dir;
  require(runs >= 1, "runs must be >= 1");
  base.validate();

  // Optional shared initial populations: runs * population_size files,
  // sliced per run in sorted filename order.
  std::vector<Instance> shared_initial;
  if (!initial_dir.empty()) {
    shared_initial = load_instances({initial_dir});
    require(static_cast<int>(shared_initial.size()) ==
                runs * base.population_size,
            "initial_instances must hold runs * population_size files");
  }

  ensure_dir(args.out_dir);
  std::vector<evolve::EvolutionRun> results(static_cast<size_t>(runs));
  const int run_jobs = runs > 1 ? args.jobs : 1;
  const int eval_jobs = runs > 1 ? 1 : args.jobs;
  parallel_for(static_cast<size_t>(runs), run_jobs, [&](size_t r) {
    evolve::EAConfig cfg = base;
    cfg.run_label = "run" + std::to_string(r);
    cfg.master_seed = derive_seed(base.master_seed, {kSeedRun, r});
    std::optional<std::vector<Instance>> init;
    if (!shared_initial.empty()) {
      const auto first = shared_initial.begin() +
                         static_cast<std::ptrdiff_t>(r) * base.population_size;
      init.emplace(first, first + base.population_size);
    }
    results[r] = evolve::evolve(cfg, init, eval_jobs);
  });

  for (size_t r = 0; r < results.size(); ++r) {
    const evolve::EvolutionRun& run = results[r];
    const std::string stem = "run" + std::to_string(r);
    write_text_file(fs::path(args.out_dir) / (stem + ".json"),
                    evolve::run_to_json(run).dump(2) + "\n");
    write_text_file(fs::path(args.out_dir) / (stem + "_fitness.csv"),
                    evolve::run_fitness_csv(run));
    write_tsplib(run.hardest().instance,
                 fs::path(args.out_dir) / (stem + "_hardest.tsp"));
    std::cout << stem << ": best fitness " << run.hardest().fitness << " ("
              << run.hardest().instance.id() << ")\n";
  }
  return 0;
}

int cmd_solve(const SolveArgs& args) {
  require(args.repeats >= 1, "repeats must be >= 1");
  const std::vector<Instance> instances = load_instances(args.instances);
  const lk::Variant variant = parse_variant(args.variant);
  const std::uint64_t seed = seed_or_env(args.seed);

  lk::SolverConfig cfg;
  if (args.effort_cap) cfg.effort_cap = args.effort_cap;
  cfg.validate();

  const size_t tasks = instances.size() * static_cast<size_t>(args.repeats);
  std::vector<lk::SolveStats> stats(tasks);
  parallel_for(tasks, args.jobs, [&](size_t t) {
    const size_t i = t / static_cast<size_t>(args.repeats);
    const size_t r = t % static_cast<size_t>(args.repeats);
    const std::uint64_t s = derive_seed(seed, {kSeedSolve, i, r});
    stats[t] = lk::solve(instances[i], variant, cfg, s);
  });

  nlohmann::json echo{{"variant", lk::variant_name(variant)},
                      {"repeats", args.repeats},
                      {"solver", lk::to_json(cfg)}};
  std::string out = artifact_header(seed, echo);
  out += lk::SolveStats::csv_header();
  out += '\n';
  for (const lk::SolveStats& st : stats) {
    out += st.csv_row();
    out += '\n';
  }
  write_text_file(args.out_csv, out);
  std::cout << "solved " << instances.size() << " instances x " << args.repeats
            << " seeds -> " << args.out_csv << "\n";
  return 0;
}

int cmd_exact(const ExactArgs& args) {
  const std::vector<Instance> instances = load_instances(args.instances);
  require(args.method == "auto" || args.method == "brute-force" ||
              args.method == "held-karp",
          "method must be auto, brute-force or held-karp");

  std::string out = artifact_header(0, {{"method", args.method}});
  out += "instance_id,n,method,optimal_length\n";
  for (const Instance& inst : instances) {
    exact::ExactResult res;
    if (args.method == "brute-force") {
      res = exact::brute_force_optimum(inst);
    } else if (args.method == "held-karp" ||
               (args.method == "auto" && inst.n() <= 20)) {
      res = exact::held_karp_optimum(inst);
    } else {
      throw usage_error("instance '" + inst.id() + "' has n = " +
                        std::to_string(inst.n()) +
                        " > 20; no exact method can handle it");
    }
    out += inst.id();
    out += ',';
    out += std::to_string(inst.n());
    out += ',';
    out += res.method;
    out += ',';
    append_double(out, res.optimal_length);
    out += '\n';
  }
  write_text_file(args.out_csv, out);
  std::cout << "exact optima for " << instances.size() << " instances -> "
            << args.out_csv << "\n";
  return 0;
}

int cmd_cluster(const ClusterArgs& args) {
  std::vector<fs::path> paths;
  const std::vector<Instance> instances =
      load_instances(args.instances, &paths);
  ensure_dir(args.out_dir);

  const nlohmann::json echo{{"min_pts", args.min_pts},
                            {"eps_min", cluster::kSweepEpsMin},
                            {"eps_max", cluster::kSweepEpsMax}};
  std::vector<cluster::ClusterSweep> sweeps;
  sweeps.reserve(instances.size());
  for (size_t i = 0; i < instances.size(); ++i) {
    sweeps.push_back(cluster::cluster_sweep(instances[i], args.min_pts));
    const std::string stem = paths[i].stem().string();
    write_text_file(
        fs::path(args.out_dir) / (stem + "_sweep.csv"),
        artifact_header(0, echo) + cluster::sweep_csv(sweeps.back()));
  }
  const cluster::ClusterSweep avg = cluster::average_sweep(sweeps);
  write_text_file(fs::path(args.out_dir) / "sweep_avg.csv",
                  artifact_header(0, echo) + cluster::averaged_sweep_csv(avg));
  std::cout << "cluster sweeps for " << instances.size() << " instances -> "
            << args.out_dir << "\n";
  return 0;
}

int cmd_analyze(const AnalyzeArgs& args) {
  const std::vector<Instance> instances = load_instances(args.instances);
  require(args.tour_source == "solver" || args.tour_source == "exact" ||
              args.tour_source == "none",
          "tour-source must be solver, exact or none");
  ensure_dir(args.out_dir);
  const std::uint64_t seed = seed_or_env(args.seed);
  const lk::Variant variant = parse_variant(args.variant);
  const nlohmann::json echo{{"tour_source", args.tour_source},
                            {"variant", lk::variant_name(variant)},
                            {"instances", instances.size()}};
  const std::string header = artifact_header(seed, echo);

  std::vector<const Instance*> ptrs;
  for (const Instance& inst : instances) ptrs.push_back(&inst);

  const analysis::Histogram pair_hist =
      analysis::pairwise_distance_histogram(ptrs);
  write_text_file(fs::path(args.out_dir) / "pairdist_hist.csv",
                  header + analysis::histogram_csv(pair_hist));
  if (args.emit_dat) {
    write_text_file(fs::path(args.out_dir) / "pairdist_hist.dat",
                    analysis::histogram_dat(pair_hist));
  }

  if (args.tour_source != "none") {
    std::vector<std::vector<int>> orders(instances.size());
    if (args.tour_source == "exact") {
      parallel_for(instances.size(), args.jobs, [&](size_t i) {
        orders[i] = exact::held_karp_optimum(instances[i]).optimal_order;
      });
    } else {
      lk::SolverConfig cfg;
      parallel_for(instances.size(), args.jobs, [&](size_t i) {
        const std::uint64_t s = derive_seed(seed, {kSeedSolve, i, 0});
        orders[i] = lk::solve(instances[i], variant, cfg, s).tour_order;
      });
    }
    const analysis::Histogram seg_hist =
        analysis::segment_length_histogram(ptrs, orders);
    write_text_file(fs::path(args.out_dir) / "segment_hist.csv",
                    header + analysis::histogram_csv(seg_hist));
    if (args.emit_dat) {
      write_text_file(fs::path(args.out_dir) / "segment_hist.dat",
                      analysis::histogram_dat(seg_hist));
    }
  }

  if (args.solve_csv) {
    const ParsedCsv csv = parse_csv_text(read_text_file(*args.solve_csv));
    require(csv.header.size() >= 5 && csv.header[1] == "variant" &&
                csv.header[4] == "edge_exchanges",
            "solve csv must have the solve command's column layout");
    std::map<std::string, std::vector<std::uint64_t>> efforts_by_variant;
    for (const auto& row : csv.rows) {
      require(row.size() == csv.header.size(), "ragged solve csv row");
      efforts_by_variant[row[1]].push_back(std::stoull(row[4]));
    }
    std::string out = header;
    out += "variant,count,mean,stdev,median,p5,p95\n";
    for (const auto& [name, efforts] : efforts_by_variant) {
      const analysis::EffortSummary s = analysis::effort_summary(efforts);
      out += name;
      out += ',';
      out += std::to_string(s.count);
      out += ',';
      append_double(out, s.mean);
      out += ',';
      append_double(out, s.stdev);
      out += ',';
      append_double(out, s.median);
      out += ',';
      append_double(out, s.p5);
      out += ',';
      append_double(out, s.p95);
      out += '\n';
    }
    write_text_file(fs::path(args.out_dir) / "effort_summary.csv", out);
  }

  std::cout << "analysis artifacts -> " << args.out_dir << "\n";
  return 0;
}

int cmd_report(const ReportArgs& args) {
  const fs::path root(args.in_dir);
  if (!fs::is_directory(root)) {
    throw usage_error("report input is not a directory: " + args.in_dir);
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension();
    if (ext == ".csv" || ext == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    throw usage_error("report found no .csv or .json artifacts in " +
                      args.in_dir + " (run solve/cluster/analyze/evolve first)");
  }

  nlohmann::json artifacts = nlohmann::json::object();
  for (const fs::path& p : files) {
    const std::string rel = fs::relative(p, root).string();
    const std::string text = read_text_file(p);
    if (p.extension() == ".json") {
      try {
        artifacts[rel] = nlohmann::json::parse(text);
      } catch (const nlohmann::json::exception& e) {
        throw io_error("bad json artifact " + p.string() + ": " + e.what());
      }
    } else {
      const ParsedCsv csv = parse_csv_text(text);
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& row : csv.rows) {
        nlohmann::json cells = nlohmann::json::array();
        for (const std::string& cell : row) {
          cells.push_back(csv_cell_to_json(cell));
        }
        rows.push_back(cells);
      }
      artifacts[rel] = nlohmann::json{
          {"meta", csv.meta}, {"header", csv.header}, {"rows", rows}};
    }
  }

  nlohmann::json bundle{
      {"meta",
       nlohmann::json{{"tool", "tspforge"}, {"version", kToolVersion}}},
      {"artifacts", artifacts}};
  write_text_file(args.out_json, bundle.dump(2) + "\n");
  std::cout << "report bundle with " << files.size() << " artifacts -> "
            << args.out_json << "\n";
  return 0;
}

}  // namespace tspforge::cli
