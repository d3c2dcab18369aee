#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

std::string g_cli = "./tspforge";

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("tspforge_cli_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int counter;
};
int TempDir::counter = 0;

int run_cli(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

bool same_bytes(const fs::path& a, const fs::path& b) {
  return slurp(a) == slurp(b);
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  f << text;
}

const char* kTinyEvolveConfig = R"({
  "population_size": 5,
  "offspring_per_generation": 4,
  "generations": 2,
  "n_cities": 8,
  "grid_size": 50,
  "master_seed": 123,
  "variant": "CLK",
  "runs": 2
})";

}  // namespace

TEST_CASE("gen-random is byte-deterministic and names files by seed") {
  TempDir tmp;
  const auto a = tmp.path / "a";
  const auto b = tmp.path / "b";
  REQUIRE(run_cli("gen-random --count 2 --n 10 --grid 64 --seed 5 --out-dir " +
                  a.string()) == 0);
  REQUIRE(run_cli("gen-random --count 2 --n 10 --grid 64 --seed 5 --out-dir " +
                  b.string()) == 0);
  CHECK(fs::exists(a / "rand_5_0.tsp"));
  CHECK(fs::exists(a / "rand_5_1.tsp"));
  CHECK(same_bytes(a / "rand_5_0.tsp", b / "rand_5_0.tsp"));
  CHECK(same_bytes(a / "rand_5_1.tsp", b / "rand_5_1.tsp"));
}

TEST_CASE("solve output is identical at --jobs 1 and --jobs 8") {
  TempDir tmp;
  const auto inst = tmp.path / "inst";
  REQUIRE(run_cli("gen-random --count 3 --n 12 --grid 100 --seed 7 "
                  "--out-dir " +
                  inst.string()) == 0);
  for (const std::string variant : {"clk", "lk-cc", "lk"}) {
    const auto s1 = tmp.path / (variant + "_1.csv");
    const auto s8 = tmp.path / (variant + "_8.csv");
    REQUIRE(run_cli("solve --instances " + inst.string() + " --variant " +
                    variant + " --seed 3 --repeats 2 --jobs 1 --out " +
                    s1.string()) == 0);
    REQUIRE(run_cli("solve --instances " + inst.string() + " --variant " +
                    variant + " --seed 3 --repeats 2 --jobs 8 --out " +
                    s8.string()) == 0);
    CHECK(same_bytes(s1, s8));
  }
}

TEST_CASE("solve CSV embeds version, seed and config echo") {
  TempDir tmp;
  const auto inst = tmp.path / "inst";
  REQUIRE(run_cli("gen-random --count 1 --n 10 --grid 64 --seed 2 "
                  "--out-dir " +
                  inst.string()) == 0);
  const auto csv = tmp.path / "out.csv";
  REQUIRE(run_cli("solve --instances " + inst.string() +
                  " --seed 11 --out " + csv.string()) == 0);
  const std::string text = slurp(csv);
  CHECK(text.find("# tspforge ") == 0);
  CHECK(text.find("# master_seed: 11") != std::string::npos);
  CHECK(text.find("instance_id,variant,seed,length,edge_exchanges,capped") !=
        std::string::npos);
}

TEST_CASE("evolve replays byte-identically and across job counts") {
  TempDir tmp;
  write_file(tmp.path / "cfg.json", kTinyEvolveConfig);
  const auto e1 = tmp.path / "e1";
  const auto e2 = tmp.path / "e2";
  REQUIRE(run_cli("evolve --config " + (tmp.path / "cfg.json").string() +
                  " --out-dir " + e1.string() + " --jobs 1") == 0);
  REQUIRE(run_cli("evolve --config " + (tmp.path / "cfg.json").string() +
                  " --out-dir " + e2.string() + " --jobs 8") == 0);
  for (const char* name :
       {"run0.json", "run0_fitness.csv", "run0_hardest.tsp", "run1.json",
        "run1_fitness.csv", "run1_hardest.tsp"}) {
    CHECK(same_bytes(e1 / name, e2 / name));
  }
}

TEST_CASE("evolve rejects unknown config keys with the key name") {
  TempDir tmp;
  write_file(tmp.path / "bad.json", R"({"population_sizee": 5})");
  const std::string cmd = g_cli + " evolve --config " +
                          (tmp.path / "bad.json").string() + " --out-dir " +
                          (tmp.path / "out").string() + " 2> " +
                          (tmp.path / "err.txt").string();
  const int rc = WEXITSTATUS(std::system(cmd.c_str()));
  CHECK(rc == 1);
  CHECK(slurp(tmp.path / "err.txt").find("population_sizee") !=
        std::string::npos);
}

TEST_CASE("cluster and analyze artifacts are deterministic") {
  TempDir tmp;
  const auto inst = tmp.path / "inst";
  REQUIRE(run_cli("gen-random --count 2 --n 20 --grid 200 --seed 4 "
                  "--out-dir " +
                  inst.string()) == 0);
  const auto c1 = tmp.path / "c1";
  const auto c2 = tmp.path / "c2";
  REQUIRE(run_cli("cluster --instances " + inst.string() + " --out-dir " +
                  c1.string()) == 0);
  REQUIRE(run_cli("cluster --instances " + inst.string() + " --out-dir " +
                  c2.string()) == 0);
  CHECK(same_bytes(c1 / "sweep_avg.csv", c2 / "sweep_avg.csv"));
  CHECK(same_bytes(c1 / "rand_4_0_sweep.csv", c2 / "rand_4_0_sweep.csv"));

  const auto a1 = tmp.path / "a1";
  const auto a2 = tmp.path / "a2";
  REQUIRE(run_cli("analyze --instances " + inst.string() + " --out-dir " +
                  a1.string() +
                  " --tour-source exact --seed 6 --jobs 1") == 0);
  REQUIRE(run_cli("analyze --instances " + inst.string() + " --out-dir " +
                  a2.string() +
                  " --tour-source exact --seed 6 --jobs 8") == 0);
  CHECK(same_bytes(a1 / "pairdist_hist.csv", a2 / "pairdist_hist.csv"));
  CHECK(same_bytes(a1 / "segment_hist.csv", a2 / "segment_hist.csv"));
}

TEST_CASE("exact refuses oversized instances with an explicit size error") {
  TempDir tmp;
  const auto inst = tmp.path / "inst";
  REQUIRE(run_cli("gen-random --count 1 --n 25 --grid 100 --seed 1 "
                  "--out-dir " +
                  inst.string()) == 0);
  CHECK(run_cli("exact --instances " + inst.string() + " --out " +
                (tmp.path / "x.csv").string()) == 1);
}

TEST_CASE("malformed instance files give exit code 2") {
  TempDir tmp;
  write_file(tmp.path / "bad.tsp", "NAME: x\nTYPE: TSP\nGARBAGE\n");
  CHECK(run_cli("solve --instances " + (tmp.path / "bad.tsp").string() +
                " --out " + (tmp.path / "o.csv").string()) == 2);
}

TEST_CASE("report over an empty directory is a usage error") {
  TempDir tmp;
  const auto empty = tmp.path / "empty";
  fs::create_directories(empty);
  CHECK(run_cli("report --in-dir " + empty.string() + " --out " +
                (tmp.path / "r.json").string()) == 1);
}

TEST_CASE("report bundles the full pipeline deterministically") {
  TempDir tmp;
  const auto inst = tmp.path / "inst";
  REQUIRE(run_cli("gen-random --count 2 --n 10 --grid 64 --seed 8 "
                  "--out-dir " +
                  inst.string()) == 0);
  REQUIRE(run_cli("solve --instances " + inst.string() + " --seed 2 --out " +
                  (tmp.path / "inst" / "solve.csv").string()) == 0);
  const auto r1 = tmp.path / "r1.json";
  const auto r2 = tmp.path / "r2.json";
  REQUIRE(run_cli("report --in-dir " + inst.string() + " --out " +
                  r1.string()) == 0);
  REQUIRE(run_cli("report --in-dir " + inst.string() + " --out " +
                  r2.string()) == 0);
  CHECK(same_bytes(r1, r2));
  CHECK(slurp(r1).find("solve.csv") != std::string::npos);
}

TEST_CASE("TSPFORGE_SEED is the fallback master seed") {
  TempDir tmp;
  const auto a = tmp.path / "a";
  const auto b = tmp.path / "b";
  const std::string base = "gen-random --count 1 --n 10 --grid 64 --out-dir ";
  const std::string cmd_env = "TSPFORGE_SEED=42 " + g_cli + " " + base +
                              a.string() + " > /dev/null 2>&1";
  REQUIRE(WEXITSTATUS(std::system(cmd_env.c_str())) == 0);
  REQUIRE(run_cli(base + b.string() + " --seed 42") == 0);
  CHECK(same_bytes(a / "rand_42_0.tsp", b / "rand_42_0.tsp"));
}

int main(int argc, char** argv) {
  std::vector<char*> pass;
  for (int i = 0; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--cli-path" && i + 1 < argc) {
      g_cli = argv[++i];
      continue;
    }
    pass.push_back(argv[i]);
  }
  doctest::Context ctx(static_cast<int>(pass.size()), pass.data());
  return ctx.run();
}
