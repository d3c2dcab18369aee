#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <vector>

#include "tspforge/analysis.hpp"
#include "tspforge/errors.hpp"
#include "tspforge/exact.hpp"
#include "tspforge/instance.hpp"
#include "tspforge/rng.hpp"

using namespace tspforge;
using analysis::effort_summary;
using analysis::Histogram;

namespace {

Instance random_instance(int n, std::uint64_t seed, int grid = 400) {
  Rng rng(seed);
  return Instance::uniform_random("r" + std::to_string(seed), n, grid, rng);
}

const Instance unit_square("sq", 2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});

}  // namespace

TEST_CASE("segment histogram of the unit-square optimal tour") {
  const std::vector<const Instance*> insts{&unit_square};
  const std::vector<std::vector<int>> orders{{0, 1, 2, 3}};
  const Histogram h = analysis::segment_length_histogram(insts, orders);
  REQUIRE(h.bins.size() == 2);  // unit edges land in bin [1,2)
  CHECK(h.bins[0] == 0.0);
  CHECK(h.bins[1] == 4.0);
  CHECK(h.observations == 4);
}

TEST_CASE("averaging two identical tours equals the single-tour histogram") {
  const Instance inst = random_instance(12, 3);
  const auto opt = exact::held_karp_optimum(inst);
  const std::vector<const Instance*> one{&inst};
  const std::vector<const Instance*> two{&inst, &inst};
  const std::vector<std::vector<int>> o1{opt.optimal_order};
  const std::vector<std::vector<int>> o2{opt.optimal_order, opt.optimal_order};
  const Histogram h1 = analysis::segment_length_histogram(one, o1);
  const Histogram h2 = analysis::segment_length_histogram(two, o2);
  CHECK(h1.bins == h2.bins);
}

TEST_CASE("misaligned segment inputs are usage errors") {
  const std::vector<const Instance*> insts{&unit_square};
  CHECK_THROWS_AS(analysis::segment_length_histogram(insts, {}), usage_error);
  const std::vector<std::vector<int>> bad{{0, 1, 2}};  // not a 4-city tour
  CHECK_THROWS_AS(analysis::segment_length_histogram(insts, bad), usage_error);
}

TEST_CASE("histogram conservation: counts equal observations") {
  std::vector<Instance> insts;
  std::vector<const Instance*> ptrs;
  for (int t = 0; t < 5; ++t) {
    insts.push_back(random_instance(30, 100 + t));
  }
  for (const Instance& inst : insts) ptrs.push_back(&inst);
  const Histogram h = analysis::pairwise_distance_histogram(ptrs);
  CHECK(h.observations == 5u * (30u * 29u / 2u));
  // Set-averaged: total mean count equals observations per instance.
  CHECK(h.total() == doctest::Approx(30.0 * 29.0 / 2.0).epsilon(1e-9));
  CHECK(h.ci_half.size() == h.bins.size());
}

TEST_CASE("every pair distance lands in its own bin") {
  const Instance line("line", 20, {{0, 0}, {10, 0}, {4, 0}});
  const Histogram h = analysis::pairwise_distance_histogram({&line});
  CHECK(h.observations == 3);
  CHECK(h.bins[10] == 1.0);  // d(0,1) = 10
  CHECK(h.bins[4] == 1.0);   // d(0,2) = 4
  CHECK(h.bins[6] == 1.0);   // d(1,2) = 6
}

TEST_CASE("uniform 400x400 instances have almost no sub-4 pair mass") {
  std::vector<Instance> insts;
  std::vector<const Instance*> ptrs;
  for (int t = 0; t < 40; ++t) insts.push_back(random_instance(100, 4000 + t));
  for (const Instance& inst : insts) ptrs.push_back(&inst);
  const Histogram h = analysis::pairwise_distance_histogram(ptrs);
  const double below4 = h.mass(0.0, 4.0);
  CHECK(below4 / h.total() < 0.005);
}

TEST_CASE("effort summary conventions") {
  SUBCASE("all equal") {
    const std::vector<std::uint64_t> v(8, 42);
    const auto s = effort_summary(v);
    CHECK(s.mean == 42.0);
    CHECK(s.median == 42.0);
    CHECK(s.stdev == 0.0);
  }
  SUBCASE("1..100 nearest-rank percentiles") {
    std::vector<std::uint64_t> v(100);
    std::iota(v.begin(), v.end(), 1);
    const auto s = effort_summary(v);
    CHECK(s.median == 50.0);  // declared convention: rank ceil(0.5*100)=50
    CHECK(s.p5 == 5.0);
    CHECK(s.p95 == 95.0);
    CHECK(s.mean == doctest::Approx(50.5));
  }
  SUBCASE("population stdev uses the N divisor") {
    const std::vector<std::uint64_t> v{2, 4};
    const auto s = effort_summary(v);
    CHECK(s.stdev == doctest::Approx(1.0));
  }
  SUBCASE("empty input is a usage error") {
    CHECK_THROWS_AS(effort_summary(std::vector<std::uint64_t>{}), usage_error);
  }
}

TEST_CASE("swap matrix reproduces the plain summary on its diagonal") {
  std::vector<Instance> set_a;
  for (int t = 0; t < 4; ++t) set_a.push_back(random_instance(20, 600 + t));

  lk::SolverConfig cfg;
  const auto table = analysis::swap_matrix({{"A", &set_a}},
                                           {lk::Variant::kClk}, cfg, 99, 1);
  REQUIRE(table.cells.size() == 1);
  const auto& cell = table.cell("A", lk::Variant::kClk);
  REQUIRE(cell.efforts.size() == 4);

  // Re-derive the same seeds; summaries must match exactly.
  std::vector<std::uint64_t> efforts;
  for (size_t k = 0; k < set_a.size(); ++k) {
    const auto seed = derive_seed(99, {kSeedSolve, 0, 0, k});
    efforts.push_back(
        lk::solve(set_a[k], lk::Variant::kClk, cfg, seed).edge_exchanges);
  }
  CHECK(efforts == cell.efforts);
  CHECK(effort_summary(efforts).mean == cell.summary.mean);
}

TEST_CASE("swap matrix is independent of the job count") {
  std::vector<Instance> set_a;
  for (int t = 0; t < 6; ++t) set_a.push_back(random_instance(15, 700 + t));
  lk::SolverConfig cfg;
  const auto seq = analysis::swap_matrix({{"A", &set_a}},
                                         {lk::Variant::kLkCc}, cfg, 5, 1);
  const auto par = analysis::swap_matrix({{"A", &set_a}},
                                         {lk::Variant::kLkCc}, cfg, 5, 4);
  CHECK(seq.cells[0].efforts == par.cells[0].efforts);
}

TEST_CASE("histogram mass helper slices by bin left edge") {
  Histogram h;
  h.bin_width = 1.0;
  h.bins = {1.0, 2.0, 3.0, 4.0};
  CHECK(h.mass(0.0, 2.0) == 3.0);
  CHECK(h.mass(2.0, 100.0) == 7.0);
  CHECK(h.total() == 10.0);
}
