#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "tspforge/kernels.hpp"
#include "tspforge/rng.hpp"

using namespace tspforge;

namespace {

struct BackendGuard {
  kern::Backend saved = kern::active_backend();
  ~BackendGuard() { kern::set_backend(saved); }
};

}  // namespace

TEST_CASE("scalar distances match hand-computed values") {
  BackendGuard guard;
  kern::set_backend(kern::Backend::kScalar);

  const double xs[] = {3.0, 0.0, 399.0};
  const double ys[] = {4.0, 0.0, 399.0};
  double out[3];
  kern::dist_point_to_many(0.0, 0.0, xs, ys, 3, out);
  CHECK(out[0] == 5.0);
  CHECK(out[1] == 0.0);
  CHECK(out[2] == doctest::Approx(564.271211386864924).epsilon(1e-12));

  double sq[3];
  kern::sq_dist_point_to_many(0.0, 0.0, xs, ys, 3, sq);
  CHECK(sq[0] == 25.0);
  CHECK(sq[2] == 2.0 * 399.0 * 399.0);
}

TEST_CASE("avx2 and scalar kernels agree bitwise on random arrays") {
  BackendGuard guard;
  if (kern::set_backend(kern::Backend::kAvx2) != kern::Backend::kAvx2) {
    return;  // no AVX2 on this machine; dispatch already falls back
  }

  Rng rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    // Sizes crossing the 4-lane boundary exercise every tail length.
    const size_t n = rng.below(67);
    std::vector<double> xs(n);
    std::vector<double> ys(n);
    for (size_t i = 0; i < n; ++i) {
      xs[i] = static_cast<double>(rng.below(400));
      ys[i] = static_cast<double>(rng.below(400));
    }
    const double cx = static_cast<double>(rng.below(400));
    const double cy = static_cast<double>(rng.below(400));

    std::vector<double> simd_d(n);
    std::vector<double> simd_sq(n);
    kern::set_backend(kern::Backend::kAvx2);
    kern::dist_point_to_many(cx, cy, xs.data(), ys.data(), n, simd_d.data());
    kern::sq_dist_point_to_many(cx, cy, xs.data(), ys.data(), n,
                                simd_sq.data());

    std::vector<double> ref_d(n);
    std::vector<double> ref_sq(n);
    kern::set_backend(kern::Backend::kScalar);
    kern::dist_point_to_many(cx, cy, xs.data(), ys.data(), n, ref_d.data());
    kern::sq_dist_point_to_many(cx, cy, xs.data(), ys.data(), n,
                                ref_sq.data());

    if (n > 0) {
      CHECK(std::memcmp(simd_d.data(), ref_d.data(), n * sizeof(double)) == 0);
      CHECK(std::memcmp(simd_sq.data(), ref_sq.data(), n * sizeof(double)) ==
            0);
    }
  }
}

TEST_CASE("squared distances of grid coordinates are exact integers") {
  BackendGuard guard;
  Rng rng(7);
  std::vector<double> xs(32);
  std::vector<double> ys(32);
  for (size_t i = 0; i < xs.size(); ++i) {
    xs[i] = static_cast<double>(rng.below(400));
    ys[i] = static_cast<double>(rng.below(400));
  }
  std::vector<double> sq(xs.size());
  kern::sq_dist_point_to_many(xs[0], ys[0], xs.data(), ys.data(), xs.size(),
                              sq.data());
  for (double v : sq) {
    CHECK(v == std::floor(v));
    CHECK(v <= 2.0 * 399.0 * 399.0);
  }
}
