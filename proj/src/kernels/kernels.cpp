#include "tspforge/kernels.hpp"

#include <atomic>
#include <cmath>

namespace tspforge::kern {

namespace detail {

void sq_dist_point_to_many_scalar(double cx, double cy, const double* xs,
                                  const double* ys, std::size_t n,
                                  double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = sq_dist_scalar(cx, cy, xs[i], ys[i]);
  }
}

void dist_point_to_many_scalar(double cx, double cy, const double* xs,
                               const double* ys, std::size_t n, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::sqrt(sq_dist_scalar(cx, cy, xs[i], ys[i]));
  }
}

}  // namespace detail

namespace {

bool cpu_has_avx2() {
#if TSPFORGE_HAVE_AVX2
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend resolve(Backend b) {
  if (b == Backend::kAuto) {
    return cpu_has_avx2() ? Backend::kAvx2 : Backend::kScalar;
  }
  if (b == Backend::kAvx2 && !cpu_has_avx2()) {
    return Backend::kScalar;
  }
  return b;
}

std::atomic<Backend> g_backend{resolve(Backend::kAuto)};

}  // namespace

Backend set_backend(Backend b) {
  const Backend eff = resolve(b);
  g_backend.store(eff, std::memory_order_relaxed);
  return eff;
}

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

const char* backend_name() {
  return active_backend() == Backend::kAvx2 ? "avx2" : "scalar";
}

void sq_dist_point_to_many(double cx, double cy, const double* xs,
                           const double* ys, std::size_t n, double* out) {
#if TSPFORGE_HAVE_AVX2
  if (active_backend() == Backend::kAvx2) {
    detail::sq_dist_point_to_many_avx2(cx, cy, xs, ys, n, out);
    return;
  }
#endif
  detail::sq_dist_point_to_many_scalar(cx, cy, xs, ys, n, out);
}

void dist_point_to_many(double cx, double cy, const double* xs,
                        const double* ys, std::size_t n, double* out) {
#if TSPFORGE_HAVE_AVX2
  if (active_backend() == Backend::kAvx2) {
    detail::dist_point_to_many_avx2(cx, cy, xs, ys, n, out);
    return;
  }
#endif
  detail::dist_point_to_many_scalar(cx, cy, xs, ys, n, out);
}

}  // namespace tspforge::kern
