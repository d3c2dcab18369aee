#pragma once

#include <cstddef>

// Batch Euclidean distance kernels. Scalar reference implementations plus
// AVX2 variants selected at runtime; both compute the same mul/add/sqrt
// sequence per element, so their outputs are bitwise identical and the
// dispatch choice never affects results.

namespace tspforge::kern {

enum class Backend { kAuto, kScalar, kAvx2 };

// Selects the kernel backend. kAuto (default) picks AVX2 when the CPU
// supports it. Returns the backend actually in effect.
Backend set_backend(Backend b);
Backend active_backend();
const char* backend_name();

// out[i] = (xs[i]-cx)^2 + (ys[i]-cy)^2
void sq_dist_point_to_many(double cx, double cy, const double* xs,
                           const double* ys, std::size_t n, double* out);

// out[i] = sqrt((xs[i]-cx)^2 + (ys[i]-cy)^2)
void dist_point_to_many(double cx, double cy, const double* xs,
                        const double* ys, std::size_t n, double* out);

namespace detail {

inline double sq_dist_scalar(double cx, double cy, double x, double y) {
  const double dx = x - cx;
  const double dy = y - cy;
  return dx * dx + dy * dy;
}

void sq_dist_point_to_many_scalar(double cx, double cy, const double* xs,
                                  const double* ys, std::size_t n, double* out);
void dist_point_to_many_scalar(double cx, double cy, const double* xs,
                               const double* ys, std::size_t n, double* out);
#if TSPFORGE_HAVE_AVX2
void sq_dist_point_to_many_avx2(double cx, double cy, const double* xs,
                                const double* ys, std::size_t n, double* out);
void dist_point_to_many_avx2(double cx, double cy, const double* xs,
                             const double* ys, std::size_t n, double* out);
#endif

}  // namespace detail

}  // namespace tspforge::kern
