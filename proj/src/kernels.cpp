#include "spectre/kernels.hpp"

#include <atomic>
#include <cmath>

namespace spectre::kern {

// ----------------------------------------------------------------------------
// Scalar reference lane
// ----------------------------------------------------------------------------

namespace scalar {

double dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double max_abs_diff(const double* a, const double* b, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = std::fabs(a[i] - b[i]);
    if (d > m) m = d;
  }
  return m;
}

void scale(double* a, std::size_t n, double c) {
  for (std::size_t i = 0; i < n; ++i) a[i] *= c;
}

void add(double* y, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += x[i];
}

void spmv_unit(const std::uint64_t* offsets, const std::uint32_t* cols,
               std::size_t rows, const double* x, double* y) {
  for (std::size_t i = 0; i < rows; ++i) {
    double acc = 0.0;
    for (std::uint64_t k = offsets[i]; k < offsets[i + 1]; ++k) acc += x[cols[k]];
    y[i] = acc;
  }
}

}  // namespace scalar

// ----------------------------------------------------------------------------
// AVX2 lane stubs for non-x86 builds (the real kernels live in
// kernels_avx2.cpp, compiled with -mavx2 -mfma on x86-64 only)
// ----------------------------------------------------------------------------

#if !defined(SPECTRE_HAVE_AVX2_LANE)
namespace avx2 {
bool supported() { return false; }
double dot(const double*, const double*, std::size_t) {
  throw Error("AVX2 lane not compiled in");
}
double max_abs_diff(const double*, const double*, std::size_t) {
  throw Error("AVX2 lane not compiled in");
}
void scale(double*, std::size_t, double) { throw Error("AVX2 lane not compiled in"); }
void add(double*, const double*, std::size_t) { throw Error("AVX2 lane not compiled in"); }
void spmv_unit(const std::uint64_t*, const std::uint32_t*, std::size_t,
               const double*, double*) {
  throw Error("AVX2 lane not compiled in");
}
}  // namespace avx2
#endif

// ----------------------------------------------------------------------------
// Runtime dispatch
// ----------------------------------------------------------------------------

namespace {

Lane detect() { return avx2::supported() ? Lane::avx2 : Lane::scalar; }

std::atomic<Lane>& lane_state() {
  static std::atomic<Lane> state{detect()};
  return state;
}

}  // namespace

Lane active_lane() { return lane_state().load(std::memory_order_relaxed); }

bool lane_supported(Lane lane) {
  return lane == Lane::scalar || (lane == Lane::avx2 && avx2::supported());
}

void force_lane(Lane lane) {
  if (!lane_supported(lane))
    throw InvalidParam("kernel lane '" + lane_name(lane) + "' not supported on this CPU");
  lane_state().store(lane, std::memory_order_relaxed);
}

void reset_lane() { lane_state().store(detect(), std::memory_order_relaxed); }

std::string lane_name(Lane lane) {
  switch (lane) {
    case Lane::scalar: return "scalar";
    case Lane::avx2: return "avx2";
  }
  return "?";
}

double dot(const double* a, const double* b, std::size_t n) {
  return active_lane() == Lane::avx2 ? avx2::dot(a, b, n) : scalar::dot(a, b, n);
}

double max_abs_diff(const double* a, const double* b, std::size_t n) {
  return active_lane() == Lane::avx2 ? avx2::max_abs_diff(a, b, n)
                                     : scalar::max_abs_diff(a, b, n);
}

void scale(double* a, std::size_t n, double c) {
  active_lane() == Lane::avx2 ? avx2::scale(a, n, c) : scalar::scale(a, n, c);
}

void add(double* y, const double* x, std::size_t n) {
  active_lane() == Lane::avx2 ? avx2::add(y, x, n) : scalar::add(y, x, n);
}

void spmv_unit(const std::uint64_t* offsets, const std::uint32_t* cols,
               std::size_t rows, const double* x, double* y) {
  active_lane() == Lane::avx2 ? avx2::spmv_unit(offsets, cols, rows, x, y)
                              : scalar::spmv_unit(offsets, cols, rows, x, y);
}

}  // namespace spectre::kern
