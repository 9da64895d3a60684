#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "spectre/types.hpp"

// Dense vector and unit-weight CSR kernels behind the power iteration.
// Scalar reference implementations always exist; an AVX2 lane is selected at
// runtime when the CPU supports it (overridable, see force_lane). For a fixed
// lane the summation order is fixed, so results are bitwise reproducible
// run-to-run; across lanes the reductions (dot, spmv) may differ by rounding
// and are equivalence-tested to tight relative tolerance.

namespace spectre::kern {

enum class Lane { scalar, avx2 };

Lane active_lane();
bool lane_supported(Lane lane);
void force_lane(Lane lane);  // throws InvalidParam if unsupported here
void reset_lane();           // back to auto-detection
std::string lane_name(Lane lane);

// Dispatched entry points.
double dot(const double* a, const double* b, std::size_t n);
double max_abs_diff(const double* a, const double* b, std::size_t n);
void scale(double* a, std::size_t n, double c);
void add(double* y, const double* x, std::size_t n);  // y += x

// y[i] = sum of x[cols[k]] for k in [offsets[i], offsets[i+1]).
void spmv_unit(const std::uint64_t* offsets, const std::uint32_t* cols,
               std::size_t rows, const double* x, double* y);

// Named lanes, for equivalence tests.
namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
double max_abs_diff(const double* a, const double* b, std::size_t n);
void scale(double* a, std::size_t n, double c);
void add(double* y, const double* x, std::size_t n);
void spmv_unit(const std::uint64_t* offsets, const std::uint32_t* cols,
               std::size_t rows, const double* x, double* y);
}  // namespace scalar

namespace avx2 {
bool supported();  // compiled in and the CPU has AVX2+FMA
double dot(const double* a, const double* b, std::size_t n);
double max_abs_diff(const double* a, const double* b, std::size_t n);
void scale(double* a, std::size_t n, double c);
void add(double* y, const double* x, std::size_t n);
void spmv_unit(const std::uint64_t* offsets, const std::uint32_t* cols,
               std::size_t rows, const double* x, double* y);
}  // namespace avx2

}  // namespace spectre::kern
