#pragma once

#include <cstddef>
#include <string_view>

namespace semspace::simd {

// Vector primitives backing the kernel and distance inner loops. Every
// entry has a scalar reference implementation and may have an AVX2
// variant; the active table is chosen once at startup from CPU features
// (override with SEMSPACE_SIMD=scalar|avx2 or select()).
//
// Accumulation order differs between backends, so cross-backend results
// agree only to rounding; a fixed backend is bit-deterministic.
struct Ops {
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*squared_norm)(const double* a, std::size_t n);
  double (*sum)(const double* a, std::size_t n);
  // sum_k (a_k - b_k)^2 / (a_k + b_k), terms with zero denominator skipped.
  double (*chi2_distance)(const double* a, const double* b, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  void (*scale)(double alpha, double* x, std::size_t n);
  const char* name;
};

const Ops& scalar_ops();
bool avx2_available();
const Ops& avx2_ops();  // only meaningful when avx2_available()

// Active table. First call resolves the backend.
const Ops& ops();
// Force a backend by name; returns false (and leaves the selection
// untouched) when the target is unknown or unsupported on this CPU.
bool select(std::string_view name);
const char* active_name();

}  // namespace semspace::simd
