#include "semspace/simd.hpp"

#include <cstdlib>
#include <string>

namespace semspace::simd {

namespace scalar {

double dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double squared_norm(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * a[i];
  return acc;
}

double sum(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i];
  return acc;
}

double chi2_distance(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double denom = a[i] + b[i];
    if (denom > 0.0) {
      const double diff = a[i] - b[i];
      acc += diff * diff / denom;
    }
  }
  return acc;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale(double alpha, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

}  // namespace scalar

const Ops& scalar_ops() {
  static const Ops table{scalar::dot,  scalar::squared_norm, scalar::sum,
                         scalar::chi2_distance, scalar::axpy, scalar::scale,
                         "scalar"};
  return table;
}

namespace {

const Ops* resolve() {
  const Ops* chosen = avx2_available() ? &avx2_ops() : &scalar_ops();
  if (const char* env = std::getenv("SEMSPACE_SIMD")) {
    const std::string want(env);
    if (want == "scalar") {
      chosen = &scalar_ops();
    } else if (want == "avx2" && avx2_available()) {
      chosen = &avx2_ops();
    }
  }
  return chosen;
}

const Ops*& active_slot() {
  static const Ops* active = resolve();
  return active;
}

}  // namespace

const Ops& ops() { return *active_slot(); }

bool select(std::string_view name) {
  if (name == "scalar") {
    active_slot() = &scalar_ops();
    return true;
  }
  if (name == "avx2" && avx2_available()) {
    active_slot() = &avx2_ops();
    return true;
  }
  return false;
}

const char* active_name() { return ops().name; }

}  // namespace semspace::simd
