// AVX2/FMA variants of the vector primitives. Compiled with -mavx2 -mfma
// in its own translation unit; callers reach it only through the dispatch
// table after the CPU check.

#include "semspace/simd.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace semspace::simd {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double result = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) result += a[i] * b[i];
  return result;
}

double squared_norm_avx2(const double* a, std::size_t n) { return dot_avx2(a, a, n); }

double sum_avx2(const double* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
  double result = hsum(acc);
  for (; i < n; ++i) result += a[i];
  return result;
}

double chi2_distance_avx2(const double* a, const double* b, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d va = _mm256_loadu_pd(a + i);
    const __m256d vb = _mm256_loadu_pd(b + i);
    const __m256d denom = _mm256_add_pd(va, vb);
    const __m256d diff = _mm256_sub_pd(va, vb);
    const __m256d num = _mm256_mul_pd(diff, diff);
    // Divide by 1 where the denominator vanishes; the masked numerator is 0
    // there anyway, so the term drops out without branching.
    const __m256d mask = _mm256_cmp_pd(denom, zero, _CMP_GT_OQ);
    const __m256d safe_denom = _mm256_blendv_pd(_mm256_set1_pd(1.0), denom, mask);
    const __m256d term = _mm256_and_pd(_mm256_div_pd(num, safe_denom), mask);
    acc = _mm256_add_pd(acc, term);
  }
  double result = hsum(acc);
  for (; i < n; ++i) {
    const double denom = a[i] + b[i];
    if (denom > 0.0) {
      const double diff = a[i] - b[i];
      result += diff * diff / denom;
    }
  }
  return result;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_avx2(double alpha, double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) x[i] *= alpha;
}

}  // namespace

bool avx2_available() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

const Ops& avx2_ops() {
  static const Ops table{dot_avx2, squared_norm_avx2, sum_avx2,
                         chi2_distance_avx2, axpy_avx2, scale_avx2, "avx2"};
  return table;
}

}  // namespace semspace::simd

#else

namespace semspace::simd {
bool avx2_available() { return false; }
const Ops& avx2_ops() { return scalar_ops(); }
}  // namespace semspace::simd

#endif
