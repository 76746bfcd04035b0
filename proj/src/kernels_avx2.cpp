// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>

#include "mdr/kernels.hpp"

namespace mdr::kernels::avx2 {

namespace {

double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

}  // namespace

double sum(std::span<const double> x) {
  const double* p = x.data();
  const std::size_t n = x.size();
  __m256d a0 = _mm256_setzero_pd();
  __m256d a1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    a0 = _mm256_add_pd(a0, _mm256_loadu_pd(p + k));
    a1 = _mm256_add_pd(a1, _mm256_loadu_pd(p + k + 4));
  }
  for (; k + 4 <= n; k += 4) a0 = _mm256_add_pd(a0, _mm256_loadu_pd(p + k));
  double acc = hsum(_mm256_add_pd(a0, a1));
  for (; k < n; ++k) acc += p[k];
  return acc;
}

double dot(std::span<const double> x, std::span<const double> y) {
  const double* p = x.data();
  const double* q = y.data();
  const std::size_t n = x.size();
  __m256d a0 = _mm256_setzero_pd();
  __m256d a1 = _mm256_setzero_pd();
  std::size_t k = 0;
  // Separate multiply and add so integer-valued data stays exact in the
  // same cases as the scalar loop (no fused rounding differences).
  for (; k + 8 <= n; k += 8) {
    a0 = _mm256_add_pd(a0, _mm256_mul_pd(_mm256_loadu_pd(p + k),
                                         _mm256_loadu_pd(q + k)));
    a1 = _mm256_add_pd(a1, _mm256_mul_pd(_mm256_loadu_pd(p + k + 4),
                                         _mm256_loadu_pd(q + k + 4)));
  }
  for (; k + 4 <= n; k += 4) {
    a0 = _mm256_add_pd(a0, _mm256_mul_pd(_mm256_loadu_pd(p + k),
                                         _mm256_loadu_pd(q + k)));
  }
  double acc = hsum(_mm256_add_pd(a0, a1));
  for (; k < n; ++k) acc += p[k] * q[k];
  return acc;
}

std::size_t count_greater(std::span<const double> x, double threshold) {
  const double* p = x.data();
  const std::size_t n = x.size();
  const __m256d t = _mm256_set1_pd(threshold);
  std::size_t count = 0;
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d gt = _mm256_cmp_pd(_mm256_loadu_pd(p + k), t, _CMP_GT_OQ);
    count += static_cast<std::size_t>(
        __builtin_popcount(static_cast<unsigned>(_mm256_movemask_pd(gt))));
  }
  for (; k < n; ++k) count += p[k] > threshold ? 1 : 0;
  return count;
}

double max_value(std::span<const double> x) {
  const double* p = x.data();
  const std::size_t n = x.size();
  __m256d m = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) m = _mm256_max_pd(m, _mm256_loadu_pd(p + k));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, m);
  double r = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
  for (; k < n; ++k) r = std::max(r, p[k]);
  return r;
}

bool all_less_equal(std::span<const double> x, std::span<const double> y) {
  const double* p = x.data();
  const double* q = y.data();
  const std::size_t n = x.size();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d le = _mm256_cmp_pd(_mm256_loadu_pd(p + k), _mm256_loadu_pd(q + k),
                               _CMP_LE_OQ);
    if (_mm256_movemask_pd(le) != 0xF) return false;
  }
  for (; k < n; ++k) {
    if (!(p[k] <= q[k])) return false;
  }
  return true;
}

}  // namespace mdr::kernels::avx2
