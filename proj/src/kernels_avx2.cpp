// Compiled with -mavx2. Only reached through table_for(Isa::avx2), which
// checks the CPU first.

#include "gcdvss/kernels.hpp"

#include <immintrin.h>

#include <bit>
#include <limits>

namespace gcdvss::kernels {
namespace {

double combine(__m256d acc) {
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

double sum_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double s = combine(acc);
  for (; i < n; ++i) s += x[i];
  return s;
}

double min_avx2(const double* x, std::size_t n) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  __m256d acc = _mm256_set1_pd(inf);
  std::size_t i = 0;
  // min_pd(a, b) returns b unless a < b, so NaN in x never replaces acc.
  for (; i + 4 <= n; i += 4) acc = _mm256_min_pd(_mm256_loadu_pd(x + i), acc);
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  double m = inf;
  for (double v : lane)
    if (v < m) m = v;
  for (; i < n; ++i)
    if (x[i] < m) m = x[i];
  return m;
}

double squared_distance_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
  }
  double s = combine(acc);
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

std::size_t count_above_avx2(const double* x, std::size_t n, double threshold) {
  const __m256d t = _mm256_set1_pd(threshold);
  std::size_t c = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d gt = _mm256_cmp_pd(_mm256_loadu_pd(x + i), t, _CMP_GT_OQ);
    c += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(_mm256_movemask_pd(gt))));
  }
  for (; i < n; ++i) c += x[i] > threshold ? 1 : 0;
  return c;
}

double sum_at_or_below_avx2(const double* x, std::size_t n, double threshold) {
  const __m256d t = _mm256_set1_pd(threshold);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    const __m256d gt = _mm256_cmp_pd(v, t, _CMP_GT_OQ);
    acc = _mm256_add_pd(acc, _mm256_andnot_pd(gt, v));
  }
  double s = combine(acc);
  for (; i < n; ++i) s += x[i] > threshold ? 0.0 : x[i];
  return s;
}

void shift_above_avx2(const double* x, double* out, std::size_t n, std::size_t skip,
                      double threshold, double delta) {
  const double kept = skip < n ? x[skip] : 0.0;
  const __m256d t = _mm256_set1_pd(threshold);
  const __m256d dv = _mm256_set1_pd(delta);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d sign = _mm256_set1_pd(-0.0);
  const __m256d dabs = _mm256_set1_pd(std::fabs(delta));
  const __m256d tol =
      _mm256_set1_pd(kCancellationUlps * std::numeric_limits<double>::epsilon());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    const __m256d gt = _mm256_cmp_pd(v, t, _CMP_GT_OQ);
    __m256d r = _mm256_add_pd(v, dv);
    // settle(): zero out negative results within rounding of zero.
    const __m256d mag = _mm256_max_pd(_mm256_andnot_pd(sign, v), dabs);
    const __m256d residue = _mm256_and_pd(
        _mm256_cmp_pd(r, zero, _CMP_LT_OQ),
        _mm256_cmp_pd(_mm256_sub_pd(zero, r), _mm256_mul_pd(tol, mag), _CMP_LE_OQ));
    r = _mm256_blendv_pd(r, zero, residue);
    _mm256_storeu_pd(out + i, _mm256_blendv_pd(v, r, gt));
  }
  for (; i < n; ++i) out[i] = x[i] > threshold ? settle(x[i], delta) : x[i];
  if (skip < n) out[skip] = kept;
}

void redistribute_avx2(const double* x, double* out, std::size_t n, double threshold,
                       double share) {
  const __m256d t = _mm256_set1_pd(threshold);
  const __m256d sv = _mm256_set1_pd(share);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    const __m256d gt = _mm256_cmp_pd(v, t, _CMP_GT_OQ);
    _mm256_storeu_pd(out + i, _mm256_blendv_pd(zero, _mm256_add_pd(v, sv), gt));
  }
  for (; i < n; ++i) out[i] = x[i] > threshold ? x[i] + share : 0.0;
}

double weighted_fourth_power_sum_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  __m256d w = _mm256_setr_pd(1.0, 2.0, 3.0, 4.0);
  const __m256d step = _mm256_set1_pd(4.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    const __m256d sq = _mm256_mul_pd(v, v);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(w, _mm256_mul_pd(sq, sq)));
    w = _mm256_add_pd(w, step);
  }
  double s = combine(acc);
  for (; i < n; ++i) {
    const double sq = x[i] * x[i];
    s += static_cast<double>(i + 1) * (sq * sq);
  }
  return s;
}

}  // namespace

const KernelTable& avx2_table() noexcept {
  static const KernelTable table{
      Isa::avx2,
      sum_avx2,
      min_avx2,
      squared_distance_avx2,
      count_above_avx2,
      sum_at_or_below_avx2,
      shift_above_avx2,
      redistribute_avx2,
      weighted_fourth_power_sum_avx2,
  };
  return table;
}

}  // namespace gcdvss::kernels
