#include <immintrin.h>

#include <vector>

#include "chebmellin/simd/kernels.hpp"

namespace chebmellin::simd {

namespace {
double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}
}  // namespace

void weighted_moments_avx2(const MomentInput& in, const Recurrence& rec, unsigned n, double* out_re,
                           double* out_im) {
  // Four lanes per index, stored unaligned.
  std::vector<double> acc_re(4 * (n + 1), 0.0);
  std::vector<double> acc_im(4 * (n + 1), 0.0);
  auto add = [](double* slot, __m256d v) { _mm256_storeu_pd(slot, _mm256_add_pd(_mm256_loadu_pd(slot), v)); };
  auto fma = [](double* slot, __m256d a, __m256d b) {
    _mm256_storeu_pd(slot, _mm256_fmadd_pd(a, b, _mm256_loadu_pd(slot)));
  };
  const std::size_t blocks = in.count / 4 * 4;
  for (std::size_t i = 0; i < blocks; i += 4) {
    const __m256d x = _mm256_loadu_pd(in.x + i);
    const __m256d xi = _mm256_loadu_pd(in.x_inv + i);
    const __m256d we_re = _mm256_loadu_pd(in.w_even_re + i);
    const __m256d we_im = _mm256_loadu_pd(in.w_even_im + i);
    const __m256d wo_re = _mm256_mul_pd(_mm256_loadu_pd(in.w_odd_re + i), xi);
    const __m256d wo_im = _mm256_mul_pd(_mm256_loadu_pd(in.w_odd_im + i), xi);
    __m256d prev = _mm256_set1_pd(1.0);
    __m256d cur = _mm256_mul_pd(_mm256_set1_pd(rec.a[0]), x);
    add(&acc_re[0], we_re);
    add(&acc_im[0], we_im);
    for (unsigned k = 1; k <= n; ++k) {
      if (k & 1U) {
        fma(&acc_re[4 * k], wo_re, cur);
        fma(&acc_im[4 * k], wo_im, cur);
      } else {
        fma(&acc_re[4 * k], we_re, cur);
        fma(&acc_im[4 * k], we_im, cur);
      }
      const __m256d ax = _mm256_mul_pd(_mm256_set1_pd(rec.a[k]), x);
      const __m256d next = _mm256_fnmadd_pd(_mm256_set1_pd(rec.b[k]), prev, _mm256_mul_pd(ax, cur));
      prev = cur;
      cur = next;
    }
  }
  for (unsigned k = 0; k <= n; ++k) {
    out_re[k] += hsum(_mm256_loadu_pd(&acc_re[4 * k]));
    out_im[k] += hsum(_mm256_loadu_pd(&acc_im[4 * k]));
  }
  if (blocks < in.count) {
    MomentInput tail = in;
    tail.x += blocks;
    tail.x_inv += blocks;
    tail.w_even_re += blocks;
    tail.w_even_im += blocks;
    tail.w_odd_re += blocks;
    tail.w_odd_im += blocks;
    tail.count = in.count - blocks;
    weighted_moments_scalar(tail, rec, n, out_re, out_im);
  }
}

void horner_batch_avx2(const double* c, unsigned degree, const double* x, std::size_t count, double* out) {
  const std::size_t blocks = count / 4 * 4;
  for (std::size_t i = 0; i < blocks; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x + i);
    __m256d acc = _mm256_set1_pd(c[degree]);
    for (unsigned k = degree; k-- > 0;) acc = _mm256_fmadd_pd(acc, xv, _mm256_set1_pd(c[k]));
    _mm256_storeu_pd(out + i, acc);
  }
  if (blocks < count) horner_batch_scalar(c, degree, x + blocks, count - blocks, out + blocks);
}

}  // namespace chebmellin::simd
