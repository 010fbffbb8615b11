#include "chebmellin/simd/kernels.hpp"

namespace chebmellin::simd {

void weighted_moments_scalar(const MomentInput& in, const Recurrence& rec, unsigned n, double* out_re,
                             double* out_im) {
  for (std::size_t i = 0; i < in.count; ++i) {
    const double x = in.x[i];
    const double xi = in.x_inv[i];
    const double oe_re = in.w_odd_re[i] * xi, oe_im = in.w_odd_im[i] * xi;
    double prev = 1.0;
    double cur = rec.a[0] * x;
    out_re[0] += in.w_even_re[i];
    out_im[0] += in.w_even_im[i];
    for (unsigned k = 1; k <= n; ++k) {
      if (k & 1U) {
        out_re[k] += oe_re * cur;
        out_im[k] += oe_im * cur;
      } else {
        out_re[k] += in.w_even_re[i] * cur;
        out_im[k] += in.w_even_im[i] * cur;
      }
      const double next = rec.a[k] * x * cur - rec.b[k] * prev;
      prev = cur;
      cur = next;
    }
  }
}

void horner_batch_scalar(const double* c, unsigned degree, const double* x, std::size_t count, double* out) {
  for (std::size_t i = 0; i < count; ++i) {
    double acc = c[degree];
    for (unsigned k = degree; k-- > 0;) acc = acc * x[i] + c[k];
    out[i] = acc;
  }
}

}  // namespace chebmellin::simd
