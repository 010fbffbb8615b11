#pragma once

#include <cstddef>
#include <vector>

namespace chebmellin::simd {

// P_0 = 1, P_1 = a[0] x, P_{k+1} = a[k] x P_k - b[k] P_{k-1}.
struct Recurrence {
  std::vector<double> a;
  std::vector<double> b;
};

struct MomentInput {
  const double* x = nullptr;       // node abscissae
  const double* x_inv = nullptr;   // 1/x, used for odd indices
  const double* w_even_re = nullptr;
  const double* w_even_im = nullptr;
  const double* w_odd_re = nullptr;
  const double* w_odd_im = nullptr;
  std::size_t count = 0;
};

// out[k] += sum_i W_i P_k(x_i) for k = 0..n, where W is the even weight for
// even k and the odd weight times 1/x for odd k. out_re/out_im hold n+1 values.
void weighted_moments_scalar(const MomentInput& in, const Recurrence& rec, unsigned n, double* out_re,
                             double* out_im);
void weighted_moments_avx2(const MomentInput& in, const Recurrence& rec, unsigned n, double* out_re,
                           double* out_im);

// out[i] = sum_k c[k] x[i]^k.
void horner_batch_scalar(const double* c, unsigned degree, const double* x, std::size_t count, double* out);
void horner_batch_avx2(const double* c, unsigned degree, const double* x, std::size_t count, double* out);

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa);
// What the CPU supports.
Isa detected_isa();
// detected_isa(), unless CHEBMELLIN_SIMD=scalar forces the reference path.
Isa active_isa();

void weighted_moments(const MomentInput& in, const Recurrence& rec, unsigned n, double* out_re, double* out_im,
                      Isa isa = active_isa());
void horner_batch(const double* c, unsigned degree, const double* x, std::size_t count, double* out,
                  Isa isa = active_isa());

}  // namespace chebmellin::simd
