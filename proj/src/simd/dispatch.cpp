#include <cstdlib>
#include <string>

#include "chebmellin/simd/kernels.hpp"

namespace chebmellin::simd {

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

Isa detected_isa() {
#if defined(__x86_64__) || defined(__i386__)
  static const Isa isa = (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) ? Isa::avx2 : Isa::scalar;
  return isa;
#else
  return Isa::scalar;
#endif
}

Isa active_isa() {
  const char* env = std::getenv("CHEBMELLIN_SIMD");
  if (env != nullptr && std::string(env) == "scalar") return Isa::scalar;
  return detected_isa();
}

void weighted_moments(const MomentInput& in, const Recurrence& rec, unsigned n, double* out_re, double* out_im,
                      Isa isa) {
  if (isa == Isa::avx2 && detected_isa() == Isa::avx2) weighted_moments_avx2(in, rec, n, out_re, out_im);
  else weighted_moments_scalar(in, rec, n, out_re, out_im);
}

void horner_batch(const double* c, unsigned degree, const double* x, std::size_t count, double* out, Isa isa) {
  if (isa == Isa::avx2 && detected_isa() == Isa::avx2) horner_batch_avx2(c, degree, x, count, out);
  else horner_batch_scalar(c, degree, x, count, out);
}

}  // namespace chebmellin::simd
