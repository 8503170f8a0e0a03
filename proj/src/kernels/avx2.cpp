#include <cassert>
#include <stdexcept>

#include "bettikit/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#define BETTIKIT_X86 1
#include <immintrin.h>
#else
#define BETTIKIT_X86 0
#endif

namespace bettikit::kernels::avx2 {

#if BETTIKIT_X86

namespace {

// Reduces 8 lanes holding x in [0, 2^31) modulo p < 2^15.
//
// The quotient is estimated in single precision. For x < p^2 + p the
// estimate is within one of floor(x / p), so one conditional add and one
// conditional subtract bring the remainder into [0, p).
__attribute__((target("avx2"))) inline __m256i reduce(__m256i x, __m256 inv_p, __m256i p, __m256i p_minus_1) {
  __m256i q = _mm256_cvttps_epi32(_mm256_mul_ps(_mm256_cvtepi32_ps(x), inv_p));
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, p));
  r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(_mm256_setzero_si256(), r), p));
  r = _mm256_sub_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(r, p_minus_1), p));
  return r;
}

__attribute__((target("avx2"))) void axpy_impl(std::uint32_t* dst, const std::uint32_t* src, std::size_t len,
                                               std::uint32_t c, std::uint32_t p) {
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i pm1 = _mm256_set1_epi32(static_cast<int>(p - 1));
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  const __m256 inv = _mm256_set1_ps(1.0f / static_cast<float>(p));
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(cv, s));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce(x, inv, pv, pm1));
  }
  for (; i < len; ++i) dst[i] = (dst[i] + c * src[i]) % p;
}

__attribute__((target("avx2"))) void scale_impl(std::uint32_t* dst, std::size_t len, std::uint32_t c,
                                                std::uint32_t p) {
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i pm1 = _mm256_set1_epi32(static_cast<int>(p - 1));
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  const __m256 inv = _mm256_set1_ps(1.0f / static_cast<float>(p));
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce(_mm256_mullo_epi32(cv, d), inv, pv, pm1));
  }
  for (; i < len; ++i) dst[i] = c * dst[i] % p;
}

void check_modulus(std::uint32_t p) {
  if (p < 2 || p >= kModulusLimit) throw std::invalid_argument("avx2 kernel: modulus out of range");
}

}  // namespace

bool supported() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
}

void axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c, std::uint32_t p) {
  assert(dst.size() == src.size());
  check_modulus(p);
  axpy_impl(dst.data(), src.data(), dst.size(), c, p);
}

void scale(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p) {
  check_modulus(p);
  scale_impl(dst.data(), dst.size(), c, p);
}

#else

bool supported() { return false; }

void axpy(std::span<std::uint32_t>, std::span<const std::uint32_t>, std::uint32_t, std::uint32_t) {
  throw std::logic_error("avx2 kernel not available on this architecture");
}

void scale(std::span<std::uint32_t>, std::uint32_t, std::uint32_t) {
  throw std::logic_error("avx2 kernel not available on this architecture");
}

#endif

}  // namespace bettikit::kernels::avx2
