// Compiled with -mavx2; only reached after a runtime CPU check.

#include "prymcalc/modp_kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define PRYMCALC_HAVE_AVX2 1
#endif

namespace prymcalc::kernels::avx2 {

#ifdef PRYMCALC_HAVE_AVX2

namespace {

struct ModCtx {
  __m256i p64;
  __m256i pm1;
  __m256d pinv;
};

inline ModCtx make_ctx(std::uint32_t p) {
  return {_mm256_set1_epi64x(p), _mm256_set1_epi64x(static_cast<long long>(p) - 1),
          _mm256_set1_pd(1.0 / static_cast<double>(p))};
}

// 4 lanes of (a * s) mod p. The quotient estimate from doubles is off by at
// most one since a*s/p < 2^31 and the relative error is ~2^-51, so the
// remainder lands in [-p, 2p) before the two corrections.
inline __m256i mulmod4(__m128i a32, __m256i s64, __m256d sd, const ModCtx& c) {
  const __m256i a64 = _mm256_cvtepu32_epi64(a32);
  const __m256i prod = _mm256_mul_epu32(a64, s64);
  const __m256d ad = _mm256_cvtepi32_pd(a32);
  const __m256d qd = _mm256_floor_pd(_mm256_mul_pd(_mm256_mul_pd(ad, sd), c.pinv));
  const __m256i q64 = _mm256_cvtepu32_epi64(_mm256_cvttpd_epi32(qd));
  __m256i r = _mm256_sub_epi64(prod, _mm256_mul_epu32(q64, c.p64));
  const __m256i neg = _mm256_cmpgt_epi64(_mm256_setzero_si256(), r);
  r = _mm256_add_epi64(r, _mm256_and_si256(neg, c.p64));
  const __m256i big = _mm256_cmpgt_epi64(r, c.pm1);
  return _mm256_sub_epi64(r, _mm256_and_si256(big, c.p64));
}

inline __m128i narrow(__m256i v) {
  const __m256i idx = _mm256_setr_epi32(0, 2, 4, 6, 0, 2, 4, 6);
  return _mm256_castsi256_si128(_mm256_permutevar8x32_epi32(v, idx));
}

}  // namespace

bool supported() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") != 0;
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t s,
              std::uint32_t p) {
  const ModCtx c = make_ctx(p);
  const __m256i s64 = _mm256_set1_epi64x(s);
  const __m256d sd = _mm256_set1_pd(static_cast<double>(s));
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m128i a32 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(src.data() + i));
    __m256i r = mulmod4(a32, s64, sd, c);
    const __m256i d64 = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(dst.data() + i)));
    r = _mm256_add_epi64(r, d64);
    const __m256i big = _mm256_cmpgt_epi64(r, c.pm1);
    r = _mm256_sub_epi64(r, _mm256_and_si256(big, c.p64));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst.data() + i), narrow(r));
  }
  scalar::axpy_mod(dst.subspan(i), src.subspan(i), s, p);
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t s, std::uint32_t p) {
  const ModCtx c = make_ctx(p);
  const __m256i s64 = _mm256_set1_epi64x(s);
  const __m256d sd = _mm256_set1_pd(static_cast<double>(s));
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m128i a32 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst.data() + i));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst.data() + i), narrow(mulmod4(a32, s64, sd, c)));
  }
  scalar::scale_mod(dst.subspan(i), s, p);
}

#else

bool supported() { return false; }

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t s,
              std::uint32_t p) {
  scalar::axpy_mod(dst, src, s, p);
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t s, std::uint32_t p) { scalar::scale_mod(dst, s, p); }

#endif

}  // namespace prymcalc::kernels::avx2
