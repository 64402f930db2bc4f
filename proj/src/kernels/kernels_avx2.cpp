#include <immintrin.h>

#include "novcup/algebra/kernels.hpp"

namespace novcup::kernels::avx2 {

namespace {

// t mod p for 32-bit lanes t, Barrett constant m = floor(2^32 / p).
inline __m256i reduce_lanes(__m256i t, __m256i vm, __m256i vp) {
  const __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(t, vm), 32);
  const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(t, 32), vm);
  const __m256i q = _mm256_blend_epi32(even, odd, 0xAA);
  __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(q, vp));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, vp));
}

inline __m256i add_mod(__m256i a, __m256i b, __m256i vp) {
  const __m256i s = _mm256_add_epi32(a, b);
  return _mm256_min_epu32(s, _mm256_sub_epi32(s, vp));
}

}  // namespace

void row_axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t p) {
  const std::uint32_t m = static_cast<std::uint32_t>((std::uint64_t{1} << 32) / p);
  const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    const __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    const __m256i prod = reduce_lanes(_mm256_mullo_epi32(vx, va), vm, vp);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), add_mod(vy, prod, vp));
  }
  scalar::row_axpy_mod(y + i, x + i, a, n - i, p);
}

void row_scale_mod(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t p) {
  const std::uint32_t m = static_cast<std::uint32_t>((std::uint64_t{1} << 32) / p);
  const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), reduce_lanes(_mm256_mullo_epi32(vy, va), vm, vp));
  }
  scalar::row_scale_mod(y + i, a, n - i, p);
}

}  // namespace novcup::kernels::avx2
