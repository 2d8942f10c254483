// AVX2 variants of the Z/pZ lane kernels.  Built with -mavx2; only reached
// through the dispatcher after a runtime CPU check.

#include <immintrin.h>

#include "mzv/kernels.hpp"

namespace mzv::kernels {

namespace {

// x mod p for eight lanes with 0 <= x <= 2^31 - 1.  The quotient comes from a
// double-precision multiply by 1/p; it is off by at most one, which the two
// masked corrections absorb.
inline __m256i mod_lanes(__m256i x, __m256d inv_p, __m256i pv, __m256i pm1) {
  const __m128i lo = _mm256_castsi256_si128(x);
  const __m128i hi = _mm256_extracti128_si256(x, 1);
  const __m128i qlo = _mm256_cvttpd_epi32(_mm256_mul_pd(_mm256_cvtepi32_pd(lo), inv_p));
  const __m128i qhi = _mm256_cvttpd_epi32(_mm256_mul_pd(_mm256_cvtepi32_pd(hi), inv_p));
  const __m256i q = _mm256_inserti128_si256(_mm256_castsi128_si256(qlo), qhi, 1);
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, pv));
  r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(_mm256_setzero_si256(), r), pv));
  r = _mm256_sub_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(r, pm1), pv));
  return r;
}

void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
                   std::uint32_t p) {
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i pm1 = _mm256_set1_epi32(static_cast<int>(p - 1));
  const __m256d inv_p = _mm256_set1_pd(1.0 / static_cast<double>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i v = _mm256_add_epi32(d, _mm256_mullo_epi32(s, cv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), mod_lanes(v, inv_p, pv, pm1));
  }
  for (; i < n; ++i) dst[i] = (dst[i] + c * src[i]) % p;
}

void mul_acc_avx2(std::uint32_t* acc, const std::uint32_t* src, std::size_t n, std::uint32_t c) {
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i),
                        _mm256_add_epi32(a, _mm256_mullo_epi32(s, cv)));
  }
  for (; i < n; ++i) acc[i] += c * src[i];
}

void reduce_mod_avx2(std::uint32_t* x, std::size_t n, std::uint32_t p) {
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i pm1 = _mm256_set1_epi32(static_cast<int>(p - 1));
  const __m256d inv_p = _mm256_set1_pd(1.0 / static_cast<double>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(x + i), mod_lanes(v, inv_p, pv, pm1));
  }
  for (; i < n; ++i) x[i] %= p;
}

void add_mod_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t p) {
  const __m256i pm1 = _mm256_set1_epi32(static_cast<int>(p - 1));
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i v = _mm256_add_epi32(d, s);
    v = _mm256_sub_epi32(v, _mm256_and_si256(_mm256_cmpgt_epi32(v, pm1), pv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), v);
  }
  for (; i < n; ++i) {
    std::uint32_t s = dst[i] + src[i];
    dst[i] = s >= p ? s - p : s;
  }
}

}  // namespace

const Table& avx2_table() {
  static const Table t{axpy_mod_avx2, mul_acc_avx2, reduce_mod_avx2, add_mod_avx2};
  return t;
}

}  // namespace mzv::kernels
