// Compiled with -mavx2; only reached through dispatch after a cpuid check.

#include <immintrin.h>

#include <bit>

#include "seqfam/kernels.hpp"

namespace seqfam::kernels::avx2 {

namespace {

/// Inclusive prefix sum of eight int32 lanes.
inline __m256i prefix8(__m256i x) {
  x = _mm256_add_epi32(x, _mm256_slli_si256(x, 4));
  x = _mm256_add_epi32(x, _mm256_slli_si256(x, 8));
  const __m256i low_total = _mm256_shuffle_epi32(x, _MM_SHUFFLE(3, 3, 3, 3));
  return _mm256_add_epi32(x, _mm256_permute2x128_si256(low_total, low_total, 0x08));
}

inline __m256i signed_values(const Symbol* bits) {
  const __m256i b = _mm256_cvtepu8_epi32(_mm_loadl_epi64(reinterpret_cast<const __m128i*>(bits)));
  return _mm256_sub_epi32(_mm256_set1_epi32(1), _mm256_add_epi32(b, b));
}

inline __m256i broadcast_last(__m256i x) { return _mm256_permutevar8x32_epi32(x, _mm256_set1_epi32(7)); }

inline int hmax(__m256i v) {
  __m128i m = _mm_max_epi32(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
  m = _mm_max_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(1, 0, 3, 2)));
  m = _mm_max_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(2, 3, 0, 1)));
  return _mm_cvtsi128_si32(m);
}

inline int hmin(__m256i v) {
  __m128i m = _mm_min_epi32(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
  m = _mm_min_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(1, 0, 3, 2)));
  m = _mm_min_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(2, 3, 0, 1)));
  return _mm_cvtsi128_si32(m);
}

}  // namespace

void sum_mod_k(std::span<const Symbol* const> rows, std::size_t len, unsigned k, Symbol* out) {
  const __m256i kv = _mm256_set1_epi8(static_cast<char>(k));
  std::size_t n = 0;
  for (; n + 32 <= len; n += 32) {
    __m256i acc = _mm256_setzero_si256();
    for (const Symbol* row : rows) {
      acc = _mm256_add_epi8(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + n)));
      // acc < 2k <= 256: subtract k where acc >= k (otherwise acc - k wraps above acc).
      acc = _mm256_min_epu8(acc, _mm256_sub_epi8(acc, kv));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + n), acc);
  }
  for (; n < len; ++n) {
    unsigned acc = 0;
    for (const Symbol* row : rows) acc += row[n];
    out[n] = static_cast<Symbol>(acc % k);
  }
}

void pattern_codes(std::span<const Symbol* const> rows, std::size_t len, unsigned k, std::uint32_t* out) {
  const __m256i kv = _mm256_set1_epi32(static_cast<int>(k));
  std::size_t n = 0;
  for (; n + 8 <= len; n += 8) {
    __m256i acc = _mm256_setzero_si256();
    for (const Symbol* row : rows) {
      const __m256i s = _mm256_cvtepu8_epi32(_mm_loadl_epi64(reinterpret_cast<const __m128i*>(row + n)));
      acc = _mm256_add_epi32(_mm256_mullo_epi32(acc, kv), s);
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + n), acc);
  }
  for (; n < len; ++n) {
    std::uint32_t code = 0;
    for (const Symbol* row : rows) code = code * k + row[n];
    out[n] = code;
  }
}

PrefixPeak signed_prefix_peak(const Symbol* bits, std::size_t len) {
  // Pass 1: extreme prefix values. Prefix sums are bounded by len, so int32 lanes suffice.
  __m256i carry = _mm256_setzero_si256();
  __m256i vmax = _mm256_set1_epi32(0);
  __m256i vmin = _mm256_set1_epi32(0);
  std::size_t n = 0;
  for (; n + 8 <= len; n += 8) {
    const __m256i sums = _mm256_add_epi32(prefix8(signed_values(bits + n)), carry);
    vmax = _mm256_max_epi32(vmax, sums);
    vmin = _mm256_min_epi32(vmin, sums);
    carry = broadcast_last(sums);
  }
  std::int64_t hi = hmax(vmax);
  std::int64_t lo = hmin(vmin);
  std::int64_t sum = _mm256_cvtsi256_si32(carry);
  for (std::size_t t = n; t < len; ++t) {
    sum += bits[t] ? -1 : 1;
    hi = sum > hi ? sum : hi;
    lo = sum < lo ? sum : lo;
  }
  const std::int64_t peak = hi > -lo ? hi : -lo;
  if (peak == 0) return {};

  // Pass 2: first window whose |prefix| reaches the peak.
  const __m256i plus = _mm256_set1_epi32(static_cast<int>(peak));
  const __m256i minus = _mm256_set1_epi32(static_cast<int>(-peak));
  carry = _mm256_setzero_si256();
  n = 0;
  for (; n + 8 <= len; n += 8) {
    const __m256i sums = _mm256_add_epi32(prefix8(signed_values(bits + n)), carry);
    const __m256i hit = _mm256_or_si256(_mm256_cmpeq_epi32(sums, plus), _mm256_cmpeq_epi32(sums, minus));
    const int mask = _mm256_movemask_ps(_mm256_castsi256_ps(hit));
    if (mask != 0) return {peak, n + static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(mask))) + 1};
    carry = broadcast_last(sums);
  }
  sum = _mm256_cvtsi256_si32(carry);
  for (; n < len; ++n) {
    sum += bits[n] ? -1 : 1;
    if (sum == peak || sum == -peak) return {peak, n + 1};
  }
  return {peak, len};  // unreachable: pass 1 saw the peak
}

}  // namespace seqfam::kernels::avx2
