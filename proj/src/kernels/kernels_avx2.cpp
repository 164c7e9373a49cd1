// Compiled with -mavx2 -mpopcnt; only reached through the runtime dispatcher.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace swim::kernels {
namespace {

// Nibble-lookup popcount of each byte, summed into four 64-bit lanes.
inline __m256i popcnt_epi64(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline std::size_t hsum_epi64(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

inline double hsum_pd(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline bool covered_bit(UserId id, const std::uint64_t* covered, std::size_t words) {
  const std::size_t w = id >> 6;
  return w < words && ((covered[w] >> (id & 63)) & 1u) != 0;
}

// For four ids: 64-bit lane mask (all ones) where the id is live and uncovered.
inline __m256i uncovered_lanes(__m128i ids, const std::uint64_t* covered, std::size_t words) {
  const __m128i live = _mm_xor_si128(_mm_cmpeq_epi32(ids, _mm_set1_epi32(-1)), _mm_set1_epi32(-1));
  const __m128i widx = _mm_srli_epi32(ids, 6);
  const __m128i in_range = _mm_cmpgt_epi32(_mm_set1_epi32(static_cast<int>(words)), widx);
  const __m256i gather_mask = _mm256_cvtepi32_epi64(_mm_and_si128(live, in_range));
  const __m256i w = _mm256_mask_i32gather_epi64(_mm256_setzero_si256(),
                                                reinterpret_cast<const long long*>(covered), widx,
                                                gather_mask, 8);
  const __m256i shift = _mm256_cvtepu32_epi64(_mm_and_si128(ids, _mm_set1_epi32(63)));
  const __m256i bit = _mm256_and_si256(_mm256_srlv_epi64(w, shift), _mm256_set1_epi64x(1));
  const __m256i is_covered = _mm256_cmpeq_epi64(bit, _mm256_set1_epi64x(1));
  return _mm256_andnot_si256(is_covered, _mm256_cvtepi32_epi64(live));
}

std::size_t count_uncovered_avx2(const UserId* ids, std::size_t n, const std::uint64_t* covered,
                                 std::size_t words) {
  std::size_t c = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m128i v = _mm_loadu_si128(reinterpret_cast<const __m128i*>(ids + i));
    const __m256i m = uncovered_lanes(v, covered, words);
    c += static_cast<std::size_t>(_mm_popcnt_u32(
        static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(m)))));
  }
  for (; i < n; ++i) {
    if (ids[i] != kTombstone && !covered_bit(ids[i], covered, words)) ++c;
  }
  return c;
}

double sum_uncovered_avx2(const UserId* ids, std::size_t n, const std::uint64_t* covered,
                          std::size_t words, const double* weights) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m128i v = _mm_loadu_si128(reinterpret_cast<const __m128i*>(ids + i));
    const __m256d m = _mm256_castsi256_pd(uncovered_lanes(v, covered, words));
    acc = _mm256_add_pd(acc, _mm256_mask_i32gather_pd(_mm256_setzero_pd(), weights, v, m, 8));
  }
  double s = hsum_pd(acc);
  for (; i < n; ++i) {
    if (ids[i] != kTombstone && !covered_bit(ids[i], covered, words)) s += weights[ids[i]];
  }
  return s;
}

std::size_t popcount_avx2(const std::uint64_t* a, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_epi64(acc, popcnt_epi64(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i))));
  }
  std::size_t c = hsum_epi64(acc);
  for (; i < n; ++i) c += static_cast<std::size_t>(_mm_popcnt_u64(a[i]));
  return c;
}

std::size_t popcount_andnot_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_add_epi64(acc, popcnt_epi64(_mm256_andnot_si256(vb, va)));
  }
  std::size_t c = hsum_epi64(acc);
  for (; i < n; ++i) c += static_cast<std::size_t>(_mm_popcnt_u64(a[i] & ~b[i]));
  return c;
}

void or_into_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst + i);
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(d, _mm256_or_si256(_mm256_loadu_si256(d), s));
  }
  for (; i < n; ++i) dst[i] |= src[i];
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{
      "avx2",         count_uncovered_avx2, sum_uncovered_avx2,      popcount_avx2,
      popcount_andnot_avx2, or_into_avx2,   weighted_popcount_scalar,
  };
  return table;
}

}  // namespace swim::kernels
