#include <immintrin.h>

#include "orthopoly/kernels.hpp"

namespace orthopoly::kernels {

namespace {

// Inputs are 0/1 bytes, so 16-bit lane shifts by at most 3 never carry into
// the neighbouring byte.
inline __m256i combine(__m256i above_left, __m256i above_here, __m256i below_left,
                       __m256i below_here) {
  __m256i code = _mm256_or_si256(above_left, _mm256_slli_epi16(above_here, 1));
  code = _mm256_or_si256(code, _mm256_slli_epi16(below_left, 2));
  return _mm256_or_si256(code, _mm256_slli_epi16(below_here, 3));
}

inline __m256i load(const std::uint8_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

}  // namespace

void classify_row_avx2(const std::uint8_t* above, const std::uint8_t* below,
                       std::size_t width, std::uint8_t* codes) {
  if (width == 0) {
    codes[0] = 0;
    return;
  }
  codes[0] = static_cast<std::uint8_t>((above[0] << 1) | (below[0] << 3));

  // Corners 1..width-1 have both neighbouring columns inside the row.
  std::size_t x = 1;
  for (; x + 32 <= width; x += 32) {
    const __m256i code = combine(load(above + x - 1), load(above + x), load(below + x - 1),
                                 load(below + x));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(codes + x), code);
  }
  for (; x < width; ++x) {
    codes[x] = static_cast<std::uint8_t>(above[x - 1] | (above[x] << 1) | (below[x - 1] << 2) |
                                         (below[x] << 3));
  }
  codes[width] = static_cast<std::uint8_t>(above[width - 1] | (below[width - 1] << 2));
}

std::size_t count_marked_avx2(const std::uint8_t* cells, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  const __m256i one = _mm256_set1_epi8(1);
  __m256i sums = zero;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    // min(v, 1) so any nonzero byte counts once
    const __m256i v = _mm256_min_epu8(load(cells + i), one);
    sums = _mm256_add_epi64(sums, _mm256_sad_epu8(v, zero));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), sums);
  std::size_t count = static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
  for (; i < n; ++i) count += cells[i] != 0;
  return count;
}

std::size_t count_vertices_avx2(const std::uint8_t* codes, std::size_t n) {
  // per-case vertex counts, repeated for both 128-bit lanes of pshufb
  const __m256i table = _mm256_setr_epi8(0, 1, 1, 0, 1, 0, 2, 1, 1, 2, 0, 1, 0, 1, 1, 0,
                                         0, 1, 1, 0, 1, 0, 2, 1, 1, 2, 0, 1, 0, 1, 1, 0);
  const __m256i low_nibble = _mm256_set1_epi8(15);
  const __m256i zero = _mm256_setzero_si256();
  __m256i sums = zero;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i v = _mm256_shuffle_epi8(table, _mm256_and_si256(load(codes + i), low_nibble));
    sums = _mm256_add_epi64(sums, _mm256_sad_epu8(v, zero));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), sums);
  std::size_t count = static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
  return count + count_vertices_scalar(codes + i, n - i);
}

}  // namespace orthopoly::kernels
