#include <arm_neon.h>

#include "orthopoly/kernels.hpp"

namespace orthopoly::kernels {

void classify_row_neon(const std::uint8_t* above, const std::uint8_t* below,
                       std::size_t width, std::uint8_t* codes) {
  if (width == 0) {
    codes[0] = 0;
    return;
  }
  codes[0] = static_cast<std::uint8_t>((above[0] << 1) | (below[0] << 3));

  std::size_t x = 1;
  for (; x + 16 <= width; x += 16) {
    uint8x16_t code = vld1q_u8(above + x - 1);
    code = vorrq_u8(code, vshlq_n_u8(vld1q_u8(above + x), 1));
    code = vorrq_u8(code, vshlq_n_u8(vld1q_u8(below + x - 1), 2));
    code = vorrq_u8(code, vshlq_n_u8(vld1q_u8(below + x), 3));
    vst1q_u8(codes + x, code);
  }
  for (; x < width; ++x) {
    codes[x] = static_cast<std::uint8_t>(above[x - 1] | (above[x] << 1) | (below[x - 1] << 2) |
                                         (below[x] << 3));
  }
  codes[width] = static_cast<std::uint8_t>(above[width - 1] | (below[width - 1] << 2));
}

std::size_t count_marked_neon(const std::uint8_t* cells, std::size_t n) {
  const uint8x16_t one = vdupq_n_u8(1);
  std::size_t count = 0;
  std::size_t i = 0;
  while (i + 16 <= n) {
    // bounded batches keep the 16-bit accumulators from overflowing
    uint16x8_t acc = vdupq_n_u16(0);
    for (int k = 0; k < 255 && i + 16 <= n; ++k, i += 16) {
      acc = vpadalq_u8(acc, vminq_u8(vld1q_u8(cells + i), one));
    }
    count += vaddlvq_u16(acc);
  }
  for (; i < n; ++i) count += cells[i] != 0;
  return count;
}

std::size_t count_vertices_neon(const std::uint8_t* codes, std::size_t n) {
  static constexpr std::uint8_t kVertices[16] = {0, 1, 1, 0, 1, 0, 2, 1, 1, 2, 0, 1, 0, 1, 1, 0};
  const uint8x16_t table = vld1q_u8(kVertices);
  const uint8x16_t low_nibble = vdupq_n_u8(15);
  std::size_t count = 0;
  std::size_t i = 0;
  while (i + 16 <= n) {
    uint16x8_t acc = vdupq_n_u16(0);
    for (int k = 0; k < 255 && i + 16 <= n; ++k, i += 16) {
      acc = vpadalq_u8(acc, vqtbl1q_u8(table, vandq_u8(vld1q_u8(codes + i), low_nibble)));
    }
    count += vaddlvq_u16(acc);
  }
  return count + count_vertices_scalar(codes + i, n - i);
}

}  // namespace orthopoly::kernels
