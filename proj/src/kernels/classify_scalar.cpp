#include "orthopoly/kernels.hpp"

namespace orthopoly::kernels {

void classify_row_scalar(const std::uint8_t* above, const std::uint8_t* below,
                         std::size_t width, std::uint8_t* codes) {
  std::uint8_t above_left = 0;
  std::uint8_t below_left = 0;
  for (std::size_t x = 0; x < width; ++x) {
    const std::uint8_t above_here = above[x];
    const std::uint8_t below_here = below[x];
    codes[x] = static_cast<std::uint8_t>(above_left | (above_here << 1) | (below_left << 2) |
                                         (below_here << 3));
    above_left = above_here;
    below_left = below_here;
  }
  codes[width] = static_cast<std::uint8_t>(above_left | (below_left << 2));
}

std::size_t count_marked_scalar(const std::uint8_t* cells, std::size_t n) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) count += cells[i] != 0;
  return count;
}

std::size_t count_vertices_scalar(const std::uint8_t* codes, std::size_t n) {
  static constexpr std::uint8_t kVertices[16] = {0, 1, 1, 0, 1, 0, 2, 1, 1, 2, 0, 1, 0, 1, 1, 0};
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) count += kVertices[codes[i] & 15u];
  return count;
}

}  // namespace orthopoly::kernels
