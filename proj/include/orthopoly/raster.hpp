#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orthopoly {

// Binary mask, row-major, origin at the top-left pixel. x grows to the right,
// y grows downward. One byte per pixel holding exactly 0 or 1, which is the
// layout the row classification kernels read directly.
class BitRaster {
 public:
  BitRaster() = default;
  BitRaster(int width, int height);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  bool empty() const noexcept { return cells_.empty(); }

  // Reads outside [0,w) x [0,h) return false.
  bool get(std::int64_t x, std::int64_t y) const noexcept {
    if (x < 0 || y < 0 || x >= width_ || y >= height_) return false;
    return cells_[static_cast<std::size_t>(y) * width_ + static_cast<std::size_t>(x)] != 0;
  }

  void set(int x, int y, bool marked);

  std::span<const std::uint8_t> row(int y) const {
    return {cells_.data() + static_cast<std::size_t>(y) * width_, static_cast<std::size_t>(width_)};
  }
  std::span<std::uint8_t> mutable_row(int y) {
    return {cells_.data() + static_cast<std::size_t>(y) * width_, static_cast<std::size_t>(width_)};
  }
  std::span<const std::uint8_t> cells() const noexcept { return cells_; }

  std::size_t marked_count() const;

  friend bool operator==(const BitRaster&, const BitRaster&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> cells_;
};

// Each pixel marked independently with probability p. The stream is
// std::mt19937_64 seeded with `seed`; pixel (x,y) consumes the draw at index
// y*w + x and is marked when (draw >> 11) * 2^-53 < p. Both are fully
// specified, so masks are identical across standard libraries.
BitRaster gen_bernoulli(int width, int height, double p, std::uint64_t seed);

enum class MaskFormat { pbm_ascii, pbm_binary, ascii_grid };

enum class ParseErrorKind {
  malformed_header,
  dimension_mismatch,
  truncated_payload,
  bad_value,
};

const char* to_string(ParseErrorKind kind) noexcept;

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ParseErrorKind kind() const noexcept { return kind_; }

 private:
  ParseErrorKind kind_;
};

// PBM value 1 is a marked pixel. P4 rows are padded to whole bytes, MSB first.
BitRaster parse_mask(std::string_view bytes, MaskFormat format);

// Sniffs the "P1"/"P4" magic; anything else is treated as an ascii grid.
MaskFormat detect_mask_format(std::string_view bytes) noexcept;

std::string write_mask(const BitRaster& raster, MaskFormat format);

}  // namespace orthopoly
