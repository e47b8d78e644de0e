#include "orthopoly/raster.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <random>

#include "orthopoly/kernels.hpp"

namespace orthopoly {

BitRaster::BitRaster(int width, int height) : width_(width), height_(height) {
  if (width < 0 || height < 0) throw std::invalid_argument("raster dimensions must be non-negative");
  cells_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
}

void BitRaster::set(int x, int y, bool marked) {
  if (x < 0 || y < 0 || x >= width_ || y >= height_) throw std::out_of_range("pixel outside raster");
  cells_[static_cast<std::size_t>(y) * width_ + x] = marked ? 1 : 0;
}

std::size_t BitRaster::marked_count() const {
  return kernels::count_marked()(cells_.data(), cells_.size());
}

BitRaster gen_bernoulli(int width, int height, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  BitRaster raster(width, height);
  std::mt19937_64 rng(seed);
  constexpr double kScale = 0x1.0p-53;
  for (int y = 0; y < height; ++y) {
    auto row = raster.mutable_row(y);
    for (auto& cell : row) cell = static_cast<double>(rng() >> 11) * kScale < p ? 1 : 0;
  }
  return raster;
}

const char* to_string(ParseErrorKind kind) noexcept {
  switch (kind) {
    case ParseErrorKind::malformed_header: return "malformed header";
    case ParseErrorKind::dimension_mismatch: return "dimension mismatch";
    case ParseErrorKind::truncated_payload: return "truncated payload";
    case ParseErrorKind::bad_value: return "bad value";
  }
  return "parse error";
}

namespace {

[[noreturn]] void fail(ParseErrorKind kind, const std::string& detail) {
  throw ParseError(kind, std::string(to_string(kind)) + ": " + detail);
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Cursor over a netpbm header: whitespace and '#' comments separate tokens.
class PnmCursor {
 public:
  explicit PnmCursor(std::string_view bytes) : bytes_(bytes) {}

  void skip_separators() {
    while (pos_ < bytes_.size()) {
      if (is_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  int read_dimension(const char* what) {
    skip_separators();
    const char* first = bytes_.data() + pos_;
    const char* last = bytes_.data() + bytes_.size();
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || value < 0 || (ptr != last && !is_space(*ptr) && *ptr != '#')) {
      fail(ParseErrorKind::malformed_header, std::string("invalid ") + what);
    }
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }
  bool at_end() const { return pos_ >= bytes_.size(); }
  char peek() const { return bytes_[pos_]; }
  std::string_view rest() const { return bytes_.substr(pos_); }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

BitRaster make_checked(int width, int height) {
  constexpr auto kMaxCells = static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max());
  if (static_cast<std::uint64_t>(width) * static_cast<std::uint64_t>(height) > kMaxCells) {
    fail(ParseErrorKind::malformed_header, "raster too large");
  }
  return BitRaster(width, height);
}

BitRaster parse_pbm(std::string_view bytes, bool binary) {
  const std::string_view magic = binary ? "P4" : "P1";
  if (bytes.substr(0, 2) != magic) fail(ParseErrorKind::malformed_header, "expected magic " + std::string(magic));
  PnmCursor cursor(bytes);
  cursor.advance(2);
  if (!cursor.at_end() && !is_space(cursor.peek()) && cursor.peek() != '#') {
    fail(ParseErrorKind::malformed_header, "expected whitespace after magic");
  }
  const int width = cursor.read_dimension("width");
  const int height = cursor.read_dimension("height");
  BitRaster raster = make_checked(width, height);

  if (binary) {
    // exactly one whitespace byte separates the header from the packed rows
    if (cursor.at_end()) {
      if (width == 0 || height == 0) return raster;
      fail(ParseErrorKind::truncated_payload, "missing raster data");
    }
    if (!is_space(cursor.peek())) fail(ParseErrorKind::malformed_header, "expected whitespace after height");
    cursor.advance(1);
    const std::string_view payload = cursor.rest();
    const std::size_t stride = (static_cast<std::size_t>(width) + 7) / 8;
    const std::size_t expected = stride * static_cast<std::size_t>(height);
    if (payload.size() < expected) {
      fail(ParseErrorKind::truncated_payload,
           "expected " + std::to_string(expected) + " bytes, got " + std::to_string(payload.size()));
    }
    if (payload.size() > expected) {
      fail(ParseErrorKind::dimension_mismatch,
           std::to_string(payload.size() - expected) + " bytes beyond a " + std::to_string(width) + "x" +
               std::to_string(height) + " raster");
    }
    for (int y = 0; y < height; ++y) {
      auto row = raster.mutable_row(y);
      const auto* packed = reinterpret_cast<const unsigned char*>(payload.data()) + y * stride;
      for (int x = 0; x < width; ++x) row[x] = (packed[x >> 3] >> (7 - (x & 7))) & 1u;
    }
    return raster;
  }

  const std::size_t total = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::size_t filled = 0;
  while (true) {
    cursor.skip_separators();
    if (cursor.at_end()) break;
    const char c = cursor.peek();
    if (c != '0' && c != '1') fail(ParseErrorKind::bad_value, std::string("unexpected character '") + c + "'");
    if (filled == total) {
      fail(ParseErrorKind::dimension_mismatch, "more than " + std::to_string(total) + " pixel values");
    }
    raster.set(static_cast<int>(filled % width), static_cast<int>(filled / width), c == '1');
    ++filled;
    cursor.advance(1);
  }
  if (filled < total) {
    fail(ParseErrorKind::truncated_payload,
         "expected " + std::to_string(total) + " pixel values, got " + std::to_string(filled));
  }
  return raster;
}

BitRaster parse_ascii_grid(std::string_view bytes) {
  std::vector<std::string_view> rows;
  std::size_t start = 0;
  while (start < bytes.size()) {
    std::size_t end = bytes.find('\n', start);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view line = bytes.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    rows.push_back(line);
    start = end + 1;
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  if (rows.empty()) return BitRaster(0, 0);

  const std::size_t width = rows.front().size();
  BitRaster raster = make_checked(static_cast<int>(std::min<std::size_t>(width, std::numeric_limits<int>::max())),
                                  static_cast<int>(rows.size()));
  for (std::size_t y = 0; y < rows.size(); ++y) {
    if (rows[y].size() != width) {
      fail(ParseErrorKind::dimension_mismatch, "row " + std::to_string(y) + " has " +
                                                   std::to_string(rows[y].size()) + " cells, expected " +
                                                   std::to_string(width));
    }
    auto row = raster.mutable_row(static_cast<int>(y));
    for (std::size_t x = 0; x < width; ++x) {
      const char c = rows[y][x];
      if (c != '0' && c != '1') {
        fail(ParseErrorKind::bad_value, std::string("unexpected character '") + c + "' in row " + std::to_string(y));
      }
      row[x] = c == '1';
    }
  }
  return raster;
}

}  // namespace

BitRaster parse_mask(std::string_view bytes, MaskFormat format) {
  switch (format) {
    case MaskFormat::pbm_ascii: return parse_pbm(bytes, false);
    case MaskFormat::pbm_binary: return parse_pbm(bytes, true);
    case MaskFormat::ascii_grid: return parse_ascii_grid(bytes);
  }
  throw std::invalid_argument("unknown mask format");
}

MaskFormat detect_mask_format(std::string_view bytes) noexcept {
  if (bytes.substr(0, 2) == "P1") return MaskFormat::pbm_ascii;
  if (bytes.substr(0, 2) == "P4") return MaskFormat::pbm_binary;
  return MaskFormat::ascii_grid;
}

std::string write_mask(const BitRaster& raster, MaskFormat format) {
  const int width = raster.width();
  const int height = raster.height();
  std::string out;
  switch (format) {
    case MaskFormat::pbm_ascii: {
      out = "P1\n" + std::to_string(width) + " " + std::to_string(height) + "\n";
      // plain PBM lines stay within 70 characters
      for (int y = 0; y < height; ++y) {
        auto row = raster.row(y);
        for (int x = 0; x < width; ++x) {
          out.push_back(row[x] ? '1' : '0');
          if ((x + 1) % 70 == 0 && x + 1 < width) out.push_back('\n');
        }
        out.push_back('\n');
      }
      break;
    }
    case MaskFormat::pbm_binary: {
      out = "P4\n" + std::to_string(width) + " " + std::to_string(height) + "\n";
      const std::size_t stride = (static_cast<std::size_t>(width) + 7) / 8;
      const std::size_t header = out.size();
      out.resize(header + stride * static_cast<std::size_t>(height), '\0');
      for (int y = 0; y < height; ++y) {
        auto row = raster.row(y);
        auto* packed = reinterpret_cast<unsigned char*>(out.data() + header + y * stride);
        for (int x = 0; x < width; ++x) {
          if (row[x]) packed[x >> 3] |= static_cast<unsigned char>(0x80u >> (x & 7));
        }
      }
      break;
    }
    case MaskFormat::ascii_grid: {
      out.reserve(static_cast<std::size_t>(width + 1) * height);
      for (int y = 0; y < height; ++y) {
        for (auto cell : raster.row(y)) out.push_back(cell ? '1' : '0');
        out.push_back('\n');
      }
      break;
    }
  }
  return out;
}

}  // namespace orthopoly
