#include "orthopoly/delineator.hpp"

#include <array>
#include <sstream>

#include "orthopoly/kernels.hpp"

namespace orthopoly {

VertexId DelineationResult::add_vertex(const Vertex& v) {
  if (next.size() >= kNoVertex) throw std::length_error("too many vertices for 32-bit ids");
  points.push_back({v.x, v.y});
  next.push_back(v.next);
  visited.push_back(v.visited ? 1 : 0);
  return static_cast<VertexId>(next.size() - 1);
}

void DelineationResult::clear() noexcept {
  points.clear();
  next.clear();
  visited.clear();
  corners.clear();
}

int classify_window(const BitRaster& raster, int x, int y) {
  return (raster.get(x - 1, y - 1) ? 1 : 0) | (raster.get(x, y - 1) ? 2 : 0) |
         (raster.get(x - 1, y) ? 4 : 0) | (raster.get(x, y) ? 8 : 0);
}

int vertices_for_case(int code) noexcept {
  static constexpr std::array<int, 16> kCount = {0, 1, 1, 0, 1, 0, 2, 1, 1, 2, 0, 1, 0, 1, 1, 0};
  return (code >= 0 && code < 16) ? kCount[code] : 0;
}

namespace {

// Open-vertex state of the scan: one pending vertex to the left in the
// current corner row, and one pending vertex above each corner column.
class Scanner {
 public:
  // `out` arrays are pre-sized to the exact vertex count.
  Scanner(DelineationResult& out, int width)
      : out_(out), top_(static_cast<std::size_t>(width) + 1, kNoVertex), capacity_(out.next.size()) {}

  void handle(int code, std::int32_t x, std::int32_t y) {
    switch (code) {
      case 0: case 3: case 5: case 10: case 12: case 15:
        break;
      case 1: {  // left -> v -> top
        const VertexId v = make(x, y, take_top(x));
        link(take_left(), v);
        break;
      }
      case 2: {  // top -> v, v waits for a vertex to the right
        const VertexId v = make(x, y, kNoVertex);
        link(take_top(x), v);
        put_left(v);
        break;
      }
      case 4: {  // v -> left, v waits for a vertex below
        put_top(x, make(x, y, take_left()));
        break;
      }
      case 6: {  // cases 2 and 4 at the same corner
        const VertexId v1 = make(x, y, kNoVertex);
        link(take_top(x), v1);
        const VertexId v2 = make(x, y, take_left());
        put_top(x, v2);
        put_left(v1);
        break;
      }
      case 7:
      case 8: {
        start_corner(x, y);
        break;
      }
      case 9: {  // case 1 closes the upper-left region, case 8 opens the lower-right one
        const VertexId v1 = make(x, y, take_top(x));
        link(take_left(), v1);
        start_corner(x, y);
        break;
      }
      case 11: {  // left -> v, v waits for a vertex below
        const VertexId v = make(x, y, kNoVertex);
        link(take_left(), v);
        put_top(x, v);
        break;
      }
      case 13: {  // v -> top, v waits for a vertex to the right
        put_left(make(x, y, take_top(x)));
        break;
      }
      case 14: {  // top -> v -> left
        const VertexId v = make(x, y, take_left());
        link(take_top(x), v);
        break;
      }
      default:
        throw DelineationError("window code out of range: " + std::to_string(code));
    }
  }

  void end_row(std::int32_t y) const {
    if (left_ != kNoVertex) throw DelineationError("open left vertex at end of corner row " + std::to_string(y));
  }

  void finish() const {
    if (size_ != capacity_) throw DelineationError("vertex count falls short of the sizing pass");
    for (std::size_t x = 0; x < top_.size(); ++x) {
      if (top_[x] != kNoVertex) throw DelineationError("open top vertex left in column " + std::to_string(x));
    }
  }

 private:
  VertexId make(std::int32_t x, std::int32_t y, VertexId next) {
    if (size_ == capacity_) throw DelineationError("vertex count exceeds the sizing pass");
    out_.points[size_] = {x, y};
    out_.next[size_] = next;
    return size_++;
  }

  void start_corner(std::int32_t x, std::int32_t y) {
    const VertexId v = make(x, y, kNoVertex);
    put_top(x, v);
    put_left(v);
    out_.corners.push_back(v);
  }

  void link(VertexId from, VertexId to) {
    VertexId& next = out_.next[from];
    if (next != kNoVertex) throw DelineationError("vertex " + std::to_string(from) + " linked twice");
    next = to;
  }

  VertexId take_top(std::int32_t x) {
    const VertexId v = top_[x];
    if (v == kNoVertex) throw DelineationError("no open top vertex in column " + std::to_string(x));
    top_[x] = kNoVertex;
    return v;
  }

  VertexId take_left() {
    const VertexId v = left_;
    if (v == kNoVertex) throw DelineationError("no open left vertex");
    left_ = kNoVertex;
    return v;
  }

  void put_top(std::int32_t x, VertexId v) {
    if (top_[x] != kNoVertex) throw DelineationError("column " + std::to_string(x) + " already has an open vertex");
    top_[x] = v;
  }

  void put_left(VertexId v) {
    if (left_ != kNoVertex) throw DelineationError("row already has an open left vertex");
    left_ = v;
  }

  DelineationResult& out_;
  std::vector<VertexId> top_;
  VertexId left_ = kNoVertex;
  VertexId size_ = 0;
  std::size_t capacity_ = 0;
};

// Bit c set when window code c creates at least one vertex.
constexpr std::uint32_t kActiveCases = 0b0110'1011'1101'0110;

}  // namespace

DelineationResult detect(const BitRaster& raster) {
  DelineationResult result;
  detect(raster, result);
  return result;
}

void detect(const BitRaster& raster, DelineationResult& result) {
  result.clear();
  const int width = raster.width();
  const int height = raster.height();
  if (width == 0 || height == 0) return;

  const std::vector<std::uint8_t> zero_row(static_cast<std::size_t>(width), 0);
  std::vector<std::uint8_t> codes(static_cast<std::size_t>(width) + 1);
  const kernels::ClassifyRowFn classify = kernels::classify_row();
  const kernels::CountVerticesFn count_vertices = kernels::count_vertices();
  auto classify_corner_row = [&](int y) {
    const std::uint8_t* above = y > 0 ? raster.row(y - 1).data() : zero_row.data();
    const std::uint8_t* below = y < height ? raster.row(y).data() : zero_row.data();
    classify(above, below, static_cast<std::size_t>(width), codes.data());
  };

  // sizing pass so the arena is allocated once
  std::size_t total = 0;
  for (int y = 0; y <= height; ++y) {
    classify_corner_row(y);
    total += count_vertices(codes.data(), codes.size());
  }
  if (total >= kNoVertex) throw std::length_error("too many vertices for 32-bit ids");
  result.points.resize(total);
  result.next.resize(total);
  result.visited.assign(total, 0);

  Scanner scanner(result, width);
  for (int y = 0; y <= height; ++y) {
    classify_corner_row(y);
    for (int x = 0; x <= width; ++x) {
      const int code = codes[x];
      if ((kActiveCases >> code) & 1u) scanner.handle(code, x, y);
    }
    scanner.end_row(y);
  }
  scanner.finish();
}

std::string dump_vertices(const DelineationResult& result) {
  std::vector<bool> is_start(result.vertex_count(), false);
  for (VertexId c : result.corners) is_start[c] = true;
  std::ostringstream out;
  for (VertexId i = 0; i < result.vertex_count(); ++i) {
    const Vertex v = result.vertex(i);
    out << i << ' ' << v.x << ' ' << v.y << ' ';
    if (v.next == kNoVertex) {
      out << -1;
    } else {
      out << v.next;
    }
    out << ' ' << (is_start[i] ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace orthopoly
