#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "orthopoly/raster.hpp"

namespace orthopoly {

// Point on the corner grid: (x, y) is the top-left corner of pixel (x, y).
struct GridPoint {
  std::int32_t x = 0;
  std::int32_t y = 0;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

// Vertices live in an arena; links are arena indices.
using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

// Snapshot of one arena entry.
struct Vertex {
  std::int32_t x = 0;  // corner column in [0, w]
  std::int32_t y = 0;  // corner row in [0, h]
  VertexId next = kNoVertex;
  bool visited = false;
};

// Circular vertex lists produced by one scan, stored column-wise so a ring
// walk streams only the `next` links. `corners` holds the start corners
// (vertices created by window cases 7, 8 and 9) in scan order; every list
// contains at least one of them.
struct DelineationResult {
  std::vector<GridPoint> points;
  std::vector<VertexId> next;
  std::vector<std::uint8_t> visited;
  std::vector<VertexId> corners;

  std::size_t vertex_count() const noexcept { return next.size(); }
  Vertex vertex(VertexId id) const { return {points[id].x, points[id].y, next[id], visited[id] != 0}; }
  VertexId add_vertex(const Vertex& v);
  void clear() noexcept;
};

// Broken open-vertex bookkeeping. Always a bug, never bad input.
class DelineationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// 2x2 window code centred on corner (x, y):
//   1*R(x-1,y-1) + 2*R(x,y-1) + 4*R(x-1,y) + 8*R(x,y)
int classify_window(const BitRaster& raster, int x, int y);

// Number of vertices a window case creates at its corner: 0, 1 or 2.
int vertices_for_case(int code) noexcept;

DelineationResult detect(const BitRaster& raster);

// Same as above, writing into `out` and reusing its storage.
void detect(const BitRaster& raster, DelineationResult& out);

// One line per vertex: "<index> <x> <y> <next> <start>", start is 0 or 1.
std::string dump_vertices(const DelineationResult& result);

}  // namespace orthopoly
