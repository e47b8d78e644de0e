#include "orthopoly/verification.hpp"

#include <algorithm>

namespace orthopoly::verify {

UnitEdge make_edge(GridPoint p, GridPoint q) { return p < q ? UnitEdge{p, q} : UnitEdge{q, p}; }

std::vector<UnitEdge> boundary_edges(const BitRaster& raster) {
  std::vector<UnitEdge> edges;
  for (int y = 0; y < raster.height(); ++y) {
    for (int x = 0; x < raster.width(); ++x) {
      if (!raster.get(x, y)) continue;
      if (!raster.get(x, y - 1)) edges.push_back(make_edge({x, y}, {x + 1, y}));
      if (!raster.get(x, y + 1)) edges.push_back(make_edge({x, y + 1}, {x + 1, y + 1}));
      if (!raster.get(x - 1, y)) edges.push_back(make_edge({x, y}, {x, y + 1}));
      if (!raster.get(x + 1, y)) edges.push_back(make_edge({x + 1, y}, {x + 1, y + 1}));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

namespace {

// Unit steps of one straight segment; empty for a diagonal or zero move.
template <typename Fn>
bool for_each_unit(GridPoint p, GridPoint q, Fn&& fn) {
  if (p.x != q.x && p.y != q.y) return false;
  const std::int32_t dx = (q.x > p.x) - (q.x < p.x);
  const std::int32_t dy = (q.y > p.y) - (q.y < p.y);
  while (p != q) {
    const GridPoint n{p.x + dx, p.y + dy};
    fn(p, n);
    p = n;
  }
  return true;
}

}  // namespace

std::vector<UnitEdge> ring_unit_edges(const GridRings& rings) {
  std::vector<UnitEdge> edges;
  for (const GridRing& ring : rings) {
    for (std::size_t i = 0; i + 1 < ring.coords.size(); ++i) {
      for_each_unit(ring.coords[i], ring.coords[i + 1],
                    [&](GridPoint a, GridPoint b) { edges.push_back(make_edge(a, b)); });
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

BitRaster rasterize_even_odd(const GridRings& rings, int width, int height) {
  BitRaster out(width, height);
  std::vector<std::vector<std::int32_t>> crossings(static_cast<std::size_t>(height));
  for (const GridRing& ring : rings) {
    for (std::size_t i = 0; i + 1 < ring.coords.size(); ++i) {
      const GridPoint p = ring.coords[i];
      const GridPoint q = ring.coords[i + 1];
      if (p.x != q.x) continue;  // horizontal edges never meet a ray at y + 0.5
      const auto [lo, hi] = std::minmax(p.y, q.y);
      for (std::int32_t row = std::max(lo, 0); row < std::min(hi, height); ++row) {
        crossings[row].push_back(p.x);
      }
    }
  }
  for (int y = 0; y < height; ++y) {
    auto& xs = crossings[y];
    std::sort(xs.begin(), xs.end());
    for (int x = 0; x < width; ++x) {
      // edges at integer column c are crossed by the ray from x + 0.5 iff c > x
      const auto right = xs.end() - std::upper_bound(xs.begin(), xs.end(), x);
      if (right % 2 == 1) out.set(x, y, true);
    }
  }
  return out;
}

std::vector<std::string> ring_violations(std::span<const GridPoint> c) {
  std::vector<std::string> problems;
  if (c.size() < 2 || c.front() != c.back()) problems.emplace_back("ring is not closed");
  std::vector<UnitEdge> edges;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (c[i] == c[i + 1]) {
      problems.push_back("zero-length step at index " + std::to_string(i));
      continue;
    }
    const bool straight = for_each_unit(c[i], c[i + 1], [&](GridPoint a, GridPoint b) { edges.push_back(make_edge(a, b)); });
    if (!straight) problems.push_back("diagonal step at index " + std::to_string(i));
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) problems.emplace_back("unit edge used twice");
  return problems;
}

}  // namespace orthopoly::verify
