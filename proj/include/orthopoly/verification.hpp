#pragma once

// Brute-force oracles for checking the delineation pipeline. They share no
// code with detect/form_rings beyond the raster and ring types.

#include <span>
#include <string>
#include <vector>

#include "orthopoly/raster.hpp"
#include "orthopoly/rings.hpp"

namespace orthopoly::verify {

// Undirected unit segment on the corner grid, stored with a < b.
struct UnitEdge {
  GridPoint a;
  GridPoint b;
  friend auto operator<=>(const UnitEdge&, const UnitEdge&) = default;
};

UnitEdge make_edge(GridPoint p, GridPoint q);

// Sorted, duplicate-free sides separating a marked pixel from an unmarked or
// out-of-bounds one.
std::vector<UnitEdge> boundary_edges(const BitRaster& raster);

// All unit edges of the rings, sorted, duplicates kept.
std::vector<UnitEdge> ring_unit_edges(const GridRings& rings);

// Pixel (x, y) is marked iff the +x ray from (x+0.5, y+0.5) crosses the ring
// edges an odd number of times.
BitRaster rasterize_even_odd(const GridRings& rings, int width, int height);

// Empty when the ring is closed, moves along axes only and never reuses a
// unit edge; otherwise one message per violation.
std::vector<std::string> ring_violations(std::span<const GridPoint> ring);

}  // namespace orthopoly::verify
