#include <gtest/gtest.h>

#include "orthopoly/verification.hpp"
#include "test_helpers.hpp"

using namespace orthopoly;
using namespace orthopoly::verify;
using orthopoly::testing::grid;
using orthopoly::testing::grid_rings;

TEST(BoundaryEdgesTest, Examples) {
  EXPECT_EQ(boundary_edges(grid({"1"})).size(), 4u);
  const auto pair = boundary_edges(grid({"11"}));
  EXPECT_EQ(pair.size(), 6u);
  EXPECT_FALSE(std::binary_search(pair.begin(), pair.end(), make_edge({1, 0}, {1, 1})));
  EXPECT_TRUE(boundary_edges(grid({"000", "000"})).empty());
  EXPECT_TRUE(boundary_edges(BitRaster(0, 0)).empty());
}

TEST(BoundaryEdgesTest, DiagonalPixelsKeepAllEightSides) {
  EXPECT_EQ(boundary_edges(grid({"10", "01"})).size(), 8u);
}

TEST(RingUnitEdgesTest, LongSegmentsAreSplit) {
  const auto edges = ring_unit_edges(grid_rings({{{0, 0}, {0, 2}, {3, 2}, {3, 0}, {0, 0}}}));
  EXPECT_EQ(edges.size(), 10u);
  EXPECT_TRUE(std::is_sorted(edges.begin(), edges.end()));
}

TEST(RasterizeTest, Examples) {
  EXPECT_EQ(rasterize_even_odd(grid_rings({{{0, 0}, {0, 1}, {1, 1}, {1, 0}, {0, 0}}}), 1, 1), grid({"1"}));
  EXPECT_EQ(rasterize_even_odd(GridRings{}, 3, 2), grid({"000", "000"}));

  const GridRings with_hole = grid_rings({
      {{0, 0}, {0, 3}, {3, 3}, {3, 0}, {0, 0}},
      {{1, 1}, {2, 1}, {2, 2}, {1, 2}, {1, 1}},
  });
  EXPECT_EQ(rasterize_even_odd(with_hole, 3, 3), grid({"111", "101", "111"}));
}

TEST(RasterizeTest, RingsPartlyOutsideCanvasAreClipped) {
  const GridRings big = grid_rings({{{-1, -1}, {-1, 5}, {5, 5}, {5, -1}, {-1, -1}}});
  EXPECT_EQ(rasterize_even_odd(big, 2, 2), grid({"11", "11"}));
}

TEST(RingViolationsTest, DetectsEachProblem) {
  using Coords = std::vector<GridPoint>;
  EXPECT_TRUE(ring_violations(Coords{{0, 0}, {0, 1}, {1, 1}, {1, 0}, {0, 0}}).empty());
  EXPECT_EQ(ring_violations(Coords{{0, 0}, {0, 1}, {1, 1}, {1, 0}}).size(), 1u);               // open
  EXPECT_EQ(ring_violations(Coords{{0, 0}, {1, 1}, {1, 0}, {0, 0}}).size(), 1u);               // diagonal
  EXPECT_EQ(ring_violations(Coords{{0, 0}, {0, 2}, {0, 1}, {1, 1}, {1, 0}, {0, 0}}).size(), 1u);  // reused edge
}
