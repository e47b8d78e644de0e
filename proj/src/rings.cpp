#include "orthopoly/rings.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace orthopoly {

std::int64_t twice_signed_area(std::span<const GridPoint> ring) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
    sum += static_cast<std::int64_t>(ring[i].x) * ring[i + 1].y -
           static_cast<std::int64_t>(ring[i + 1].x) * ring[i].y;
  }
  return sum;
}

double signed_area(std::span<const GridPoint> ring) { return 0.5 * static_cast<double>(twice_signed_area(ring)); }

std::vector<WorldPoint> to_world(std::span<const GridPoint> ring, const AffineTransform& transform) {
  std::vector<WorldPoint> out;
  out.reserve(ring.size());
  for (const GridPoint& p : ring) out.push_back(transform.apply(p.x, p.y));
  return out;
}

void GridRings::close_ring() {
  areas_.push_back(signed_area(open_ring()));
  end_points();
}

namespace {

int sign(std::int32_t v) { return (v > 0) - (v < 0); }

std::int64_t floor_div4(std::int64_t v) { return v >= 0 ? v / 4 : -((-v + 3) / 4); }

// b lies strictly inside the straight segment a-c.
bool is_pass_through(const GridPoint& a, const GridPoint& b, const GridPoint& c) {
  const std::int64_t ux = b.x - a.x, uy = b.y - a.y;
  const std::int64_t vx = c.x - b.x, vy = c.y - b.y;
  if (ux * vy - uy * vx != 0) return false;
  return ux * vx + uy * vy > 0;
}

}  // namespace

std::vector<GridPoint> collapse_collinear(std::span<const GridPoint> ring) {
  const std::vector<GridPoint> unchanged(ring.begin(), ring.end());
  if (ring.size() < 4) return unchanged;
  // open cycle without the closing duplicate, consecutive duplicates dropped
  std::vector<GridPoint> cycle;
  cycle.reserve(ring.size());
  for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
    if (cycle.empty() || cycle.back() != ring[i]) cycle.push_back(ring[i]);
  }
  while (cycle.size() > 1 && cycle.back() == cycle.front()) cycle.pop_back();
  const std::size_t n = cycle.size();
  if (n < 3) return unchanged;

  // start from a turning point so the wrap-around never needs revisiting
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_pass_through(cycle[(i + n - 1) % n], cycle[i], cycle[(i + 1) % n])) {
      start = i;
      break;
    }
  }
  if (start == n) return unchanged;

  std::vector<GridPoint> out;
  for (std::size_t k = 0; k < n; ++k) {
    const GridPoint& p = cycle[(start + k) % n];
    while (out.size() >= 2 && is_pass_through(out[out.size() - 2], out.back(), p)) out.pop_back();
    out.push_back(p);
  }
  while (out.size() >= 3 && is_pass_through(out[out.size() - 2], out.back(), out.front())) out.pop_back();
  out.push_back(out.front());
  return out;
}

RingSet form_rings(DelineationResult& result, const AffineTransform& transform, RingOptions options) {
  RingSet rings;
  form_rings(result, transform, options, rings);
  return rings;
}

void form_rings(DelineationResult& result, const AffineTransform& transform, RingOptions options, RingSet& rings) {
  rings.grid.clear();
  rings.world.clear();
  const std::size_t limit = result.vertex_count();
  if (result.points.size() != limit || result.visited.size() != limit) {
    throw CorruptRingError("vertex arena columns differ in length");
  }
  const VertexId* next = result.next.data();
  const GridPoint* points = result.points.data();
  std::uint8_t* visited = result.visited.data();

  for (const VertexId corner : result.corners) {
    if (corner >= limit) throw CorruptRingError("start corner " + std::to_string(corner) + " out of range");
    if (visited[corner]) continue;

    // visited flags bound the walk: every step reaches a fresh vertex or stops
    VertexId p = corner;
    do {
      if (visited[p]) throw CorruptRingError("vertex " + std::to_string(p) + " reached twice");
      visited[p] = 1;
      rings.grid.add_point(points[p]);
      const VertexId q = next[p];
      if (q >= limit) throw CorruptRingError("vertex list broken after vertex at (" + std::to_string(points[p].x) +
                                             "," + std::to_string(points[p].y) + ")");
      p = q;
    } while (p != corner);
    rings.grid.add_point(points[corner]);

    if (options.collapse_collinear) {
      const std::vector<GridPoint> merged = collapse_collinear(rings.grid.open_ring());
      rings.grid.discard_open_ring();
      for (const GridPoint& g : merged) rings.grid.add_point(g);
    }
    rings.grid.close_ring();
    for (const GridPoint& g : rings.grid.coords(rings.grid.size() - 1)) rings.world.add_point(transform.apply(g.x, g.y));
    rings.world.close_ring();
  }
}

namespace {

// Crossing index for one exterior ring: x of every vertical edge, bucketed by
// the grid row it spans, so a +x ray from any point at a half-row height is
// answered by binary search.
class RowCrossings {
 public:
  explicit RowCrossings(std::span<const GridPoint> c) {
    min_x_ = max_x_ = c.front().x;
    min_y_ = max_y_ = c.front().y;
    for (const GridPoint& p : c) {
      min_x_ = std::min(min_x_, p.x);
      max_x_ = std::max(max_x_, p.x);
      min_y_ = std::min(min_y_, p.y);
      max_y_ = std::max(max_y_, p.y);
    }
    const std::size_t rows = static_cast<std::size_t>(max_y_ - min_y_);
    offsets_.assign(rows + 1, 0);
    for_each_crossing(c, [&](std::int32_t row, std::int32_t) { ++offsets_[row - min_y_ + 1]; });
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    xs_.resize(offsets_.back());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for_each_crossing(c, [&](std::int32_t row, std::int32_t x) { xs_[fill[row - min_y_]++] = x; });
    for (std::size_t r = 0; r < rows; ++r) std::sort(xs_.begin() + offsets_[r], xs_.begin() + offsets_[r + 1]);
  }

  // Point given in quarter units; qy must not be a multiple of 4.
  bool contains_quarter(std::int64_t qx, std::int64_t qy) const {
    if (qx <= 4LL * min_x_ || qx >= 4LL * max_x_ || qy <= 4LL * min_y_ || qy >= 4LL * max_y_) return false;
    const std::size_t r = static_cast<std::size_t>(floor_div4(qy) - min_y_);
    const auto first = xs_.begin() + offsets_[r];
    const auto last = xs_.begin() + offsets_[r + 1];
    const auto right = std::upper_bound(first, last, qx, [](std::int64_t q, std::int32_t x) { return q < 4LL * x; });
    return ((last - right) & 1) != 0;
  }

  std::int32_t min_x() const { return min_x_; }
  std::int32_t max_x() const { return max_x_; }
  std::int32_t min_y() const { return min_y_; }
  std::int32_t max_y() const { return max_y_; }

 private:
  template <typename Fn>
  static void for_each_crossing(std::span<const GridPoint> c, Fn&& fn) {
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      if (c[i].x != c[i + 1].x) continue;
      const auto [lo, hi] = std::minmax(c[i].y, c[i + 1].y);
      for (std::int32_t row = lo; row < hi; ++row) fn(row, c[i].x);
    }
  }

  std::int32_t min_x_ = 0, max_x_ = 0, min_y_ = 0, max_y_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<std::int32_t> xs_;
};

constexpr std::int32_t kCellSize = 32;

std::int32_t cell_of(std::int32_t v, std::int32_t origin) { return (v - origin) / kCellSize; }

}  // namespace

PolygonSet assemble_polygons(const GridRings& rings) {
  PolygonSet set;
  std::vector<std::size_t> outer_rings;
  std::vector<std::size_t> hole_rings;
  for (std::size_t i = 0; i < rings.size(); ++i) {
    const GridRing ring = rings[i];
    if (ring.coords.size() < 2 || ring.coords.front() != ring.coords.back()) {
      throw TopologyError("ring " + std::to_string(i) + " is not closed", i);
    }
    const std::int64_t area2 = twice_signed_area(ring.coords);
    if (area2 < 0) {
      outer_rings.push_back(i);
    } else if (area2 > 0) {
      hole_rings.push_back(i);
    } else {
      throw TopologyError("ring " + std::to_string(i) + " has zero area", i);
    }
  }
  if (hole_rings.empty()) {
    for (std::size_t i : outer_rings) set.polygons.push_back({i, {}});
    return set;
  }
  if (outer_rings.empty()) throw TopologyError("hole ring " + std::to_string(hole_rings.front()) +
                                                   " has no exterior", hole_rings.front());

  std::vector<RowCrossings> index;
  index.reserve(outer_rings.size());
  std::int32_t gx0 = 0, gy0 = 0, gx1 = 0, gy1 = 0;
  for (std::size_t k = 0; k < outer_rings.size(); ++k) {
    index.emplace_back(rings.coords(outer_rings[k]));
    const RowCrossings& r = index.back();
    if (k == 0) {
      gx0 = r.min_x(), gy0 = r.min_y(), gx1 = r.max_x(), gy1 = r.max_y();
    } else {
      gx0 = std::min(gx0, r.min_x()), gy0 = std::min(gy0, r.min_y());
      gx1 = std::max(gx1, r.max_x()), gy1 = std::max(gy1, r.max_y());
    }
  }

  // Exteriors bucketed by the grid cells their bounding boxes overlap, each
  // bucket in ascending |area| so the first hit is the smallest container.
  std::vector<std::size_t> by_area(outer_rings.size());
  std::iota(by_area.begin(), by_area.end(), std::size_t{0});
  std::stable_sort(by_area.begin(), by_area.end(), [&](std::size_t l, std::size_t r) {
    return rings[outer_rings[l]].signed_area > rings[outer_rings[r]].signed_area;
  });
  const std::int32_t cols = cell_of(gx1, gx0) + 1;
  const std::int32_t rows = cell_of(gy1, gy0) + 1;
  std::vector<std::vector<std::uint32_t>> cells(static_cast<std::size_t>(cols) * rows);
  for (std::size_t k : by_area) {
    const RowCrossings& r = index[k];
    for (std::int32_t cy = cell_of(r.min_y(), gy0); cy <= cell_of(r.max_y(), gy0); ++cy) {
      for (std::int32_t cx = cell_of(r.min_x(), gx0); cx <= cell_of(r.max_x(), gx0); ++cx) {
        cells[static_cast<std::size_t>(cy) * cols + cx].push_back(static_cast<std::uint32_t>(k));
      }
    }
  }

  std::vector<Polygon> polygons;
  polygons.reserve(outer_rings.size());
  for (std::size_t i : outer_rings) polygons.push_back({i, {}});

  for (std::size_t hole : hole_rings) {
    const std::span<const GridPoint> c = rings.coords(hole);
    const std::int32_t dx = sign(c[1].x - c[0].x);
    const std::int32_t dy = sign(c[1].y - c[0].y);
    // midpoint of the first unit step, nudged a quarter unit to its left,
    // which is the inside of a positive-area ring
    const std::int64_t qx = 4LL * c[0].x + 2 * dx - dy;
    const std::int64_t qy = 4LL * c[0].y + 2 * dy + dx;

    bool placed = false;
    if (qx > 4LL * gx0 && qx < 4LL * gx1 && qy > 4LL * gy0 && qy < 4LL * gy1) {
      const auto px = static_cast<std::int32_t>(floor_div4(qx));
      const auto py = static_cast<std::int32_t>(floor_div4(qy));
      for (std::uint32_t k : cells[static_cast<std::size_t>(cell_of(py, gy0)) * cols + cell_of(px, gx0)]) {
        if (index[k].contains_quarter(qx, qy)) {
          polygons[k].holes.push_back(hole);
          placed = true;
          break;
        }
      }
    }
    if (!placed) throw TopologyError("hole ring " + std::to_string(hole) + " lies inside no exterior ring", hole);
  }

  set.polygons = std::move(polygons);
  return set;
}

PolygonSet rings_as_polygons(std::size_t ring_count) {
  PolygonSet set;
  set.polygons.reserve(ring_count);
  for (std::size_t i = 0; i < ring_count; ++i) set.polygons.push_back({i, {}});
  return set;
}

}  // namespace orthopoly
