#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <stdexcept>
#include <vector>

#include "orthopoly/affine.hpp"
#include "orthopoly/delineator.hpp"

namespace orthopoly {

// Closed ring on the corner grid (first == last). signed_area is the
// shoelace area in y-down grid axes: exteriors are negative, holes positive.
struct GridRing {
  std::span<const GridPoint> coords;
  double signed_area = 0.0;
};

struct WorldRing {
  std::span<const WorldPoint> coords;
};

// Rings stored back to back in one buffer. Indexing yields views that stay
// valid until the container is next modified.
template <class Derived, class Point, class Ring>
class PackedRings {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Ring;
    using difference_type = std::ptrdiff_t;
    using reference = Ring;
    using pointer = void;

    iterator() = default;
    iterator(const Derived* rings, std::size_t i) : rings_(rings), i_(i) {}
    Ring operator*() const { return (*rings_)[i_]; }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++i_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.i_ == b.i_; }

   private:
    const Derived* rings_ = nullptr;
    std::size_t i_ = 0;
  };

  std::size_t size() const noexcept { return offsets_.size() - 1; }
  bool empty() const noexcept { return size() == 0; }
  iterator begin() const { return {static_cast<const Derived*>(this), 0}; }
  iterator end() const { return {static_cast<const Derived*>(this), size()}; }

  std::span<const Point> coords(std::size_t i) const {
    return std::span<const Point>(points_).subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
  }

  // Every ring's points, concatenated.
  std::span<const Point> points() const noexcept { return points_; }

  void push_back(std::span<const Point> ring) {
    points_.insert(points_.end(), ring.begin(), ring.end());
    static_cast<Derived*>(this)->close_ring();
  }

  // Incremental push_back: add points, then close_ring() ends the ring.
  void add_point(const Point& p) { points_.push_back(p); }
  std::span<const Point> open_ring() const noexcept { return std::span<const Point>(points_).subspan(offsets_.back()); }
  void discard_open_ring() { points_.resize(offsets_.back()); }

 protected:
  void clear_points() noexcept {
    points_.clear();
    offsets_.resize(1);
  }
  void end_points() { offsets_.push_back(points_.size()); }

 private:
  std::vector<Point> points_;
  std::vector<std::size_t> offsets_{0};
};

class GridRings : public PackedRings<GridRings, GridPoint, GridRing> {
 public:
  GridRing operator[](std::size_t i) const { return {coords(i), areas_[i]}; }
  void close_ring();
  void clear() noexcept {
    clear_points();
    areas_.clear();
  }

 private:
  std::vector<double> areas_;
};

class WorldRings : public PackedRings<WorldRings, WorldPoint, WorldRing> {
 public:
  WorldRing operator[](std::size_t i) const { return {coords(i)}; }
  void close_ring() { end_points(); }
  void clear() noexcept { clear_points(); }
};

struct RingSet {
  GridRings grid;
  WorldRings world;  // world[i] is grid[i] through the transform
};

struct RingOptions {
  // Drop vertices lying in the middle of a straight run. Geometry is unchanged.
  bool collapse_collinear = false;
};

// A list that does not return to its start within vertex_count() steps.
class CorruptRingError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Walks every unvisited start corner's circular list once, marking vertices
// visited. Rings come out in start-corner (scan) order.
RingSet form_rings(DelineationResult& result, const AffineTransform& transform, RingOptions options = {});

// Same as above, overwriting `out` and reusing the storage of its rings.
void form_rings(DelineationResult& result, const AffineTransform& transform, RingOptions options, RingSet& out);

// Twice the shoelace area, exact in integer arithmetic.
std::int64_t twice_signed_area(std::span<const GridPoint> ring);
double signed_area(std::span<const GridPoint> ring);

std::vector<GridPoint> collapse_collinear(std::span<const GridPoint> ring);

std::vector<WorldPoint> to_world(std::span<const GridPoint> ring, const AffineTransform& transform);

// Polygons refer to rings by index into the ring list they were built from.
struct Polygon {
  std::size_t outer = 0;
  std::vector<std::size_t> holes;
};

struct PolygonSet {
  std::vector<Polygon> polygons;
};

class TopologyError : public std::runtime_error {
 public:
  TopologyError(const std::string& message, std::size_t ring) : std::runtime_error(message), ring_(ring) {}
  std::size_t ring() const noexcept { return ring_; }

 private:
  std::size_t ring_;
};

// Negative-area rings become exteriors, in input order. Each positive-area
// ring (hole) goes to the smallest exterior containing a point a quarter unit
// inside its first edge.
PolygonSet assemble_polygons(const GridRings& rings);

// Every ring as its own polygon without holes.
PolygonSet rings_as_polygons(std::size_t ring_count);

}  // namespace orthopoly
