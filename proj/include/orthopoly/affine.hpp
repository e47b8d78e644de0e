#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace orthopoly {

struct WorldPoint {
  double lon = 0.0;
  double lat = 0.0;
  friend bool operator==(const WorldPoint&, const WorldPoint&) = default;
};

// Grid-to-world map from integer pixel-corner coordinates:
//   lon = a*x + b*y + c
//   lat = d*x + e*y + f
struct AffineTransform {
  double a = 1.0, b = 0.0, c = 0.0;
  double d = 0.0, e = 1.0, f = 0.0;

  static constexpr AffineTransform identity() noexcept { return {}; }

  // Throws std::invalid_argument when a*e - b*d == 0.
  static AffineTransform create(double a, double b, double c, double d, double e, double f);

  double determinant() const noexcept { return a * e - b * d; }
  bool is_degenerate() const noexcept { return std::abs(determinant()) == 0.0; }

  WorldPoint apply(double x, double y) const noexcept {
    return {a * x + b * y + c, d * x + e * y + f};
  }

  friend bool operator==(const AffineTransform&, const AffineTransform&) = default;
};

class WorldFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ESRI world file: six numeric lines A, D, B, E, C, F where (C, F) is the
// CENTER of pixel (0,0). The returned transform addresses pixel corners, so
// c = C - (A+B)/2 and f = F - (D+E)/2.
AffineTransform parse_world_file(std::string_view text);

}  // namespace orthopoly
