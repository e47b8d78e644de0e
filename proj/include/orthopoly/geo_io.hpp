#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "orthopoly/rings.hpp"
#include "orthopoly/timing_record.hpp"

namespace orthopoly {

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GeoJsonOptions {
  // Attached as a top-level "crs" member naming the coordinate system.
  std::optional<std::string> crs_name;
};

// Shortest decimal text that parses back to the same double ("1", "0.1", "-2.5e-07").
std::string format_number(double value);

// FeatureCollection with one Polygon feature per polygon, exterior first.
std::string write_geojson(const PolygonSet& polygons, const WorldRings& rings,
                          const GeoJsonOptions& options = {});

// FeatureCollection with one LineString feature per ring.
std::string write_geojson_rings(const WorldRings& rings, const GeoJsonOptions& options = {});

// POLYGON for exactly one polygon, MULTIPOLYGON otherwise, "MULTIPOLYGON EMPTY" for none.
std::string write_wkt(const PolygonSet& polygons, const WorldRings& rings);

// Header "size,p,trials,mean_seconds,stddev_seconds" then one line per record.
std::string write_timing_csv(std::span<const TimingRecord> rows);

}  // namespace orthopoly
