#include "orthopoly/geo_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace orthopoly {

std::string format_number(double value) {
  if (!std::isfinite(value)) throw GeometryError("non-finite coordinate");
  if (value == 0.0) return "0";  // also folds -0
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

namespace {

WorldRing checked_ring(const WorldRings& rings, std::size_t index) {
  if (index >= rings.size()) throw GeometryError("polygon refers to missing ring " + std::to_string(index));
  const WorldRing ring = rings[index];
  if (ring.coords.size() < 2 || ring.coords.front() != ring.coords.back()) {
    throw GeometryError("ring " + std::to_string(index) + " is not closed");
  }
  return ring;
}

void append_position_array(std::string& out, const WorldRing& ring) {
  out += '[';
  for (std::size_t i = 0; i < ring.coords.size(); ++i) {
    if (i) out += ',';
    out += '[';
    out += format_number(ring.coords[i].lon);
    out += ',';
    out += format_number(ring.coords[i].lat);
    out += ']';
  }
  out += ']';
}

void append_json_string(std::string& out, const std::string& s) {
  out += '"';
  for (const char ch : s) {
    const auto c = static_cast<unsigned char>(ch);
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char esc[8];
          std::snprintf(esc, sizeof esc, "\\u%04x", c);
          out += esc;
        } else {
          out += ch;
        }
    }
  }
  out += '"';
}

std::string open_collection(const GeoJsonOptions& options) {
  std::string out = "{\"type\":\"FeatureCollection\",";
  if (options.crs_name) {
    out += "\"crs\":{\"type\":\"name\",\"properties\":{\"name\":";
    append_json_string(out, *options.crs_name);
    out += "}},";
  }
  out += "\"features\":[";
  return out;
}

void append_wkt_ring(std::string& out, const WorldRing& ring) {
  out += '(';
  for (std::size_t i = 0; i < ring.coords.size(); ++i) {
    if (i) out += ", ";
    out += format_number(ring.coords[i].lon);
    out += ' ';
    out += format_number(ring.coords[i].lat);
  }
  out += ')';
}

void append_wkt_polygon(std::string& out, const Polygon& polygon, const WorldRings& rings) {
  out += '(';
  append_wkt_ring(out, checked_ring(rings, polygon.outer));
  for (std::size_t hole : polygon.holes) {
    out += ", ";
    append_wkt_ring(out, checked_ring(rings, hole));
  }
  out += ')';
}

}  // namespace

std::string write_geojson(const PolygonSet& polygons, const WorldRings& rings,
                          const GeoJsonOptions& options) {
  std::string out = open_collection(options);
  for (std::size_t i = 0; i < polygons.polygons.size(); ++i) {
    const Polygon& polygon = polygons.polygons[i];
    if (i) out += ',';
    out += "{\"type\":\"Feature\",\"properties\":{},\"geometry\":{\"type\":\"Polygon\",\"coordinates\":[";
    append_position_array(out, checked_ring(rings, polygon.outer));
    for (std::size_t hole : polygon.holes) {
      out += ',';
      append_position_array(out, checked_ring(rings, hole));
    }
    out += "]}}";
  }
  out += "]}";
  return out;
}

std::string write_geojson_rings(const WorldRings& rings, const GeoJsonOptions& options) {
  std::string out = open_collection(options);
  for (std::size_t i = 0; i < rings.size(); ++i) {
    if (i) out += ',';
    out += "{\"type\":\"Feature\",\"properties\":{},\"geometry\":{\"type\":\"LineString\",\"coordinates\":";
    append_position_array(out, checked_ring(rings, i));
    out += "}}";
  }
  out += "]}";
  return out;
}

std::string write_wkt(const PolygonSet& polygons, const WorldRings& rings) {
  const auto& list = polygons.polygons;
  if (list.empty()) return "MULTIPOLYGON EMPTY";
  std::string out;
  if (list.size() == 1) {
    out = "POLYGON ";
    append_wkt_polygon(out, list.front(), rings);
    return out;
  }
  out = "MULTIPOLYGON (";
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out += ", ";
    append_wkt_polygon(out, list[i], rings);
  }
  out += ')';
  return out;
}

std::string write_timing_csv(std::span<const TimingRecord> rows) {
  std::string out = "size,p,trials,mean_seconds,stddev_seconds\n";
  for (const TimingRecord& r : rows) {
    out += std::to_string(r.size);
    out += ',';
    out += format_number(r.p);
    out += ',';
    out += std::to_string(r.trials);
    out += ',';
    out += format_number(r.mean_seconds);
    out += ',';
    out += format_number(r.stddev_seconds);
    out += '\n';
  }
  return out;
}

}  // namespace orthopoly
