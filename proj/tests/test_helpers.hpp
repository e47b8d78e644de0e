#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "orthopoly/delineator.hpp"
#include "orthopoly/raster.hpp"
#include "orthopoly/rings.hpp"

namespace orthopoly::testing {

// Rows of '0'/'1', top row first.
inline BitRaster grid(std::initializer_list<const char*> rows) {
  std::string text;
  for (const char* r : rows) (text += r) += '\n';
  return parse_mask(text, MaskFormat::ascii_grid);
}

inline std::vector<Vertex> vertices_of(const DelineationResult& d) {
  std::vector<Vertex> out;
  for (VertexId i = 0; i < d.vertex_count(); ++i) out.push_back(d.vertex(i));
  return out;
}

inline DelineationResult arena(std::initializer_list<Vertex> vertices, std::vector<VertexId> corners) {
  DelineationResult d;
  for (const Vertex& v : vertices) d.add_vertex(v);
  d.corners = std::move(corners);
  return d;
}

template <class P>
std::vector<P> to_vector(std::span<const P> s) {
  return {s.begin(), s.end()};
}

inline GridRings grid_rings(std::initializer_list<std::vector<GridPoint>> rings) {
  GridRings out;
  for (const auto& r : rings) out.push_back(r);
  return out;
}

inline WorldRings world_rings(std::initializer_list<std::vector<WorldPoint>> rings) {
  WorldRings out;
  for (const auto& r : rings) out.push_back(r);
  return out;
}

}  // namespace orthopoly::testing
