#include "orthopoly/affine.hpp"

#include <array>
#include <charconv>
#include <vector>

namespace orthopoly {

AffineTransform AffineTransform::create(double a, double b, double c, double d, double e, double f) {
  AffineTransform t{a, b, c, d, e, f};
  if (t.is_degenerate()) throw std::invalid_argument("degenerate affine transform (a*e - b*d == 0)");
  return t;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\f\v");
  return s.substr(first, last - first + 1);
}

}  // namespace

AffineTransform parse_world_file(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(trim(text.substr(start, end - start)));
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() != 6) {
    throw WorldFileError("world file must have 6 lines, found " + std::to_string(lines.size()));
  }

  std::array<double, 6> v{};
  for (std::size_t i = 0; i < 6; ++i) {
    const auto line = lines[i];
    const char* first = line.data();
    const char* last = line.data() + line.size();
    if (!line.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v[i]);
    if (line.empty() || ec != std::errc() || ptr != last) {
      throw WorldFileError("world file line " + std::to_string(i + 1) + " is not a number: '" +
                           std::string(line) + "'");
    }
  }

  // file order: A, D, B, E, C, F
  const double a = v[0], d = v[1], b = v[2], e = v[3], c = v[4], f = v[5];
  AffineTransform t{a, b, c - 0.5 * (a + b), d, e, f - 0.5 * (d + e)};
  if (t.is_degenerate()) throw WorldFileError("world file describes a degenerate transform");
  return t;
}

}  // namespace orthopoly
