#pragma once

// Row-level data-parallel kernels. Every kernel has a scalar reference
// version; vector versions must produce identical output and are picked at
// runtime from what the CPU supports.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace orthopoly::kernels {

// Writes the 2x2 window code for the width+1 corners of one corner row:
//   code[x] = 1*above[x-1] + 2*above[x] + 4*below[x-1] + 8*below[x]
// with columns -1 and width reading as 0. `above` and `below` hold width
// bytes of 0/1 each; pass a zero row for rows outside the raster.
using ClassifyRowFn = void (*)(const std::uint8_t* above, const std::uint8_t* below,
                               std::size_t width, std::uint8_t* codes);

// Number of nonzero bytes in a 0/1 buffer.
using CountMarkedFn = std::size_t (*)(const std::uint8_t* cells, std::size_t n);

// Sum over n window codes (each < 16) of the vertices each case creates:
// one for 1, 2, 4, 7, 8, 11, 13, 14; two for 6 and 9; none otherwise.
using CountVerticesFn = std::size_t (*)(const std::uint8_t* codes, std::size_t n);

void classify_row_scalar(const std::uint8_t* above, const std::uint8_t* below,
                         std::size_t width, std::uint8_t* codes);
std::size_t count_marked_scalar(const std::uint8_t* cells, std::size_t n);
std::size_t count_vertices_scalar(const std::uint8_t* codes, std::size_t n);

#if defined(ORTHOPOLY_HAVE_AVX2)
void classify_row_avx2(const std::uint8_t* above, const std::uint8_t* below,
                       std::size_t width, std::uint8_t* codes);
std::size_t count_marked_avx2(const std::uint8_t* cells, std::size_t n);
std::size_t count_vertices_avx2(const std::uint8_t* codes, std::size_t n);
#endif

#if defined(ORTHOPOLY_HAVE_NEON)
void classify_row_neon(const std::uint8_t* above, const std::uint8_t* below,
                       std::size_t width, std::uint8_t* codes);
std::size_t count_marked_neon(const std::uint8_t* cells, std::size_t n);
std::size_t count_vertices_neon(const std::uint8_t* codes, std::size_t n);
#endif

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa) noexcept;

// Best variant this CPU can run.
Isa detected_isa() noexcept;

// Variant currently used by the library. Starts as detected_isa() unless the
// ORTHOPOLY_ISA environment variable names a supported one ("scalar", ...).
Isa active_isa() noexcept;

// Returns false (and changes nothing) if the CPU cannot run `isa`.
bool set_active_isa(Isa isa) noexcept;

bool isa_supported(Isa isa) noexcept;

ClassifyRowFn classify_row();
CountMarkedFn count_marked();
CountVerticesFn count_vertices();

ClassifyRowFn classify_row_for(Isa isa);
CountMarkedFn count_marked_for(Isa isa);
CountVerticesFn count_vertices_for(Isa isa);

}  // namespace orthopoly::kernels
