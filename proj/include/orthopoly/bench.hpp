#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "orthopoly/affine.hpp"
#include "orthopoly/delineator.hpp"
#include "orthopoly/rings.hpp"
#include "orthopoly/raster.hpp"
#include "orthopoly/timing_record.hpp"

namespace orthopoly::bench {

struct ExperimentConfig {
  std::vector<int> sizes{250, 500, 1000};
  int p_steps = 11;
  int trials = 10;
  std::uint64_t seed = 20200101;
  bool warm_up = true;
  AffineTransform transform = AffineTransform::identity();
  // Called after each (size, p) point finishes; may be empty.
  std::function<void(const TimingRecord&)> on_record;
};

// Sizes 1000/2000/4000, 11 p-values, 100 trials per point.
ExperimentConfig full_scale_config();

// p_i = i / (steps - 1) for i in [0, steps).
std::vector<double> p_grid(int steps);

// Per-trial workload seed: seed XOR splitmix64-chain(size, bits(p), trial).
std::uint64_t trial_seed(std::uint64_t seed, int size, double p, std::uint64_t trial);

struct PipelineTiming {
  double detect_seconds = 0.0;
  double form_seconds = 0.0;
  std::size_t vertices = 0;
  std::size_t rings = 0;
};

// Storage carried between timed runs so steady-state measurements do not pay
// for mapping fresh pages on every raster.
struct Workspace {
  DelineationResult delineation;
  RingSet rings;
};

// Times detect and form_rings on one raster. Generation is not included.
PipelineTiming time_pipeline(const BitRaster& raster, const AffineTransform& transform);
PipelineTiming time_pipeline(const BitRaster& raster, const AffineTransform& transform, Workspace& workspace);

// Runs every (size, p) point sequentially on the calling thread, all sizes
// back to back for each p. Records are returned ordered by size, then p. Throws
// std::invalid_argument when sizes are < 1, trials < 1 or p_steps < 2.
std::vector<TimingRecord> run_experiment(const ExperimentConfig& config);

struct SeriesSummary {
  int size = 0;
  double peak_p = 0.0;
  double peak_mean = 0.0;
  std::size_t points = 0;
};

struct ShapeReport {
  bool ok = true;
  std::vector<SeriesSummary> series;  // ascending size
  std::vector<std::string> violations;
};

// Bell shape per size: peak mean at p in [0.3, 0.7], means at p = 0 and p = 1
// below half the peak. Across sizes: peak-time ratio over pixel-count ratio,
// against the smallest size, within [0.5, 1.5].
ShapeReport check_shape(std::span<const TimingRecord> records);

}  // namespace orthopoly::bench
