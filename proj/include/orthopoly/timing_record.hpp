#pragma once

namespace orthopoly {

// Timing of `trials` rasters of size x size pixels marked with probability p.
// mean/stddev cover detection plus ring formation; the split means are kept
// for analysis and are not part of the CSV.
struct TimingRecord {
  int size = 0;
  double p = 0.0;
  int trials = 0;
  double mean_seconds = 0.0;
  double stddev_seconds = 0.0;
  double mean_detect_seconds = 0.0;
  double mean_form_seconds = 0.0;
  double mean_vertices = 0.0;
};

}  // namespace orthopoly
