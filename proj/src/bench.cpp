#include "orthopoly/bench.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "orthopoly/delineator.hpp"
#include "orthopoly/rings.hpp"

namespace orthopoly::bench {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start, Clock::time_point end) {
  return std::chrono::duration<double>(end - start).count();
}

constexpr std::uint64_t kWarmUpTrial = ~std::uint64_t{0};

}  // namespace

ExperimentConfig full_scale_config() {
  ExperimentConfig config;
  config.sizes = {1000, 2000, 4000};
  config.p_steps = 11;
  config.trials = 100;
  return config;
}

std::vector<double> p_grid(int steps) {
  if (steps < 2) throw std::invalid_argument("p grid needs at least 2 steps");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) grid[i] = static_cast<double>(i) / static_cast<double>(steps - 1);
  return grid;
}

std::uint64_t trial_seed(std::uint64_t seed, int size, double p, std::uint64_t trial) {
  std::uint64_t h = splitmix64(static_cast<std::uint64_t>(size));
  h = splitmix64(h ^ std::bit_cast<std::uint64_t>(p));
  h = splitmix64(h ^ trial);
  return seed ^ h;
}

PipelineTiming time_pipeline(const BitRaster& raster, const AffineTransform& transform) {
  Workspace workspace;
  return time_pipeline(raster, transform, workspace);
}

PipelineTiming time_pipeline(const BitRaster& raster, const AffineTransform& transform, Workspace& workspace) {
  PipelineTiming timing;
  const auto t0 = Clock::now();
  detect(raster, workspace.delineation);
  const auto t1 = Clock::now();
  form_rings(workspace.delineation, transform, {}, workspace.rings);
  const auto t2 = Clock::now();
  timing.detect_seconds = seconds_since(t0, t1);
  timing.form_seconds = seconds_since(t1, t2);
  timing.vertices = workspace.delineation.vertex_count();
  timing.rings = workspace.rings.grid.size();
  return timing;
}

std::vector<TimingRecord> run_experiment(const ExperimentConfig& config) {
  if (config.sizes.empty()) throw std::invalid_argument("no raster sizes given");
  for (int s : config.sizes) {
    if (s < 1) throw std::invalid_argument("raster size must be >= 1, got " + std::to_string(s));
  }
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
  const std::vector<double> ps = p_grid(config.p_steps);

  std::vector<TimingRecord> records(config.sizes.size() * ps.size());
  Workspace workspace;
  for (std::size_t pi = 0; pi < ps.size(); ++pi) {
    const double p = ps[pi];
    for (std::size_t si = 0; si < config.sizes.size(); ++si) {
      const int size = config.sizes[si];
      if (config.warm_up) {
        time_pipeline(gen_bernoulli(size, size, p, trial_seed(config.seed, size, p, kWarmUpTrial)), config.transform,
                      workspace);
      }
      std::vector<double> totals;
      totals.reserve(static_cast<std::size_t>(config.trials));
      double detect_sum = 0.0, form_sum = 0.0, vertex_sum = 0.0;
      for (int t = 0; t < config.trials; ++t) {
        const BitRaster raster = gen_bernoulli(size, size, p, trial_seed(config.seed, size, p, static_cast<std::uint64_t>(t)));
        const PipelineTiming timing = time_pipeline(raster, config.transform, workspace);
        totals.push_back(timing.detect_seconds + timing.form_seconds);
        detect_sum += timing.detect_seconds;
        form_sum += timing.form_seconds;
        vertex_sum += static_cast<double>(timing.vertices);
      }
      const double n = static_cast<double>(config.trials);
      double mean = 0.0;
      for (double v : totals) mean += v;
      mean /= n;
      double var = 0.0;
      for (double v : totals) var += (v - mean) * (v - mean);
      const double stddev = config.trials > 1 ? std::sqrt(var / (n - 1.0)) : 0.0;

      TimingRecord record{size, p, config.trials, mean, stddev, detect_sum / n, form_sum / n, vertex_sum / n};
      records[si * ps.size() + pi] = record;
      if (config.on_record) config.on_record(record);
    }
  }
  return records;
}

ShapeReport check_shape(std::span<const TimingRecord> records) {
  ShapeReport report;
  std::map<int, std::vector<const TimingRecord*>> by_size;
  for (const TimingRecord& r : records) by_size[r.size].push_back(&r);

  auto violation = [&](const std::string& message) {
    report.ok = false;
    report.violations.push_back(message);
  };

  for (auto& [size, series] : by_size) {
    std::sort(series.begin(), series.end(), [](auto* l, auto* r) { return l->p < r->p; });
    SeriesSummary summary{size, series.front()->p, series.front()->mean_seconds, series.size()};
    for (const TimingRecord* r : series) {
      if (r->mean_seconds > summary.peak_mean) summary = {size, r->p, r->mean_seconds, series.size()};
    }
    report.series.push_back(summary);

    const std::string label = "size " + std::to_string(size);
    if (series.size() < 5) {
      violation(label + ": needs at least 5 p-values, has " + std::to_string(series.size()));
      continue;
    }
    if (summary.peak_p < 0.3 - 1e-9 || summary.peak_p > 0.7 + 1e-9) {
      std::ostringstream msg;
      msg << label << ": peak mean at p=" << summary.peak_p << ", outside [0.3, 0.7]";
      violation(msg.str());
    }
    for (const TimingRecord* r : series) {
      const bool endpoint = std::abs(r->p) < 1e-12 || std::abs(r->p - 1.0) < 1e-12;
      if (endpoint && !(r->mean_seconds < 0.5 * summary.peak_mean)) {
        std::ostringstream msg;
        msg << label << ": mean at p=" << r->p << " is " << r->mean_seconds << " s, not below half the peak "
            << summary.peak_mean << " s";
        violation(msg.str());
      }
    }
  }

  if (report.series.size() >= 2) {
    const SeriesSummary& base = report.series.front();
    for (std::size_t i = 1; i < report.series.size(); ++i) {
      const SeriesSummary& s = report.series[i];
      const double pixel_ratio = (static_cast<double>(s.size) * s.size) / (static_cast<double>(base.size) * base.size);
      const double time_ratio = s.peak_mean / base.peak_mean;
      const double relative = time_ratio / pixel_ratio;
      if (!(relative >= 0.5 && relative <= 1.5)) {
        std::ostringstream msg;
        msg << "size " << s.size << " vs " << base.size << ": peak time ratio " << time_ratio
            << " against pixel ratio " << pixel_ratio << " is off by more than 50%";
        violation(msg.str());
      }
    }
  }
  return report;
}

}  // namespace orthopoly::bench
