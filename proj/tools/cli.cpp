#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "orthopoly/bench.hpp"
#include "orthopoly/delineator.hpp"
#include "orthopoly/geo_io.hpp"
#include "orthopoly/kernels.hpp"
#include "orthopoly/raster.hpp"
#include "orthopoly/rings.hpp"

namespace orthopoly::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_payload(const std::string& path, const std::string& payload, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << payload;
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << payload;
  if (!file) throw InputError("failed writing '" + path + "'");
}

struct DelineateArgs {
  std::string input;
  std::string world;
  std::string format = "geojson";
  std::string mask_format = "auto";
  bool assemble = true;
  bool collapse = false;
  std::string output = "-";
  std::string crs;
};

int cmd_delineate(const DelineateArgs& args, std::ostream& out, std::ostream& err) {
  const std::string bytes = read_file(args.input);
  MaskFormat format = detect_mask_format(bytes);
  if (args.mask_format == "pbm" && format == MaskFormat::ascii_grid) {
    throw ParseError(ParseErrorKind::malformed_header, "expected a PBM file");
  }
  if (args.mask_format == "grid") format = MaskFormat::ascii_grid;
  const BitRaster raster = parse_mask(bytes, format);
  const AffineTransform transform = args.world.empty() ? AffineTransform::identity() : parse_world_file(read_file(args.world));

  DelineationResult result = detect(raster);
  const RingSet rings = form_rings(result, transform, {.collapse_collinear = args.collapse});

  GeoJsonOptions options;
  if (!args.crs.empty()) options.crs_name = args.crs;

  std::string payload;
  if (args.format == "rings-geojson") {
    payload = write_geojson_rings(rings.world, options);
  } else {
    PolygonSet polygons;
    try {
      polygons = args.assemble ? assemble_polygons(rings.grid) : rings_as_polygons(rings.grid.size());
    } catch (const TopologyError& e) {
      err << "topology error: " << e.what() << '\n';
      return kExitResult;
    }
    payload = args.format == "wkt" ? write_wkt(polygons, rings.world) : write_geojson(polygons, rings.world, options);
  }
  payload += '\n';
  write_payload(args.output, payload, out);
  err << raster.width() << "x" << raster.height() << ": " << result.vertex_count() << " vertices, "
      << rings.grid.size() << " rings\n";
  return kExitOk;
}

struct GenArgs {
  int width = 0;
  int height = 0;
  double p = 0.5;
  std::uint64_t seed = 1;
  std::string output = "-";
  std::string encoding = "binary";
};

int cmd_gen(const GenArgs& args, std::ostream& out) {
  const BitRaster raster = gen_bernoulli(args.width, args.height, args.p, args.seed);
  const MaskFormat format = args.encoding == "ascii" ? MaskFormat::pbm_ascii : MaskFormat::pbm_binary;
  write_payload(args.output, write_mask(raster, format), out);
  return kExitOk;
}

struct BenchArgs {
  std::vector<int> sizes{250, 500, 1000};
  int p_steps = 11;
  int trials = 10;
  std::uint64_t seed = 20200101;
  std::string output = "-";
  bool check_shape = false;
  bool full_scale = false;
  bool quiet = false;
};

int cmd_bench(const BenchArgs& args, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  bench::ExperimentConfig config;
  if (args.full_scale) config = bench::full_scale_config();
  if (!args.full_scale || sub.count("--sizes")) config.sizes = args.sizes;
  if (!args.full_scale || sub.count("--p-steps")) config.p_steps = args.p_steps;
  if (!args.full_scale || sub.count("--trials")) config.trials = args.trials;
  config.seed = args.seed;
  if (!args.quiet) {
    err << "kernels: " << kernels::to_string(kernels::active_isa()) << '\n';
    config.on_record = [&err](const TimingRecord& r) {
      err << "size " << r.size << " p " << format_number(r.p) << ": mean " << r.mean_seconds << " s (detect "
          << r.mean_detect_seconds << ", rings " << r.mean_form_seconds << "), " << r.mean_vertices
          << " vertices\n";
    };
  }
  const std::vector<TimingRecord> records = bench::run_experiment(config);
  write_payload(args.output, write_timing_csv(records), out);

  if (args.check_shape) {
    const bench::ShapeReport report = bench::check_shape(records);
    for (const auto& s : report.series) {
      err << "size " << s.size << ": peak " << s.peak_mean << " s at p=" << format_number(s.peak_p) << '\n';
    }
    for (const auto& v : report.violations) err << "shape violation: " << v << '\n';
    if (!report.ok) return kExitResult;
    err << "shape check passed\n";
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact orthogonal polygon delineation of binary raster masks"};
  app.require_subcommand(1);

  DelineateArgs delineate_args;
  auto* delineate = app.add_subcommand("delineate", "Trace a mask into closed orthogonal rings");
  delineate->add_option("--input,-i", delineate_args.input, "Mask file (PBM P1/P4 or 0/1 ascii grid)")->required();
  delineate->add_option("--world,-w", delineate_args.world, "Six-line world file; identity when omitted");
  delineate->add_option("--format,-f", delineate_args.format, "Output format")
      ->check(CLI::IsMember({"geojson", "wkt", "rings-geojson"}));
  delineate->add_option("--mask-format", delineate_args.mask_format, "Input format")
      ->check(CLI::IsMember({"auto", "pbm", "grid"}));
  delineate->add_flag("--assemble,!--no-assemble", delineate_args.assemble, "Group holes with their exterior rings");
  delineate->add_flag("--collapse-collinear", delineate_args.collapse, "Merge straight runs into single segments");
  delineate->add_option("--output,-o", delineate_args.output, "Output path, '-' for stdout");
  delineate->add_option("--crs", delineate_args.crs, "Named CRS attached to GeoJSON output");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Write a random Bernoulli mask as PBM");
  gen->add_option("--width", gen_args.width)->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--height", gen_args.height)->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--p", gen_args.p, "Probability a pixel is marked")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gen_args.seed);
  gen->add_option("--output,-o", gen_args.output, "Output path, '-' for stdout");
  gen->add_option("--encoding", gen_args.encoding, "PBM encoding")->check(CLI::IsMember({"binary", "ascii"}));

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time delineation over Bernoulli rasters and write CSV");
  bench->add_option("--sizes", bench_args.sizes, "Square raster sizes")->delimiter(',')->check(CLI::PositiveNumber);
  bench->add_option("--p-steps", bench_args.p_steps, "Points on the p grid over [0,1]")->check(CLI::Range(2, 1001));
  bench->add_option("--trials", bench_args.trials, "Rasters per (size, p)")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_args.seed);
  bench->add_option("--output,-o", bench_args.output, "CSV path, '-' for stdout");
  bench->add_flag("--check-shape", bench_args.check_shape, "Fail unless timings are bell-shaped and scale linearly");
  bench->add_flag("--full-scale", bench_args.full_scale, "Sizes 1000,2000,4000 with 100 trials");
  bench->add_flag("--quiet,-q", bench_args.quiet, "No progress on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (delineate->parsed()) return cmd_delineate(delineate_args, out, err);
    if (gen->parsed()) return cmd_gen(gen_args, out);
    if (bench->parsed()) return cmd_bench(bench_args, *bench, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const WorldFileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace orthopoly::cli
