#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"
#include "orthopoly/raster.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "orthopoly");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = orthopoly::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("orthopoly_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, DelineateSinglePixelWkt) {
  const auto mask = write("one.pbm", "P1\n1 1\n1\n");
  const CliResult r = run_cli({"delineate", "--input", mask, "--format", "wkt"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "POLYGON ((0 0, 0 1, 1 1, 1 0, 0 0))\n");
}

TEST_F(CliTest, DelineateAppliesWorldFile) {
  const auto mask = write("one.pbm", "P1\n1 1\n1\n");
  const auto world = write("one.pgw", "2\n0\n0\n-2\n101\n49\n");
  const CliResult r = run_cli({"delineate", "-i", mask, "-w", world, "-f", "wkt"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "POLYGON ((100 50, 100 48, 102 48, 102 50, 100 50))\n");
}

TEST_F(CliTest, DelineateMissingInputIsExitOne) {
  EXPECT_EQ(run_cli({"delineate", "--input", path("nope.pbm")}).code, 1);
  EXPECT_EQ(run_cli({"delineate"}).code, 1);
  const auto bad = write("bad.pbm", "P1\n3 3\n1 0\n");
  const CliResult r = run_cli({"delineate", "--input", bad});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("truncated"), std::string::npos);
  const auto mask = write("one.pbm", "P1\n1 1\n1\n");
  EXPECT_EQ(run_cli({"delineate", "--input", mask, "--world", write("w", "1\n0\n")}).code, 1);
}

TEST_F(CliTest, DelineateEmptyMaskIsEmptyCollection) {
  const auto mask = write("empty.txt", "000\n000\n");
  const CliResult r = run_cli({"delineate", "--input", mask});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"type\":\"FeatureCollection\",\"features\":[]}\n");
}

TEST_F(CliTest, DelineateModesAndOutputFile) {
  const auto mask = write("hole.txt", "111\n101\n111\n");
  const auto out = path("out.json");
  ASSERT_EQ(run_cli({"delineate", "-i", mask, "-o", out, "--crs", "EPSG:4326"}).code, 0);
  const auto polygons = nlohmann::json::parse(slurp(out));
  EXPECT_EQ(polygons["features"].size(), 1u);
  EXPECT_EQ(polygons["features"][0]["geometry"]["coordinates"].size(), 2u);
  EXPECT_EQ(polygons["crs"]["properties"]["name"], "EPSG:4326");

  const auto separate = nlohmann::json::parse(run_cli({"delineate", "-i", mask, "--no-assemble"}).out);
  EXPECT_EQ(separate["features"].size(), 2u);

  const auto rings = nlohmann::json::parse(run_cli({"delineate", "-i", mask, "-f", "rings-geojson"}).out);
  EXPECT_EQ(rings["features"][0]["geometry"]["type"], "LineString");

  EXPECT_EQ(run_cli({"delineate", "-i", mask, "--collapse-collinear", "-f", "wkt"}).out,
            "POLYGON ((0 0, 0 3, 3 3, 3 0, 0 0), (1 1, 2 1, 2 2, 1 2, 1 1))\n");
  EXPECT_EQ(run_cli({"delineate", "-i", mask, "-f", "svg"}).code, 1);
}

TEST_F(CliTest, GenWritesPbm) {
  ASSERT_EQ(run_cli({"gen", "--width", "5", "--height", "3", "--p", "0", "--seed", "1", "-o", path("zero.pbm")}).code, 0);
  const auto zero = orthopoly::parse_mask(slurp(path("zero.pbm")), orthopoly::MaskFormat::pbm_binary);
  EXPECT_EQ(zero.width(), 5);
  EXPECT_EQ(zero.marked_count(), 0u);

  const CliResult ones = run_cli({"gen", "--width", "5", "--height", "3", "--p", "1", "--encoding", "ascii"});
  ASSERT_EQ(ones.code, 0);
  EXPECT_EQ(ones.out, "P1\n5 3\n11111\n11111\n11111\n");
}

TEST_F(CliTest, GenIsDeterministic) {
  for (const char* name : {"a.pbm", "b.pbm"}) {
    ASSERT_EQ(run_cli({"gen", "--width", "64", "--height", "40", "--p", "0.4", "--seed", "77", "-o", path(name)}).code, 0);
  }
  EXPECT_EQ(slurp(path("a.pbm")), slurp(path("b.pbm")));
}

TEST_F(CliTest, GenRejectsBadProbability) {
  EXPECT_EQ(run_cli({"gen", "--width", "4", "--height", "4", "--p", "1.5"}).code, 1);
  EXPECT_EQ(run_cli({"gen", "--width", "4", "--height", "4", "--p", "-0.5"}).code, 1);
}

TEST_F(CliTest, BenchWritesCsv) {
  const CliResult r = run_cli({"bench", "--sizes", "8,12", "--p-steps", "3", "--trials", "2", "--quiet"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("size,p,trials,mean_seconds,stddev_seconds\n", 0), 0u);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1 + 2 * 3);
  EXPECT_NE(r.out.find("\n12,0.5,2,"), std::string::npos);
}

TEST_F(CliTest, BenchRejectsZeroSize) {
  EXPECT_EQ(run_cli({"bench", "--sizes", "0"}).code, 1);
  EXPECT_EQ(run_cli({"bench", "--trials", "0"}).code, 1);
}

TEST_F(CliTest, BenchShapeViolationIsExitTwo) {
  // three p-values are too few for a shape verdict
  const CliResult r = run_cli({"bench", "--sizes", "8", "--p-steps", "3", "--trials", "1", "--check-shape", "-q"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("shape violation"), std::string::npos);
}

TEST_F(CliTest, HelpIsExitZero) {
  const CliResult r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("delineate"), std::string::npos);
}
