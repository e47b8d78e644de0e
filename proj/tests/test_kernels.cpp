#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "orthopoly/delineator.hpp"
#include "orthopoly/kernels.hpp"

using namespace orthopoly;
namespace k = orthopoly::kernels;

namespace {

std::vector<k::Isa> supported_vector_isas() {
  std::vector<k::Isa> out;
  for (k::Isa isa : {k::Isa::avx2, k::Isa::neon}) {
    if (k::isa_supported(isa)) out.push_back(isa);
  }
  return out;
}

std::vector<std::uint8_t> random_bits(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution bit(p);
  std::vector<std::uint8_t> v(n);
  for (auto& b : v) b = bit(rng);
  return v;
}

class IsaGuard {
 public:
  IsaGuard() : saved_(k::active_isa()) {}
  ~IsaGuard() { k::set_active_isa(saved_); }

 private:
  k::Isa saved_;
};

}  // namespace

TEST(KernelTest, ScalarClassifyMatchesWindowDefinition) {
  // above = 1 1 0, below = 0 1 1
  const std::uint8_t above[] = {1, 1, 0};
  const std::uint8_t below[] = {0, 1, 1};
  std::uint8_t codes[4];
  k::classify_row_scalar(above, below, 3, codes);
  EXPECT_EQ(codes[0], 2);             // only above[0]
  EXPECT_EQ(codes[1], 1 + 2 + 8);     // above[0], above[1], below[1]
  EXPECT_EQ(codes[2], 1 + 4 + 8);     // above[1], below[1], below[2]
  EXPECT_EQ(codes[3], 4);             // below[2]
}

TEST(KernelTest, ClassifyZeroWidthRow) {
  std::uint8_t codes[1] = {99};
  k::classify_row_scalar(nullptr, nullptr, 0, codes);
  EXPECT_EQ(codes[0], 0);
  for (k::Isa isa : supported_vector_isas()) {
    codes[0] = 99;
    k::classify_row_for(isa)(nullptr, nullptr, 0, codes);
    EXPECT_EQ(codes[0], 0);
  }
}

TEST(KernelTest, VectorClassifyEquivalentToScalar) {
  const auto isas = supported_vector_isas();
  if (isas.empty()) GTEST_SKIP() << "no vector kernels on this CPU";
  std::mt19937_64 rng(11);
  for (std::size_t width = 1; width <= 300; ++width) {
    for (double p : {0.05, 0.5, 0.95}) {
      const auto above = random_bits(rng, width, p);
      const auto below = random_bits(rng, width, p);
      std::vector<std::uint8_t> expected(width + 1), actual(width + 1);
      k::classify_row_scalar(above.data(), below.data(), width, expected.data());
      for (k::Isa isa : isas) {
        k::classify_row_for(isa)(above.data(), below.data(), width, actual.data());
        ASSERT_EQ(actual, expected) << "isa=" << k::to_string(isa) << " width=" << width;
      }
    }
  }
}

TEST(KernelTest, VectorCountEquivalentToScalar) {
  const auto isas = supported_vector_isas();
  if (isas.empty()) GTEST_SKIP() << "no vector kernels on this CPU";
  std::mt19937_64 rng(12);
  for (std::size_t n : {0u, 1u, 31u, 32u, 33u, 1000u, 70001u}) {
    const auto cells = random_bits(rng, n, 0.37);
    for (k::Isa isa : isas) EXPECT_EQ(k::count_marked_for(isa)(cells.data(), n), k::count_marked_scalar(cells.data(), n));
  }
}

TEST(KernelTest, ScalarVertexCountFollowsCases) {
  std::vector<std::uint8_t> codes(16);
  std::size_t expected = 0;
  for (int c = 0; c < 16; ++c) {
    codes[c] = static_cast<std::uint8_t>(c);
    expected += static_cast<std::size_t>(vertices_for_case(c));
  }
  EXPECT_EQ(k::count_vertices_scalar(codes.data(), codes.size()), expected);
  EXPECT_EQ(k::count_vertices_scalar(codes.data(), 0), 0u);
}

TEST(KernelTest, VectorVertexCountEquivalentToScalar) {
  const auto isas = supported_vector_isas();
  if (isas.empty()) GTEST_SKIP() << "no vector kernels on this CPU";
  std::mt19937_64 rng(14);
  for (std::size_t n : {0u, 1u, 15u, 31u, 32u, 33u, 64u, 1001u, 70001u}) {
    std::vector<std::uint8_t> codes(n);
    for (auto& c : codes) c = static_cast<std::uint8_t>(rng() & 15);
    for (k::Isa isa : isas) {
      EXPECT_EQ(k::count_vertices_for(isa)(codes.data(), n), k::count_vertices_scalar(codes.data(), n))
          << "isa=" << k::to_string(isa) << " n=" << n;
    }
  }
}

TEST(KernelTest, DispatchHonoursSupport) {
  IsaGuard guard;
  EXPECT_TRUE(k::isa_supported(k::Isa::scalar));
  EXPECT_TRUE(k::set_active_isa(k::Isa::scalar));
  EXPECT_EQ(k::active_isa(), k::Isa::scalar);
  EXPECT_EQ(k::classify_row(), &k::classify_row_scalar);
  if (!k::isa_supported(k::Isa::neon)) EXPECT_FALSE(k::set_active_isa(k::Isa::neon));
}

TEST(KernelTest, DetectIdenticalUnderEveryKernel) {
  IsaGuard guard;
  std::vector<k::Isa> isas = supported_vector_isas();
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const int w = 1 + static_cast<int>(rng() % 150);
    const int h = 1 + static_cast<int>(rng() % 40);
    const BitRaster r = gen_bernoulli(w, h, 0.1 + 0.8 * static_cast<double>(trial % 9) / 8.0, rng());
    k::set_active_isa(k::Isa::scalar);
    const std::string expected = dump_vertices(detect(r));
    for (k::Isa isa : isas) {
      ASSERT_TRUE(k::set_active_isa(isa));
      ASSERT_EQ(dump_vertices(detect(r)), expected);
    }
  }
}
