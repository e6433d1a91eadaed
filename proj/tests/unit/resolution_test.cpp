#include <gtest/gtest.h>

#include "creg/oracle.hpp"
#include "creg/resolution.hpp"
#include "test_util.hpp"

using namespace creg;
using namespace creg::test;

namespace {

std::vector<std::vector<int>> twists_of(const FreeResolution& F) {
  std::vector<std::vector<int>> out;
  for (const auto& m : F.modules) {
    auto t = m.twists;
    std::sort(t.begin(), t.end());
    out.push_back(t);
  }
  return out;
}

// Betti numbers over the cover against Koszul homology computed densely.
void expect_betti_matches_oracle(const PresentedModule& M, int max_j) {
  BettiTable B = betti_table(M.over_cover());
  const int n = M.ring()->nvars();
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= max_j; ++j)
      EXPECT_EQ(B.at(i, j), oracle_koszul_betti(M, i, j)) << "beta_" << i << "," << j;
}

}  // namespace

TEST(Resolution, ResidueFieldOverPlane) {
  auto S = poly_ring({"x", "y"});
  auto F = minimal_free_resolution(PresentedModule::residue_field(S));
  EXPECT_FALSE(F.truncated);
  EXPECT_EQ(twists_of(F), (std::vector<std::vector<int>>{{0}, {1, 1}, {2}}));
  EXPECT_TRUE(is_complex(F));
  for (const auto& d : F.maps) EXPECT_TRUE(d.is_minimal());
}

TEST(Resolution, CompleteIntersection) {
  auto S = poly_ring({"x", "y"});
  auto F = minimal_free_resolution(cyclic(S, "x^2, y^2"));
  EXPECT_EQ(twists_of(F), (std::vector<std::vector<int>>{{0}, {2, 2}, {4}}));
  EXPECT_TRUE(is_complex(F));
}

TEST(Resolution, DeterminantalRingOverCover) {
  auto R = determinantal_ring();
  auto M = ring_module(R).over_cover();
  BettiTable B = betti_table(M);
  EXPECT_EQ(B.at(0, 0), 1);
  EXPECT_EQ(B.at(1, 2), 3);
  EXPECT_EQ(B.at(2, 3), 2);
  long long total = 0;
  for (const auto& [ij, b] : B.entries()) total += b;
  EXPECT_EQ(total, 6);
  EXPECT_EQ(B.projective_dimension(), ExtInt(2));
  EXPECT_EQ(B.regularity(), ExtInt(1));
  expect_betti_matches_oracle(ring_module(R), 6);
}

TEST(Resolution, EulerCharacteristicMatchesHilbertNumerator) {
  auto S = poly_ring({"x", "y", "z"});
  auto M = cyclic(S, "x^2*y, x*z^2, y^3, x*y*z");
  BettiTable B = betti_table(M);
  int off = 0;
  auto e = B.euler_polynomial(off);
  int hoff = 0;
  auto h = M.hilbert_series().numerator_over(3, hoff);
  EXPECT_EQ(off, hoff);
  EXPECT_EQ(e, h);
  expect_betti_matches_oracle(M, 7);
}

TEST(Resolution, InfiniteOverQuotient) {
  auto S = poly_ring({"x", "y"});
  auto R = quotient_ring(S, "x^2, y^2");
  auto F = minimal_free_resolution(PresentedModule::residue_field(R), 6);
  EXPECT_TRUE(F.truncated);
  ASSERT_EQ(F.length(), 6);
  for (int i = 0; i <= 6; ++i) {
    const auto& tw = F.modules[static_cast<std::size_t>(i)].twists;
    EXPECT_EQ(static_cast<int>(tw.size()), i + 1);
    for (int t : tw) EXPECT_EQ(t, i);
  }
  EXPECT_TRUE(is_complex(F));
  BettiTable B(F);
  EXPECT_EQ(B.projective_dimension(), ExtInt::pos_inf());
  EXPECT_EQ(B.top_degree(4), ExtInt(4));
}

TEST(Resolution, FreeOverQuotientTerminates) {
  auto R = determinantal_ring();
  auto F = minimal_free_resolution(ring_module(R));
  EXPECT_FALSE(F.truncated);
  EXPECT_EQ(F.length(), 0);
}

TEST(Resolution, Depth) {
  auto R = determinantal_ring();
  auto S = poly_ring({"x", "y"});
  EXPECT_EQ(depth(ring_module(S)), ExtInt(2));
  EXPECT_EQ(depth(cyclic(R, "z")), ExtInt(1));
  EXPECT_EQ(depth(ring_module(R)), ExtInt(2));
  EXPECT_EQ(depth(PresentedModule::zero(S)), ExtInt::pos_inf());
}

TEST(Resolution, BettiRendering) {
  auto S = poly_ring({"x", "y"});
  BettiTable B = betti_table(cyclic(S, "x^2, y^2"));
  EXPECT_EQ(B.to_text(),
            "           0     1     2\n"
            "    0:     1     .     .\n"
            "    1:     .     2     .\n"
            "    2:     .     .     1\n");
}
