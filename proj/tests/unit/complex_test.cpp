#include <gtest/gtest.h>

#include "creg/complex.hpp"
#include "creg/error.hpp"
#include "test_util.hpp"

using namespace creg;
using namespace creg::test;

namespace {

std::vector<Polynomial> forms(const RingPtr& R, const std::string& s) { return parse_polynomials(s, *R); }

void expect_same_series(const PresentedModule& a, const HilbertSeries& b) {
  EXPECT_EQ(a.hilbert_series(), b) << a.hilbert_series().to_string() << " vs " << b.to_string();
}

// Homology dims of two complexes agree with each other and the oracle.
void expect_homology_matches_oracle(const BoundedComplex& C, int lo, int hi, int jmax) {
  for (int i = lo; i <= hi; ++i) {
    PresentedModule H = homology(C, i);
    for (int j = -2; j <= jmax; ++j)
      EXPECT_EQ(H.hilbert_series().coefficient(j), oracle_homology_dim(C, i, j)) << "H_" << i << " degree " << j;
  }
}

}  // namespace

TEST(Complex, KoszulOnRegularSequence) {
  auto S = poly_ring({"x", "y"});
  auto K = koszul_complex(forms(S, "x, y"), ring_module(S));
  EXPECT_TRUE(K.is_complex());
  EXPECT_TRUE(K.is_minimal());
  EXPECT_EQ(K.term(1).generators().twists, std::vector<int>({1, 1}));
  EXPECT_EQ(K.term(2).generators().twists, std::vector<int>({2}));
  expect_same_series(homology(K, 0), HilbertSeries(0, {1}, 0));
  EXPECT_TRUE(homology(K, 1).is_zero());
  EXPECT_TRUE(homology(K, 2).is_zero());
  EXPECT_EQ(grade(forms(S, "x, y"), ring_module(S)), ExtInt(2));
}

TEST(Complex, KoszulOnZeroDivisor) {
  auto R = determinantal_ring();
  auto z = forms(R, "z");
  auto K = koszul_complex(z, ring_module(R));
  EXPECT_TRUE(K.is_complex());
  PresentedModule H1 = homology(K, 1);
  expect_same_series(H1, colon_by_element(ring_module(R), z[0]).module.hilbert_series().shifted(-1));
  EXPECT_EQ(H1.dimension(), ExtInt(2));
  expect_same_series(homology(K, 0), quotient_by_element(ring_module(R), z[0]).hilbert_series());
  EXPECT_EQ(grade(z, ring_module(R)), ExtInt(0));
  expect_homology_matches_oracle(K, 0, 1, 6);
}

TEST(Complex, GradeOfAnnihilatedModule) {
  auto S = poly_ring({"x", "y"});
  EXPECT_EQ(grade(forms(S, "x"), cyclic(S, "x")), ExtInt(0));
  EXPECT_EQ(grade(forms(S, "x"), PresentedModule::zero(S)), ExtInt::pos_inf());
}

TEST(Complex, KoszulHomologyIsTor) {
  auto S = poly_ring({"x", "y", "z"});
  auto M = cyclic(S, "x^2, x*y, y*z^2");
  auto K = koszul_complex(forms(S, "x, y, z"), M);
  BettiTable B = betti_table(M);
  for (int i = 0; i <= 3; ++i) {
    PresentedModule H = homology(K, i);
    for (int j = 0; j <= 8; ++j) EXPECT_EQ(H.hilbert_series().coefficient(j), B.at(i, j)) << i << "," << j;
  }
}

TEST(Complex, ResolutionHomology) {
  auto S = poly_ring({"x", "y", "z"});
  auto M = cyclic(S, "x^2, y*z");
  auto C = BoundedComplex::from_resolution(minimal_free_resolution(M));
  EXPECT_TRUE(C.is_complex());
  expect_same_series(homology(C, 0), M.hilbert_series());
  EXPECT_TRUE(homology(C, 1).is_zero());
  EXPECT_TRUE(homology(C, 2).is_zero());
  EXPECT_EQ(homology_inf(C), ExtInt(0));
  EXPECT_EQ(homology_sup(C), ExtInt(0));
}

TEST(Complex, ZeroDifferential) {
  auto S = poly_ring({"x", "y"});
  auto A = cyclic(S, "x"), B = cyclic(S, "x, y", 2);
  GradedMap zero = GradedMap::zero(S->field(), B.generators(), A.generators());
  BoundedComplex C(S, 0, {A, B}, {zero});
  expect_same_series(homology(C, 0), A.hilbert_series());
  expect_same_series(homology(C, 1), B.hilbert_series());
}

TEST(Complex, SuspensionAndTwist) {
  auto S = poly_ring({"x", "y"});
  auto K = koszul_complex(forms(S, "x, y"), ring_module(S));
  auto T = K.suspended(2).twisted(-3);
  EXPECT_EQ(T.lo(), 2);
  EXPECT_TRUE(T.is_complex());
  expect_same_series(homology(T, 2), HilbertSeries(3, {1}, 0));
}

TEST(Complex, HypersurfaceTor) {
  auto R = quotient_ring(poly_ring({"x", "y"}), "x^2 + y^2");
  auto M = cyclic(R, "x"), N = cyclic(R, "y");
  expect_same_series(tor(M, N, 0), HilbertSeries(0, {1}, 0));
  expect_same_series(tor(M, N, 1), HilbertSeries(2, {1}, 0));
  EXPECT_TRUE(tor(M, N, 2).is_zero());
  EXPECT_TRUE(tor(ring_module(R), N, 1).is_zero());
}

TEST(Complex, TorSymmetry) {
  auto S = poly_ring({"x", "y", "z"});
  auto M = cyclic(S, "x^2, y*z"), N = cyclic(S, "x*y, z^2, y^3");
  for (int i = 0; i <= 3; ++i) {
    auto a = tor(M, N, i), b = tor(N, M, i);
    for (int j = 0; j <= 6; ++j) EXPECT_EQ(a.hilbert_series().coefficient(j), b.hilbert_series().coefficient(j));
  }
}

TEST(Complex, ExtOverCover) {
  auto R = determinantal_ring();
  auto S = R->cover();
  auto Rs = ring_module(R).over_cover();
  auto Sz = cyclic(S, "z");
  auto z = forms(R, "z")[0];
  expect_same_series(ext(Sz, Rs, 0), colon_by_element(ring_module(R), z).module.hilbert_series());
  expect_same_series(ext(Sz, Rs, 1), quotient_by_element(ring_module(R), z).hilbert_series().shifted(1));
  EXPECT_TRUE(ext(Sz, Rs, 2).is_zero());
}

TEST(Complex, ExtOfResidueField) {
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) names.push_back("x" + std::to_string(v));
    auto S = poly_ring(names);
    auto k = PresentedModule::residue_field(S);
    for (int i = 0; i < n; ++i) EXPECT_TRUE(ext(k, ring_module(S), i).is_zero());
    expect_same_series(ext(k, ring_module(S), n), HilbertSeries(-n, {1}, 0));
  }
}

TEST(Complex, HomSignsSquareToZero) {
  auto S = poly_ring({"x", "y", "z"});
  auto F = koszul_complex(forms(S, "x, y^2, z"), ring_module(S));
  auto G = koszul_complex(forms(S, "x + y, z^2"), cyclic(S, "x*y"));
  EXPECT_TRUE(hom_complex(F, G).is_complex());
  EXPECT_TRUE(tensor_complexes(F, G).is_complex());
  EXPECT_TRUE(tensor_complexes(F.suspended(-1), G.suspended(3)).is_complex());
  EXPECT_TRUE(hom_complex(F.suspended(1), G).is_complex());
}

TEST(Complex, DualityOfKoszulHomology) {
  auto S = poly_ring({"x", "y", "z"});
  auto M = cyclic(S, "x^2, x*y, y*z^2");
  auto k = PresentedModule::residue_field(S);
  for (int i = 0; i <= 3; ++i) {
    auto T = tor(k, M, i), E = ext(k, M, 3 - i);
    for (int j = -2; j <= 8; ++j)
      EXPECT_EQ(T.hilbert_series().coefficient(j), E.hilbert_series().coefficient(j - 3)) << i << "," << j;
  }
}

TEST(Complex, EulerCharacteristicOfKoszul) {
  auto R = determinantal_ring();
  auto K = koszul_complex(forms(R, "z, y + t"), ring_module(R));
  for (int j = 0; j <= 6; ++j) {
    long long h = 0, c = 0;
    for (int i = 0; i <= 2; ++i) {
      long long s = i % 2 == 0 ? 1 : -1;
      h += s * homology(K, i).hilbert_series().coefficient(j);
      c += s * K.term(i).hilbert_series().coefficient(j);
    }
    EXPECT_EQ(h, c);
  }
}

TEST(Complex, ResolutionOfModuleAsComplex) {
  auto S = poly_ring({"x", "y", "z"});
  auto M = cyclic(S, "x^2, x*y, y*z^2");
  auto F = free_resolution_of_complex(BoundedComplex::from_module(M));
  auto G = minimal_free_resolution(M);
  ASSERT_EQ(F.hi() - F.lo(), G.length());
  EXPECT_TRUE(F.is_minimal());
  for (int i = 0; i <= G.length(); ++i) {
    auto a = F.term(i).generators().twists, b = G.modules[static_cast<std::size_t>(i)].twists;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
  }
}

TEST(Complex, ResolutionOfFreeMinimalComplexIsItself) {
  auto S = poly_ring({"x", "y", "z", "t"});
  auto K = koszul_complex(forms(S, "z"), ring_module(S));
  auto F = free_resolution_of_complex(K);
  EXPECT_EQ(F.lo(), 0);
  EXPECT_EQ(F.hi(), 1);
  EXPECT_EQ(F.term(1).generators().twists, std::vector<int>({1}));
}

TEST(Complex, ResolutionOfKoszulOverCover) {
  auto R = determinantal_ring();
  auto Rs = ring_module(R).over_cover();
  auto L = koszul_complex(parse_polynomials("z", *Rs.ring()), Rs);
  auto F = free_resolution_of_complex(L);
  EXPECT_TRUE(F.is_minimal());
  EXPECT_TRUE(F.is_complex());
  for (int i = F.lo(); i <= F.hi(); ++i) {
    PresentedModule H = homology(F, i);
    for (int j = 0; j <= 6; ++j)
      EXPECT_EQ(H.hilbert_series().coefficient(j), oracle_homology_dim(L, i, j)) << i << "," << j;
  }
  EXPECT_TRUE(homology(L, 1).dimension() == ExtInt(2));
}
