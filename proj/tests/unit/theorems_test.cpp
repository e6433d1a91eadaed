#include <gtest/gtest.h>

#include "creg/error.hpp"
#include "creg/theorems.hpp"
#include "test_util.hpp"

using namespace creg;
using namespace creg::test;

namespace {

std::vector<Polynomial> forms(const RingPtr& R, const std::string& s) { return parse_polynomials(s, *R); }

PresentedModule scroll_quotient(const NilpotentScroll& f, bool with_z) {
  std::vector<Polynomial> gens = f.ideal;
  if (with_z) gens.push_back(f.z);
  return PresentedModule::cyclic(f.ring, gens);
}

void expect_no_violation(const CheckOutcome& c) { EXPECT_FALSE(c.violated()) << c.to_text(); }

}  // namespace

TEST(Theorems, Cmd1OnDeterminantalKoszul) {
  auto R = determinantal_ring();
  auto c = check_thm_cmd1(koszul_complex(forms(R, "z"), ring_module(R)).over_cover());
  EXPECT_TRUE(c.hypothesis) << c.to_text();
  EXPECT_EQ(c.conclusion(), Conclusion::Equality);
  EXPECT_EQ(c.claims[0].lhs, ExtInt(1));
  expect_no_violation(c);
}

TEST(Theorems, Cmd1FailsOnScrollFamily) {
  auto f = nilpotent_scroll_family(2);
  auto T = GradedRing::quotient(f.ring, f.ideal);
  auto c = check_thm_cmd1(koszul_complex({f.z}, ring_module(T)).over_cover());
  EXPECT_FALSE(c.hypothesis);
  EXPECT_EQ(c.claims[0].lhs, ExtInt(1));
  EXPECT_EQ(c.claims[0].rhs, ExtInt(3));
  EXPECT_EQ(c.conclusion(), Conclusion::Inequality);
  expect_no_violation(c);
}

TEST(Theorems, Cmd1SingleModule) {
  auto S = poly_ring({"x", "y"});
  auto c = check_thm_cmd1(BoundedComplex::from_module(cyclic(S, "x^2, x*y")));
  EXPECT_TRUE(c.hypothesis);
  EXPECT_EQ(c.conclusion(), Conclusion::Equality);
  expect_no_violation(c);
}

TEST(Theorems, AbFormulaHypersurface) {
  auto R = quotient_ring(poly_ring({"x", "y"}), "x^2 + y^2");
  auto c = check_ab_formula(cyclic(R, "x"), cyclic(R, "y"));
  EXPECT_TRUE(c.hypothesis);
  EXPECT_EQ(c.claims[0].lhs, ExtInt(1));
  expect_no_violation(c);
  auto k = check_ab_formula(cyclic(R, "x"), PresentedModule::residue_field(R));
  EXPECT_FALSE(k.hypothesis);
  EXPECT_EQ(k.conclusion(), Conclusion::NotAsserted);
}

TEST(Theorems, TensorFormula) {
  auto R = quotient_ring(poly_ring({"x", "y"}), "x^2 + y^2");
  auto c = check_cor_tensor({cyclic(R, "x"), cyclic(R, "y")});
  EXPECT_TRUE(c.hypothesis);
  EXPECT_EQ(c.claims[0].lhs, ExtInt(1));
  EXPECT_EQ(c.claims[0].rhs, ExtInt(1));
  expect_no_violation(c);

  auto S = poly_ring({"x", "y"});
  auto t = check_cor_tensor({ring_module(S), ring_module(S)});
  EXPECT_EQ(t.claims[0].lhs, ExtInt(0));
  expect_no_violation(t);
  auto three = check_cor_tensor({cyclic(S, "x^2"), cyclic(S, "y^2"), cyclic(S, "x + y")});
  EXPECT_TRUE(three.hypothesis);
  EXPECT_EQ(three.conclusion(), Conclusion::Equality);
  expect_no_violation(three);
}

TEST(Theorems, HomFormula) {
  auto R = determinantal_ring();
  auto S = R->cover();
  auto c = check_cor_hom(cyclic(S, "z"), ring_module(R).over_cover());
  EXPECT_TRUE(c.hypothesis) << c.to_text();
  EXPECT_EQ(c.claims[0].lhs, ExtInt(1));
  EXPECT_EQ(c.conclusion(), Conclusion::Equality);
  expect_no_violation(c);

  auto T = poly_ring({"x", "y"});
  auto d = check_cor_hom(cyclic(T, "x"), ring_module(T));
  EXPECT_TRUE(d.hypothesis);
  EXPECT_EQ(d.claims[0].lhs, ExtInt(0));
  expect_no_violation(d);
}

TEST(Theorems, HomDim1) {
  auto S = poly_ring({"x", "y", "z"});
  auto c = check_hom_dim1(forms(S, "x, y"), cyclic(S, "x*z, y*z"));
  EXPECT_TRUE(c.hypothesis);
  expect_no_violation(c);
}

TEST(Theorems, FilterRegularFormula) {
  auto R = determinantal_ring();
  auto c = check_filter_regular_formula(ring_module(R), P(R, "z"));
  EXPECT_TRUE(c.hypothesis);
  EXPECT_EQ(c.claims[0].lhs, ExtInt(1));
  EXPECT_EQ(c.claims[0].rhs, ExtInt(1));

  auto f = nilpotent_scroll_family(2);
  auto T = GradedRing::quotient(f.ring, f.ideal);
  auto s = check_filter_regular_formula(ring_module(T), f.z);
  EXPECT_FALSE(s.hypothesis);
  EXPECT_EQ(s.claims[0].lhs, ExtInt(1));
  // (0 :_T z) is generated by y1^3, so its regularity is 3 and M/zM has 2.
  EXPECT_EQ(s.claims[0].rhs, ExtInt(3));
  expect_no_violation(s);

  auto S = poly_ring({"x", "y"});
  auto r = check_filter_regular_formula(cyclic(S, "x^3"), P(S, "y^2"));
  EXPECT_TRUE(r.hypothesis);
  EXPECT_EQ(r.conclusion(), Conclusion::Equality);
}

TEST(Theorems, ScrollFamily) {
  for (int n = 2; n <= 4; ++n) {
    auto f = nilpotent_scroll_family(n);
    EXPECT_EQ(f.ring->nvars(), n + 3);
    EXPECT_EQ(reg_via_betti(scroll_quotient(f, false)).value, ExtInt(1)) << n;
    EXPECT_EQ(reg_via_betti(scroll_quotient(f, true)).value, ExtInt(n)) << n;
  }
  auto f = nilpotent_scroll_family(2);
  auto T = GradedRing::quotient(f.ring, f.ideal);
  auto colon = colon_by_element(ring_module(T), f.z).module;
  EXPECT_EQ(colon.dimension(), ExtInt(2));
  EXPECT_EQ(depth(quotient_by_element(ring_module(T), f.z)), ExtInt(0));
  auto ann = annihilator(colon);
  EXPECT_TRUE(same_ideal(T, ann, forms(f.ring, "x1, x2, x3")));
}

TEST(Theorems, SaturatedSequences) {
  auto S = poly_ring({"x", "y"});
  auto a = saturated_sequence(ring_module(S), {ring_module(S)}, 7);
  EXPECT_EQ(a.forms.size(), 2u);
  EXPECT_EQ(saturation_failure(a.forms, ring_module(S)), "");

  auto R = determinantal_ring();
  auto b = saturated_sequence(ring_module(R), {ring_module(R), cyclic(R, "z")}, 11);
  EXPECT_EQ(b.forms.size(), 2u);
  EXPECT_EQ(saturation_failure(b.forms, ring_module(R)), "");

  EXPECT_TRUE(saturated_sequence(cyclic(S, "x, y^2"), {}, 3).forms.empty());
  EXPECT_NE(saturation_failure(forms(R, "z"), ring_module(R)), "");
}

TEST(Theorems, RingIndependence) {
  auto k1 = PresentedModule::residue_field(poly_ring({"x"}));
  auto c = check_ring_independence(k1, extend_cover(k1, "y"));
  EXPECT_EQ(c.claims[0].lhs, ExtInt(0));
  expect_no_violation(c);

  auto R = ring_module(determinantal_ring());
  auto d = check_ring_independence(R, extend_cover(R, "u"));
  EXPECT_EQ(d.claims[0].lhs, ExtInt(1));
  expect_no_violation(d);
}

TEST(Theorems, KoszulShift) {
  auto S = poly_ring({"x", "y"});
  auto c = check_koszul_shift(BoundedComplex::from_module(ring_module(S)), P(S, "x^2 + y^2"));
  EXPECT_EQ(c.claims[0].lhs, ExtInt(1));
  expect_no_violation(c);
  auto R = determinantal_ring();
  auto d = check_koszul_shift(BoundedComplex::from_module(ring_module(R)).over_cover(), P(R->cover(), "z"));
  EXPECT_EQ(d.claims[0].lhs, ExtInt(1));
}

TEST(Theorems, BassConvolution) {
  auto R = determinantal_ring();
  auto S = R->cover();
  auto c = check_bass_convolution(cyclic(S, "z"), ring_module(R).over_cover());
  EXPECT_EQ(c.claims[0].lhs, ExtInt(0)) << c.to_text();
  expect_no_violation(c);
}

TEST(Theorems, RandomCorpus) {
  auto a = random_corpus(2024), b = random_corpus(2024);
  ASSERT_EQ(a.size(), 32u);
  int binomial = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].ideal.size(), b[i].ideal.size());
    EXPECT_LE(a[i].ring->nvars(), 4);
    binomial += a[i].binomial;
    for (const auto& g : a[i].ideal) EXPECT_LE(g.degree(), 4);
  }
  EXPECT_EQ(binomial, 16);
}
