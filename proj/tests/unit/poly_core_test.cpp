#include <gtest/gtest.h>

#include <random>

#include "creg/error.hpp"
#include "creg/graded_map.hpp"
#include "creg/poly_parse.hpp"
#include "creg/ring.hpp"

using namespace creg;

namespace {

Monomial mono(std::initializer_list<int> e) {
  std::vector<int> v(e);
  return Monomial(v);
}

}  // namespace

TEST(Field, ReducesAndInverts) {
  PrimeField F;
  EXPECT_EQ(F.characteristic(), 32003u);
  EXPECT_EQ(F.from_int(-1), 32002u);
  EXPECT_EQ(F.from_int(32003 * 5 + 7), 7u);
  std::mt19937 rng(7);
  for (int k = 0; k < 200; ++k) {
    Scalar a = rng() % 32003, b = rng() % 32003, c = rng() % 32003;
    EXPECT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
    EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
    if (a != 0) EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
  }
  EXPECT_THROW(F.inv(0), DomainError);
  EXPECT_THROW(PrimeField(32004), DomainError);
}

TEST(Monomial, GrevlexComparisons) {
  Monomial x2 = mono({2, 0}), xy = mono({1, 1}), x = mono({1, 0}), y2 = mono({0, 2});
  EXPECT_GT(compare_monomials(MonomialOrder::Grevlex, x2, xy), 0);
  EXPECT_EQ(compare_monomials(MonomialOrder::Grevlex, xy, xy), 0);
  EXPECT_LT(compare_monomials(MonomialOrder::Grevlex, x, y2), 0);
  EXPECT_THROW(compare_monomials(MonomialOrder::Grevlex, x, 2, x, 3), DomainError);
}

TEST(Monomial, OrderIsMultiplicative) {
  std::mt19937 rng(11);
  auto rnd = [&] {
    std::vector<int> e(4);
    for (auto& v : e) v = static_cast<int>(rng() % 4);
    return Monomial(e);
  };
  for (int k = 0; k < 500; ++k) {
    Monomial a = rnd(), b = rnd(), c = rnd();
    for (auto ord : {MonomialOrder::Grevlex, MonomialOrder::Lex}) {
      int ab = compare_monomials(ord, a, b);
      EXPECT_EQ(ab, -compare_monomials(ord, b, a));
      if (ab > 0) EXPECT_GT(compare_monomials(ord, a * c, b * c), 0);
    }
  }
}

TEST(Monomial, ExponentCap) {
  std::vector<int> big{65535};
  Monomial m(big);
  EXPECT_THROW(m * Monomial::variable(0), OverflowError);
  std::vector<int> too_big{65536};
  EXPECT_THROW(Monomial{too_big}, OverflowError);
}

TEST(Polynomial, Arithmetic) {
  auto S = GradedRing::polynomial(PrimeField(), {"x", "y"});
  Polynomial x = S->variable(0), y = S->variable(1);
  EXPECT_EQ((x + y) * (x - y), parse_polynomial("x^2 - y^2", *S));
  EXPECT_TRUE((x * S->zero()).is_zero());
  auto S2 = GradedRing::polynomial(PrimeField(2), {"x", "y"});
  Polynomial a = S2->variable(0) + S2->variable(1);
  EXPECT_EQ(a * a, parse_polynomial("x^2 + y^2", *S2));
}

TEST(Polynomial, HomogeneousProductsAddDegrees) {
  auto S = GradedRing::polynomial(PrimeField(), {"x", "y", "z"});
  Polynomial f = parse_polynomial("x^2 + 3*y*z - z^2", *S);
  Polynomial g = parse_polynomial("x*y*z - 2*y^3", *S);
  ASSERT_TRUE(f.is_homogeneous());
  Polynomial h = f * g;
  EXPECT_TRUE(h.is_homogeneous());
  EXPECT_EQ(h.degree(), 5);
}

TEST(Polynomial, ParserReportsErrors) {
  auto S = GradedRing::polynomial(PrimeField(), {"x", "y"});
  EXPECT_THROW(parse_polynomial("x + w", *S), DomainError);
  EXPECT_THROW(parse_polynomial("x + ", *S), DomainError);
  EXPECT_EQ(parse_polynomial("-(x)", *S), -S->variable(0));
}

TEST(GradedMap, HomogeneityCheck) {
  auto S = GradedRing::polynomial(PrimeField(), {"x", "y"});
  PrimeField F = S->field();
  Polynomial x = S->variable(0), y = S->variable(1);
  auto row = GradedMap::from_rows(F, GradedFreeModule({1, 1}), GradedFreeModule({0}), {{x, y}});
  EXPECT_TRUE(row.is_homogeneous());
  auto bad = GradedMap::from_rows(F, GradedFreeModule({1}), GradedFreeModule({0}), {{x * x}});
  EXPECT_FALSE(bad.is_homogeneous());
  auto zero = GradedMap::zero(F, GradedFreeModule({3, -2}), GradedFreeModule({5}));
  EXPECT_TRUE(zero.is_homogeneous());
}

TEST(GradedMap, ComposeDualAndKronecker) {
  auto S = GradedRing::polynomial(PrimeField(), {"x", "y"});
  PrimeField F = S->field();
  Polynomial x = S->variable(0), y = S->variable(1);
  auto d1 = GradedMap::from_rows(F, GradedFreeModule({1, 1}), GradedFreeModule({0}), {{x, y}});
  auto d2 = GradedMap::from_rows(F, GradedFreeModule({2}), GradedFreeModule({1, 1}), {{y}, {-x}});
  EXPECT_TRUE(d1.compose(d2).is_zero());
  auto t = d1.dual();
  EXPECT_EQ(t.source().twists, std::vector<int>({0}));
  EXPECT_EQ(t.target().twists, std::vector<int>({-1, -1}));
  EXPECT_TRUE(t.is_homogeneous());
  EXPECT_TRUE(d2.dual().compose(d1.dual()).is_zero());
  auto k = kron_identity(d1, GradedFreeModule({0, 3}));
  EXPECT_TRUE(k.is_homogeneous());
  EXPECT_TRUE(k.compose(kron_identity(d2, GradedFreeModule({0, 3}))).is_zero());
  auto k2 = identity_kron(GradedFreeModule({0, 3}), d1);
  EXPECT_TRUE(k2.is_homogeneous());
  EXPECT_EQ(k2.entry(1, 3), y);
}
