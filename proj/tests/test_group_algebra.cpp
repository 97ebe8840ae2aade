#include <gtest/gtest.h>

#include "relstab/relstab.hpp"

#include <algorithm>
#include <array>

using namespace relstab;

namespace {

AlgebraElement random_element(SeededRng& rng, const CoefficientRing& r, const FiniteGroup& g) {
  std::vector<Int> c(g.order());
  for (auto& x : c) x = rng.between(-5, 5);
  return AlgebraElement(r, g, c);
}

FiniteGroup s3() {
  // permutations of {0,1,2}, index 0 the identity
  std::vector<std::array<int, 3>> perms{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  FiniteGroup::Table t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      for (std::size_t k = 0; k < 6; ++k)
        if (perms[k] == c) t[a][b] = k;
    }
  return FiniteGroup::validate(t, "S3");
}

}  // namespace

TEST(Group, CyclicTableAndInverses) {
  FiniteGroup c5 = FiniteGroup::cyclic(5);
  EXPECT_EQ(c5.order(), 5u);
  for (std::size_t g = 0; g < 5; ++g) {
    EXPECT_EQ(c5.multiply(g, c5.inverse(g)), 0u);
    for (std::size_t h = 0; h < 5; ++h) EXPECT_EQ(c5.multiply(g, h), (g + h) % 5);
  }
  EXPECT_TRUE(c5.is_p_group(5));
  EXPECT_FALSE(c5.is_p_group(2));
  EXPECT_FALSE(FiniteGroup::cyclic(6).is_p_group(2));
}

TEST(Group, ValidationRejectsBadTables) {
  using T = FiniteGroup::Table;
  EXPECT_THROW(FiniteGroup::validate(T{}), ValidationError);
  EXPECT_THROW(FiniteGroup::validate(T{{0, 1}, {1}}), ValidationError);
  EXPECT_THROW(FiniteGroup::validate(T{{1, 0}, {0, 1}}), ValidationError);   // identity not at 0
  EXPECT_THROW(FiniteGroup::validate(T{{0, 1}, {1, 1}}), ValidationError);   // not latin
  EXPECT_THROW(FiniteGroup::validate(T{{0, 2}, {1, 0}}), ValidationError);   // out of range
  EXPECT_THROW(FiniteGroup::validate(T{{0, 1}, {1, 0}}, "C2", {"e"}), ValidationError);
  // a latin square with identity that is not associative
  T bad{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_THROW(FiniteGroup::validate(bad), ValidationError);
}

TEST(Group, NonAbelianAndProducts) {
  FiniteGroup s = s3();
  EXPECT_EQ(s.order(), 6u);
  bool commutes = true;
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) commutes = commutes && s.multiply(a, b) == s.multiply(b, a);
  EXPECT_FALSE(commutes);
  FiniteGroup v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  EXPECT_EQ(v4.order(), 4u);
  EXPECT_TRUE(v4.is_p_group(2));
  for (std::size_t g = 0; g < 4; ++g) EXPECT_EQ(v4.multiply(g, g), 0u);
  // generators generate
  std::vector<bool> seen(6, false);
  std::vector<std::size_t> frontier{0};
  seen[0] = true;
  while (!frontier.empty()) {
    std::size_t x = frontier.back();
    frontier.pop_back();
    for (std::size_t g : s.generators())
      if (!seen[s.multiply(x, g)]) seen[s.multiply(x, g)] = true, frontier.push_back(s.multiply(x, g));
  }
  EXPECT_EQ(std::count(seen.begin(), seen.end(), true), 6);
}

TEST(GroupAlgebra, RingAxioms) {
  const CoefficientRing z = CoefficientRing::integers();
  FiniteGroup s = s3();
  SeededRng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    AlgebraElement a = random_element(rng, z, s), b = random_element(rng, z, s), c = random_element(rng, z, s);
    EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
    EXPECT_EQ(multiply(a, b + c), multiply(a, b) + multiply(a, c));
    EXPECT_EQ(multiply(AlgebraElement::one(z, s), a), a);
    EXPECT_EQ(augmentation(multiply(a, b)), augmentation(a) * augmentation(b));
    EXPECT_EQ(antipode(multiply(a, b)), multiply(antipode(b), antipode(a)));
    EXPECT_EQ(antipode(antipode(a)), a);
  }
}

TEST(GroupAlgebra, NormAbsorbsGroupElements) {
  const CoefficientRing z = CoefficientRing::integers();
  FiniteGroup c3 = FiniteGroup::cyclic(3);
  AlgebraElement n = AlgebraElement::norm(z, c3);
  for (std::size_t g = 0; g < 3; ++g) {
    AlgebraElement x = AlgebraElement::basis(z, c3, g);
    EXPECT_EQ(multiply(x, n), n);
    EXPECT_EQ(multiply(n, x - AlgebraElement::one(z, c3)), AlgebraElement(z, c3));
  }
  EXPECT_EQ(multiply(n, n), n.scaled(3));
}

TEST(GroupAlgebra, CoefficientsReducedOverPrimePower) {
  const CoefficientRing z4 = CoefficientRing::prime_power(2, 2);
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  AlgebraElement a(z4, c2, {Int(5), Int(-1)});
  EXPECT_EQ(a[0], 1);
  EXPECT_EQ(a[1], 3);
  // (1 + x)^2 = 2(1 + x) and (1 + x)^3 = 4(1 + x) = 0
  AlgebraElement s = AlgebraElement::norm(z4, c2);
  EXPECT_EQ(multiply(multiply(s, s), s), AlgebraElement(z4, c2));
  EXPECT_THROW(AlgebraElement(z4, c2, {Int(1)}), ValidationError);
}

TEST(GroupAlgebra, RegularRepresentationIsHomomorphism) {
  FiniteGroup s = s3();
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t h = 0; h < 6; ++h)
      EXPECT_EQ(regular_representation(s, g) * regular_representation(s, h), regular_representation(s, s.multiply(g, h)));
  EXPECT_EQ(regular_representation(s, 0), Matrix::identity(6));
}

TEST(GroupAlgebra, RightMultiplicationMatchesProduct) {
  const CoefficientRing z = CoefficientRing::integers();
  FiniteGroup s = s3();
  SeededRng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    AlgebraElement a = random_element(rng, z, s), b = random_element(rng, z, s);
    Matrix col(6, 1);
    for (std::size_t g = 0; g < 6; ++g) col(g, 0) = b[g];
    Matrix prod = right_multiplication(a) * col;
    AlgebraElement ba = multiply(b, a);
    for (std::size_t g = 0; g < 6; ++g) EXPECT_EQ(prod(g, 0), ba[g]);
  }
}

TEST(Ring, PrimePowerValidation) {
  EXPECT_THROW(CoefficientRing::prime_power(6, 2), ValidationError);
  EXPECT_THROW(CoefficientRing::prime_power(3, 0), ValidationError);
  CoefficientRing r = CoefficientRing::prime_power(3, 2);
  EXPECT_EQ(r.modulus(), 9);
  EXPECT_TRUE(r.is_unit(2));
  EXPECT_FALSE(r.is_unit(6));
  EXPECT_TRUE(CoefficientRing::integers().is_unit(-1));
  EXPECT_FALSE(CoefficientRing::integers().is_unit(2));
}
