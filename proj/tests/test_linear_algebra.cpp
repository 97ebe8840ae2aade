#include <gtest/gtest.h>

#include "oracles.hpp"

#include <numeric>

using namespace relstab;

namespace {

Matrix random_matrix(SeededRng& rng, std::size_t r, std::size_t c, long long bound) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.between(-bound, bound);
  return m;
}

}  // namespace

TEST(SmithNormalForm, MatchesDeterminantalDivisorsOverZ) {
  const CoefficientRing z = CoefficientRing::integers();
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    SeededRng rng(seed);
    const std::size_t r = rng.between(1, 4), c = rng.between(1, 4);
    Matrix a = random_matrix(rng, r, c, 9);
    SmithDecomposition s = smith_normal_form(RMatrix(z, a));
    std::vector<Int> d = s.diagonal();
    std::vector<Int> expect = oracle::invariant_factors(a);
    ASSERT_EQ(d.size(), expect.size());
    for (std::size_t i = 0; i < d.size(); ++i) EXPECT_EQ(abs(d[i]), expect[i]) << "seed " << seed << " index " << i;
    EXPECT_EQ((s.u * s.s * s.v).entries, a) << "seed " << seed;
    EXPECT_EQ((s.u * s.u_inv).entries, Matrix::identity(r));
    EXPECT_EQ((s.v * s.v_inv).entries, Matrix::identity(c));
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      if (d[i + 1] != 0) {
        EXPECT_EQ(d[i + 1] % d[i], 0);
      }
  }
}

TEST(SmithNormalForm, PrimePowerAgreesWithIntegerFactors) {
  const CoefficientRing z8 = CoefficientRing::prime_power(2, 3);
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    SeededRng rng(1000 + seed);
    const std::size_t r = rng.between(1, 4), c = rng.between(1, 4);
    Matrix a = random_matrix(rng, r, c, 9);
    SmithDecomposition s = smith_normal_form(RMatrix(z8, a));
    std::vector<Int> d = s.diagonal(), expect = oracle::invariant_factors(a);
    ASSERT_EQ(d.size(), expect.size());
    for (std::size_t i = 0; i < d.size(); ++i) EXPECT_EQ(gcd(d[i], Int(8)), gcd(expect[i], Int(8))) << "seed " << seed;
    EXPECT_EQ(s.u * s.s * s.v, RMatrix(z8, a));
    EXPECT_EQ(s.u * s.u_inv, RMatrix(z8, Matrix::identity(r)));
    EXPECT_EQ(s.v * s.v_inv, RMatrix(z8, Matrix::identity(c)));
  }
}

TEST(SmithNormalForm, KnownExample) {
  Matrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  SmithDecomposition s = smith_normal_form(RMatrix(CoefficientRing::integers(), a));
  std::vector<Int> d = s.diagonal();
  for (auto& x : d) x = abs(x);
  EXPECT_EQ(d, (std::vector<Int>{2, 6, 12}));
  EXPECT_EQ(s.rank, 3u);
}

TEST(Congruences, AgreeWithExhaustiveSearch) {
  const std::vector<long long> mods{2, 3, 4, 5, 6};
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    SeededRng rng(5000 + seed);
    const std::size_t r = rng.between(1, 3), c = rng.between(1, 2);
    Matrix a = random_matrix(rng, r, c, 4), b = random_matrix(rng, r, 1, 6);
    std::vector<Int> moduli;
    long long period = 1;
    for (std::size_t i = 0; i < r; ++i) {
      long long m = rng.pick(mods);
      moduli.push_back(m);
      period = std::lcm(period, m);
    }
    auto sol = detail::solve_integer_congruences(a, b, moduli);
    std::vector<Matrix> found;
    for (long long x0 = 0; x0 < period; ++x0)
      for (long long x1 = 0; x1 < (c > 1 ? period : 1); ++x1) {
        Matrix x(c, 1);
        x(0, 0) = x0;
        if (c > 1) x(1, 0) = x1;
        if (congruent_rows(a * x, b, moduli)) found.push_back(x);
      }
    ASSERT_EQ(sol.has_value(), !found.empty()) << "seed " << seed;
    if (!sol) continue;
    EXPECT_TRUE(congruent_rows(a * sol->particular, b, moduli));
    EXPECT_TRUE(congruent_rows(a * sol->homogeneous, Matrix(r, sol->homogeneous.cols()), moduli));
    HermiteBasis hb = hermite_basis(sol->homogeneous);
    for (const Matrix& x : found) EXPECT_TRUE(hb.coordinates(x - sol->particular).has_value()) << "seed " << seed;
  }
}

TEST(Congruences, ExactSystemsWithPlantedSolution) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SeededRng rng(7000 + seed);
    const std::size_t r = rng.between(1, 5), c = rng.between(1, 5);
    Matrix a = random_matrix(rng, r, c, 20), x = random_matrix(rng, c, 2, 20);
    Matrix b = a * x;
    std::vector<Int> moduli(r, Int(0));
    auto sol = detail::solve_integer_congruences(a, b, moduli);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(a * sol->particular, b);
    EXPECT_TRUE((a * sol->homogeneous).is_zero());
    // x differs from the particular solution by a homogeneous one
    EXPECT_TRUE(hermite_basis(sol->homogeneous).coordinates(x - sol->particular).has_value());
  }
}

TEST(Congruences, InconsistentSystem) {
  Matrix a{{2}}, b{{1}};
  std::vector<Int> exact{0}, mod4{4};
  EXPECT_FALSE(detail::solve_integer_congruences(a, b, exact).has_value());
  EXPECT_FALSE(detail::solve_integer_congruences(a, b, mod4).has_value());
  std::vector<Int> mod3{3};
  auto s = detail::solve_integer_congruences(a, b, mod3);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(mod_floor(2 * s->particular(0, 0) - 1, Int(3)), 0);
}

TEST(Congruences, OverPrimePowerRing) {
  const CoefficientRing z4 = CoefficientRing::prime_power(2, 2);
  RMatrix a(z4, Matrix{{2, 0}, {0, 1}}), b(z4, Matrix{{2}, {3}});
  std::vector<Int> moduli{0, 0};
  auto s = solve_congruence_system(a, b, moduli);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ((a.entries * s->particular).reduced_rows(std::vector<Int>{4, 4}), b.entries);
  RMatrix bad(z4, Matrix{{1}, {0}});
  EXPECT_FALSE(solve_congruence_system(a, bad, moduli).has_value());
}

TEST(Hermite, CanonicalForLatticeNotGenerators) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    SeededRng rng(9000 + seed);
    Matrix g = random_matrix(rng, 4, 3, 10);
    Matrix u{{1, 2, 0}, {0, 1, 0}, {3, -1, 1}};  // unimodular
    EXPECT_EQ(hermite_basis(g).basis, hermite_basis(g * u).basis);
    Matrix extra = g * random_matrix(rng, 3, 2, 5);
    EXPECT_EQ(hermite_basis(g).basis, hermite_basis(Matrix::hstack(g, extra)).basis);
  }
}

TEST(Lll, ReducesKnownBasis) {
  Matrix b = Matrix{{1, -1, 3}, {1, 0, 5}, {1, 2, 6}};  // columns (1,1,1), (-1,0,2), (3,5,6)
  Matrix orig = b, u = Matrix::identity(3), inv = Matrix::identity(3);
  lll_reduce(b, &u, &inv);
  EXPECT_EQ(orig * u, b);
  EXPECT_EQ(u * inv, Matrix::identity(3));
  Int first = b(0, 0) * b(0, 0) + b(1, 0) * b(1, 0) + b(2, 0) * b(2, 0);
  EXPECT_EQ(first, 1);
  EXPECT_EQ(hermite_basis(orig).basis, hermite_basis(b).basis);
}

TEST(Lll, PreservesLatticeAndShrinksSkewedBases) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    SeededRng rng(11000 + seed);
    Matrix b = random_matrix(rng, 5, 3, 9);
    if (detail::rank_mod_large_prime(b) < 3) continue;
    Matrix skew{{1, 0, 0}, {1000, 1, 0}, {-777, 333, 1}};
    Matrix start = b * skew, work = start, u = Matrix::identity(3), inv = Matrix::identity(3);
    lll_reduce(work, &u, &inv);
    EXPECT_EQ(start * u, work);
    EXPECT_EQ(u * inv, Matrix::identity(3));
    EXPECT_EQ(hermite_basis(start).basis, hermite_basis(work).basis);
    EXPECT_LE(work.max_bits(), b.max_bits() + 4);
  }
}

TEST(LatticeQuotient, InvariantFactors) {
  Matrix l = Matrix::identity(2);
  Matrix d{{2, 0}, {0, 3}};
  EXPECT_EQ(quotient_lattice(l, d).factors, (std::vector<Int>{6}));
  Matrix l3 = Matrix::identity(3), d3{{2}, {4}, {6}};
  EXPECT_EQ(quotient_lattice(l3, d3).factors, (std::vector<Int>{2, 0, 0}));
  // 2Z^2 / <(2,4)> = Z
  Matrix l2 = Matrix::identity(2).scaled(2), d2{{2}, {4}};
  LatticeQuotient q = quotient_lattice(l2, d2);
  EXPECT_EQ(q.factors, (std::vector<Int>{0}));
  auto c = q.coordinates(d2);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(c->is_zero());
}

TEST(LatticeQuotient, CoordinatesRoundTrip) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    SeededRng rng(13000 + seed);
    Matrix l = random_matrix(rng, 4, 4, 6);
    Matrix d = l * random_matrix(rng, 4, 3, 4);
    LatticeQuotient q = quotient_lattice(l, d);
    // generators have unit coordinates
    auto c = q.coordinates(q.generators);
    ASSERT_TRUE(c.has_value());
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j) {
        Int expect = i == j ? 1 : 0;
        if (q.factors[i] != 0) expect = mod_floor(expect, q.factors[i]);
        EXPECT_EQ((*c)(i, j), expect);
      }
  }
}

TEST(Homology, ShortComplexes) {
  // Z -2-> Z -0-> Z : homology in the middle is Z/2
  Matrix two{{2}}, zero{{0}};
  std::vector<Int> free1{0};
  EXPECT_EQ(homology_at(two, free1, zero, free1), (std::vector<Int>{2}));
  // Z -2-> Z -1-> Z/2 : kernel 2Z, image 2Z
  Matrix one{{1}};
  std::vector<Int> mod2{2};
  EXPECT_TRUE(homology_at(two, free1, one, mod2).empty());
  EXPECT_THROW(homology_at(one, free1, one, free1), ValidationError);
}

TEST(RankModPrime, MatchesSmithRank) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    SeededRng rng(15000 + seed);
    Matrix a = random_matrix(rng, rng.between(1, 5), rng.between(1, 5), 3);
    EXPECT_EQ(detail::rank_mod_large_prime(a), smith_normal_form(RMatrix(CoefficientRing::integers(), a)).rank);
  }
}

TEST(EntryCap, OverflowIsReported) {
  const std::size_t saved = max_entry_bits();
  set_max_entry_bits(16);
  Matrix a{{1 << 12}};
  EXPECT_THROW((a * a).check_entries(), EntryOverflow);
  set_max_entry_bits(saved);
  EXPECT_NO_THROW((a * a).check_entries());
}
