#include <gtest/gtest.h>

#include "oracles.hpp"
#include "trilocal/euclidean.hpp"

using namespace trilocal;
using trilocal::testing::int_matrix;

namespace {

void expect_smith_contract(const IntMatrix& m) {
  const auto s = smith_normal_form(m);
  EXPECT_EQ(trilocal::testing::multiply_int(trilocal::testing::multiply_int(s.U, m), s.V), s.D);
  EXPECT_EQ(abs(trilocal::testing::det_bareiss(s.U)), 1);
  EXPECT_EQ(abs(trilocal::testing::det_bareiss(s.V)), 1);
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) EXPECT_EQ(s.D(i, j), 0);
  const auto d = s.diagonal();
  for (std::size_t i = 0; i < s.rank; ++i) {
    EXPECT_GT(d[i], 0);
    if (i + 1 < s.rank) EXPECT_TRUE(d[i + 1] % d[i] == 0);
  }
  for (std::size_t i = s.rank; i < d.size(); ++i) EXPECT_EQ(d[i], 0);
}

}  // namespace

TEST(Smith, DiagTwoThree) {
  const IntMatrix m = int_matrix({{2, 0}, {0, 3}});
  const auto s = smith_normal_form(m);
  EXPECT_EQ(s.D, int_matrix({{1, 0}, {0, 6}}));
  EXPECT_EQ(trilocal::testing::invariant_factors_by_minors(m), (std::vector<mpz_class>{1, 6}));
}

TEST(Smith, ZeroOneByOne) {
  const auto s = smith_normal_form(int_matrix({{0}}));
  EXPECT_EQ(s.D, int_matrix({{0}}));
  EXPECT_EQ(s.U, int_matrix({{1}}));
  EXPECT_EQ(s.V, int_matrix({{1}}));
  EXPECT_EQ(s.rank, 0u);
}

TEST(Smith, ColumnWithUnitEntry) {
  for (long d : {2L, 7L, -5L, 0L}) {
    const IntMatrix m = int_matrix({{d}, {-1}});
    const auto s = smith_normal_form(m);
    EXPECT_EQ(s.D, int_matrix({{1}, {0}}));
    expect_smith_contract(m);
  }
}

TEST(Smith, RandomMatricesSatisfyContract) {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 200; ++i) expect_smith_contract(trilocal::testing::random_int_matrix(rng, 6, 100));
}

TEST(Smith, AgreesWithDeterminantalDivisorsOnSmallMatrices) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const IntMatrix m = trilocal::testing::random_int_matrix(rng, 3, 12);
    const auto s = smith_normal_form(m);
    std::vector<mpz_class> got = s.diagonal();
    got.resize(s.rank);
    EXPECT_EQ(got, trilocal::testing::invariant_factors_by_minors(m));
  }
}

TEST(Smith, CokernelInvariantsOverZ) {
  const auto inv = cokernel_invariants(IntegerRing{}, int_matrix({{2, 0, 0}, {0, 3, 0}}));
  EXPECT_EQ(inv.torsion, (std::vector<mpz_class>{6}));
  EXPECT_EQ(inv.free_rank, 1u);
}

TEST(Euclidean, DyadicRingTreatsTwoAsUnit) {
  const KadicRing ring{2};
  Matrix<KadicFraction> m(2, 2, ring.zero());
  m(0, 0) = ring.from_integer(2);
  m(1, 1) = ring.from_integer(3);
  const auto s = euclidean_reduce(ring, m);
  EXPECT_EQ(s.rank, 2u);
  const auto inv = cokernel_invariants(ring, m);
  ASSERT_EQ(inv.torsion.size(), 1u);
  EXPECT_EQ(inv.torsion[0].to_rational(), 3);
  EXPECT_EQ(inv.free_rank, 0u);
}

TEST(Euclidean, PolynomialDiagonalIsAlreadyReduced) {
  const RationalPolyRing ring;
  const Polynomial x = Polynomial::x(CoeffRing::Q);
  Matrix<Polynomial> single(1, 1, x);
  const auto s1 = smith_form(ring, single);
  EXPECT_EQ(s1.D(0, 0), x);

  Matrix<Polynomial> m(2, 2, ring.zero());
  m(0, 0) = x;
  m(1, 1) = x * x;
  const auto s = smith_form(ring, m);
  EXPECT_EQ(s.D(0, 0), x);
  EXPECT_EQ(s.D(1, 1), x * x);
}

TEST(Euclidean, SolveLeftFindsCombinations) {
  const IntMatrix m = int_matrix({{2, 4}, {3, 1}});
  const auto sol = solve_left(IntegerRing{}, m, std::vector<mpz_class>{5, 5});
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ((*sol)[0] * 2 + (*sol)[1] * 3, 5);
  EXPECT_EQ((*sol)[0] * 4 + (*sol)[1] * 1, 5);
  EXPECT_FALSE(solve_left(IntegerRing{}, int_matrix({{2, 0}}), std::vector<mpz_class>{1, 0}).has_value());
}
