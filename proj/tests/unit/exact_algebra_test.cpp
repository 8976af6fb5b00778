#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "trilocal/error.hpp"
#include "trilocal/free_algebra.hpp"
#include "trilocal/kadic.hpp"
#include "trilocal/polynomial.hpp"
#include "trilocal/scalar.hpp"

using namespace trilocal;

namespace {

// Small-integer fraction arithmetic used as an oracle for Scalar.
struct Frac {
  long n, d;
};
Frac reduce(long n, long d) {
  if (d < 0) n = -n, d = -d;
  const long g = std::gcd(n, d);
  return g == 0 ? Frac{0, 1} : Frac{n / g, d / g};
}
bool same(const Scalar& s, Frac f) { return s.numerator() == f.n && s.denominator() == f.d; }

}  // namespace

TEST(Scalar, AddsByCrossMultiplication) {
  EXPECT_EQ(Scalar(1, 2) + Scalar(1, 3), Scalar(5, 6));
  EXPECT_EQ(Scalar::parse("-4/6"), Scalar(-2, 3));
}

TEST(Scalar, FieldLawsAgainstSmallFractionOracle) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  for (int i = 0; i < 500; ++i) {
    const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const Scalar x(a, b), y(c, d);
    EXPECT_TRUE(same(x + y, reduce(a * d + c * b, b * d)));
    EXPECT_TRUE(same(x * y, reduce(a * c, b * d)));
    EXPECT_EQ(x * Scalar(1), x);
    EXPECT_TRUE((x + (-x)).is_zero());
    if (!x.is_zero()) EXPECT_EQ(x * x.inverse(), Scalar(1));
  }
}

TEST(Scalar, InverseOfZeroThrows) { EXPECT_THROW((void)Scalar(0).inverse(), Error); }

TEST(Kadic, NormalizeDividesOutBase) {
  const auto a = kadic_normalize(2, 4, 1);
  EXPECT_EQ(a.numerator(), 2);
  EXPECT_EQ(a.exponent(), 0u);
  const auto b = kadic_normalize(2, 3, 1);
  EXPECT_EQ(b.numerator(), 3);
  EXPECT_EQ(b.exponent(), 1u);
  const auto c = kadic_normalize(2, 0, 5);
  EXPECT_EQ(c.numerator(), 0);
  EXPECT_EQ(c.exponent(), 0u);
}

TEST(Kadic, ArithmeticMatchesRationals) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-100, 100);
  std::uniform_int_distribution<unsigned long> exp(0, 4);
  for (long k : {2L, 3L, 6L}) {
    for (int i = 0; i < 200; ++i) {
      const auto x = kadic_normalize(k, num(rng), exp(rng));
      const auto y = kadic_normalize(k, num(rng), exp(rng));
      EXPECT_EQ((x + y).to_rational(), x.to_rational() + y.to_rational());
      EXPECT_EQ((x * y).to_rational(), x.to_rational() * y.to_rational());
      EXPECT_EQ((x - y).to_rational(), x.to_rational() - y.to_rational());
    }
  }
}

TEST(Kadic, FromRationalRejectsForeignDenominators) {
  EXPECT_TRUE(KadicFraction::from_rational(2, mpq_class(5, 8)).has_value());
  EXPECT_FALSE(KadicFraction::from_rational(2, mpq_class(1, 3)).has_value());
  EXPECT_TRUE(KadicFraction::from_rational(6, mpq_class(1, 3)).has_value());
}

TEST(Kadic, UnitsAreProductsOfBasePrimes) {
  EXPECT_TRUE(kadic_normalize(2, 8, 0).is_unit());
  EXPECT_TRUE(kadic_normalize(2, -1, 3).is_unit());
  EXPECT_FALSE(kadic_normalize(2, 3, 0).is_unit());
  EXPECT_TRUE(kadic_normalize(6, 3, 0).is_unit());
}

TEST(FreeAlgebra, ConcatenatesWords) {
  auto alpha = make_alphabet({"s", "u"});
  const auto s = FreeAlgebraElement::generator(CoeffRing::Q, alpha, "s");
  const auto u = FreeAlgebraElement::generator(CoeffRing::Q, alpha, "u");
  const auto su = s * u;
  EXPECT_EQ(su.coefficient({0, 1}), Scalar(1));
  EXPECT_EQ(su.terms().size(), 1u);

  const auto prod = (s + u) * s;
  EXPECT_EQ(prod.coefficient({0, 0}), Scalar(1));
  EXPECT_EQ(prod.coefficient({1, 0}), Scalar(1));
  EXPECT_EQ(prod.terms().size(), 2u);

  const auto one = FreeAlgebraElement::scalar(CoeffRing::Q, alpha, 1);
  EXPECT_EQ(one * prod, prod);
  EXPECT_NE(s * u, u * s);
}

TEST(FreeAlgebra, RingLawsOnRandomElements) {
  auto alpha = make_alphabet({"a", "b"});
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> letter(0, 1), len(0, 3), coeff(-3, 3);
  auto random = [&] {
    FreeAlgebraElement e(CoeffRing::Z, alpha);
    for (int t = 0; t < 3; ++t) {
      Word w;
      for (int i = len(rng); i > 0; --i) w.push_back(letter(rng));
      e.add_term(w, coeff(rng));
    }
    return e;
  };
  for (int i = 0; i < 100; ++i) {
    const auto x = random(), y = random(), z = random();
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_TRUE((x - x).is_zero());
  }
}

TEST(FreeAlgebra, RejectsMixedAlphabets) {
  const auto s = FreeAlgebraElement::generator(CoeffRing::Q, make_alphabet({"s"}), "s");
  const auto t = FreeAlgebraElement::generator(CoeffRing::Q, make_alphabet({"t"}), "t");
  EXPECT_THROW((void)(s * t), MismatchError);
}

TEST(Polynomial, ConvolutionMatchesHandComputation) {
  const Polynomial x = Polynomial::x(CoeffRing::Q);
  const Polynomial two_3x(CoeffRing::Q, {2, 3});
  EXPECT_EQ(two_3x * x, Polynomial(CoeffRing::Q, {0, 2, 3}));
  const Polynomial one = Polynomial::constant(CoeffRing::Q, 1);
  EXPECT_EQ(two_3x * one, two_3x);
  EXPECT_EQ((one + x) * (one - x), Polynomial(CoeffRing::Q, {1, 0, -1}));
}

TEST(Polynomial, DivmodReconstructsDividend) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int i = 0; i < 100; ++i) {
    Polynomial a(CoeffRing::Q, {c(rng), c(rng), c(rng), c(rng)});
    Polynomial b(CoeffRing::Q, {c(rng), c(rng), 1});
    auto [q, r] = a.divmod(b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}
