#include <gtest/gtest.h>

#include "trilocal/expr_parser.hpp"
#include "trilocal/fraction_localization.hpp"

using namespace trilocal;

namespace {

CentralPair pair_for(const char* json, long a0) {
  auto f = make_family(json);
  return make_central_pair(f, f->a_scalar(a0), f->b_scalar(a0));
}

// Minimal r with q * c^r in Z[1/base] (base 1 means Z): the oracle for fraction_form.
unsigned long minimal_exponent(const mpq_class& q, long c, long base) {
  mpz_class den = q.get_den();
  for (mpz_class g = gcd(den, mpz_class(base)); g != 1; g = gcd(den, mpz_class(base))) den /= g;
  unsigned long r = 0;
  while (den != 1) {
    const mpz_class g = gcd(den, mpz_class(c));
    if (g == 1) throw std::logic_error("denominator has primes outside c");
    den /= g;
    ++r;
  }
  return r;
}

}  // namespace

TEST(CentralPair, RequiresCentralScalars) {
  auto t = make_family(R"({"kind":"tensor-free","A_gens":["s"],"B_gens":["u"]})");
  EXPECT_THROW(make_central_pair(t, t->parse_a("s"), t->b_scalar(1)), DomainError);
  auto r = make_family(R"({"kind":"regular"})");
  EXPECT_THROW(make_central_pair(r, r->a_scalar(2), r->b_scalar(3)), DomainError);
  EXPECT_NO_THROW(make_central_pair(r, r->a_scalar(2), r->b_scalar(2)));
}

TEST(Phi, UnitalAndTargetsScaledFamily) {
  const auto pair = pair_for(R"({"kind":"regular"})", 2);
  EXPECT_EQ(pair.target->name(), "scaled(k=2)");
  EXPECT_EQ(phi(TElement::one(pair.source), pair), TElement::one(pair.target));
  // φ(x_{a0 p}) x_p = 1 in the target.
  EXPECT_EQ(phi(central_element(pair), pair) * t_generator(pair.target, pair.source->p()),
            TElement::one(pair.target));
}

TEST(FractionForm, DyadicExamples) {
  const auto pair = pair_for(R"({"kind":"regular"})", 2);
  const auto e = parse_and_normalize("x[5]*x[1]*x[1]", pair.target);
  EXPECT_EQ(oracle_rational(family_iso(e)), mpq_class(5, 8));
  const auto f = fraction_form(e, pair);
  EXPECT_EQ(f.exponent, 3u);
  EXPECT_EQ(f.numerator, TElement::scalar(pair.source, 5));
  EXPECT_EQ(reassemble(f, pair), e);

  const auto one = fraction_form(TElement::one(pair.target), pair);
  EXPECT_EQ(one.exponent, 0u);
  EXPECT_EQ(one.numerator, TElement::one(pair.source));

  const auto six = fraction_form(parse_and_normalize("x[12]", pair.target), pair);
  EXPECT_EQ(six.exponent, 0u);
  EXPECT_EQ(six.numerator, TElement::scalar(pair.source, 6));
}

TEST(FractionForm, MinimalExponentMatchesOracle) {
  for (auto [json, a0, base] : {std::tuple{R"({"kind":"regular"})", 2L, 1L},
                             std::tuple{R"({"kind":"scaled","k":2})", 3L, 2L}}) {
    const auto pair = pair_for(json, a0);
    Rng rng(13);
    for (int i = 0; i < 200; ++i) {
      const auto e = t_normalize(random_expr(*pair.target, rng), pair.target);
      const auto f = fraction_form(e, pair);
      EXPECT_EQ(reassemble(f, pair), e);
      EXPECT_EQ(f.exponent, minimal_exponent(*oracle_rational(family_iso(e)), a0, base)) << e.to_string();
    }
  }
}

TEST(Factorization, RationalInclusion) {
  const auto pair = pair_for(R"({"kind":"regular"})", 2);
  const auto f = rational_inclusion(pair.source);
  const Scalar f_inv = Scalar(1, 2);
  for (long m : {1L, 3L, -7L, 10L}) {
    const auto xm = parse_and_normalize("x[" + std::to_string(m) + "]", pair.target);
    EXPECT_EQ(factor_inverting_hom(f, f_inv, xm, pair), Scalar(m, 2));
    const auto src = t_generator(pair.source, pair.source->parse_melem(std::to_string(m)));
    EXPECT_EQ(factor_inverting_hom(f, f_inv, phi(src, pair), pair), evaluate(f, src));
  }
  EXPECT_EQ(factor_inverting_hom(f, f_inv, TElement::one(pair.target), pair), Scalar(1));
  EXPECT_THROW(factor_inverting_hom(f, Scalar(1, 3), TElement::one(pair.target), pair), DomainError);
}

TEST(Proposition, SuitesPass) {
  for (auto [json, a0] : {std::pair{R"({"kind":"regular"})", 2L}, std::pair{R"({"kind":"scaled","k":2})", 3L}}) {
    const auto pair = pair_for(json, a0);
    const auto r = verify_proposition(pair, 3, 100);
    EXPECT_TRUE(r.passed()) << json;
    EXPECT_TRUE(check_central(pair, 3, 100).passed());
  }
}
