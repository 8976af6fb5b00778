#include <gtest/gtest.h>

#include "trilocal/expr_parser.hpp"
#include "trilocal/t_ring.hpp"
#include "trilocal/verify.hpp"

using namespace trilocal;

namespace {

FamilyPtr fam(const char* json) { return make_family(json); }

const char* const kAllFamilies[] = {
    R"({"kind":"regular","ring":"Z"})",
    R"({"kind":"regular","ring":"Q"})",
    R"({"kind":"double","ring":"Q"})",
    R"({"kind":"tensor-free","A_gens":["s","t"],"B_gens":["u"]})",
    R"({"kind":"hnn-free","A_gens":["s","t"]})",
    R"({"kind":"scaled","k":2})",
    R"({"kind":"scaled","k":6})",
};

mpq_class rational(const TElement& e) {
  auto q = family_iso(e);
  if (q.holds<KadicFraction>()) return q.as<KadicFraction>().to_rational();
  return q.as<Scalar>().value();
}

TElement norm(const char* text, const FamilyPtr& f) { return parse_and_normalize(text, f); }

}  // namespace

TEST(TRing, GeneratorOfPIsOne) {
  for (const char* j : kAllFamilies) {
    auto f = fam(j);
    EXPECT_EQ(t_generator(f, f->p()), TElement::one(f)) << j;
    EXPECT_EQ(rho_M(f, f->p()), TElement::one(f)) << j;
  }
}

TEST(TRing, ScaledIrreducibleLetter) {
  auto f = fam(R"({"kind":"scaled","k":2})");
  const auto x3 = norm("x[3]", f);
  EXPECT_EQ(x3.to_string(), "x[3]");
  EXPECT_EQ(rational(x3), mpq_class(3, 2));
  EXPECT_EQ(norm("x[4]", f), TElement::scalar(f, 2));
  EXPECT_EQ(rational(rho_A(f, f->a_scalar(3))), 3);
  EXPECT_EQ(rho_A(f, f->a_scalar(3)), norm("x[6]", f));
}

TEST(TRing, RegularLettersAreScalars) {
  auto f = fam(R"({"kind":"regular"})");
  EXPECT_EQ(norm("x[7]", f), TElement::scalar(f, 7));
  EXPECT_EQ(norm("x[2]*x[3]", f), TElement::scalar(f, 6));
  EXPECT_EQ(rational(norm("x[2]*x[3]", f)), 6);
}

TEST(TRing, DoublePolynomialOracle) {
  auto f = fam(R"({"kind":"double"})");
  const auto e = norm("x[(2,3)]*x[(0,1)]", f);
  EXPECT_EQ(family_iso(e).as<Polynomial>(), Polynomial(CoeffRing::Q, {0, 2, 3}));
  EXPECT_EQ(family_iso(norm("x[(2,3)]", f)).as<Polynomial>(), Polynomial(CoeffRing::Q, {2, 3}));
  EXPECT_EQ(t_eq(norm("x[(0,1)]", f), TElement::one(f)), TEq::distinct);
}

TEST(TRing, TensorFreeOracle) {
  auto f = fam(R"({"kind":"tensor-free","A_gens":["s"],"B_gens":["u"]})");
  const auto e = rho_M(f, f->parse_melem("t(s,u)"));
  EXPECT_EQ(e, rho_A(f, f->parse_a("s")) * rho_B(f, f->parse_b("u")));
  EXPECT_EQ(family_iso(e).to_string(), "s*u");
  EXPECT_NE(family_iso(e), family_iso(rho_B(f, f->parse_b("u")) * rho_A(f, f->parse_a("s"))));
}

TEST(TRing, HnnFreeOracle) {
  auto f = fam(R"({"kind":"hnn-free","A_gens":["s","t"]})");
  EXPECT_EQ(family_iso(norm("x[h(s,t)]", f)).to_string(), "s*x*t");
  EXPECT_EQ(family_iso(norm("x[h(1,1)]", f)).to_string(), "x");
  EXPECT_EQ(family_iso(norm("x[h(s)]", f)).to_string(), "s");
}

TEST(TRing, ScaledEquality) {
  auto f = fam(R"({"kind":"scaled","k":2})");
  EXPECT_EQ(t_eq(norm("x[3]*x[3]", f), norm("x[9]*x[1]", f)), TEq::equal);
  EXPECT_EQ(rational(norm("x[3]*x[5]", f)), mpq_class(15, 4));
}

TEST(TRing, RelationsHoldOnRandomInstances) {
  for (const char* j : kAllFamilies) {
    auto f = fam(j);
    Rng rng(31);
    for (int i = 0; i < 100; ++i) {
      const auto m = f->random_m(rng), n = f->random_m(rng);
      const auto a = f->random_a(rng);
      const auto b = f->random_b(rng);
      EXPECT_EQ(t_generator(f, m) + t_generator(f, n), t_generator(f, m + n)) << j;
      EXPECT_EQ(t_generator(f, f->left_act(a, f->p())) * t_generator(f, m), t_generator(f, f->left_act(a, m))) << j;
      EXPECT_EQ(t_generator(f, m) * t_generator(f, f->right_act(f->p(), b)), t_generator(f, f->right_act(m, b)))
          << j;
    }
  }
}

TEST(TRing, UnitAndRingLaws) {
  for (const char* j : kAllFamilies) {
    auto f = fam(j);
    Rng rng(41);
    for (int i = 0; i < 50; ++i) {
      const auto x = t_normalize(random_expr(*f, rng), f);
      const auto y = t_normalize(random_expr(*f, rng), f);
      const auto z = t_normalize(random_expr(*f, rng), f);
      EXPECT_EQ(x * TElement::one(f), x);
      EXPECT_EQ((x * y) * z, x * (y * z)) << j;
      EXPECT_EQ(x * (y + z), x * y + x * z) << j;
      EXPECT_TRUE((x - x).is_zero());
    }
  }
}

TEST(TRing, PrintedNormalFormsReparse) {
  for (const char* j : kAllFamilies) {
    auto f = fam(j);
    Rng rng(43);
    for (int i = 0; i < 100; ++i) {
      const auto e = t_normalize(random_expr(*f, rng), f);
      EXPECT_EQ(parse_and_normalize(e.to_string(), f), e) << e.to_string();
    }
  }
}

TEST(TRing, PresentationAndOracleSuitesPass) {
  for (const char* j : kAllFamilies) {
    auto f = fam(j);
    const auto p = verify_presentation(f, 5, 100);
    EXPECT_TRUE(p.passed()) << j;
    const auto o = verify_oracle(f, 5, 100);
    EXPECT_TRUE(o.passed()) << j;
  }
}

TEST(TRing, BudgetExhaustion) {
  auto f = fam(R"({"kind":"hnn-free","A_gens":["s"]})");
  EXPECT_THROW(parse_and_normalize("(x[h(s,s)] + x[h(1,s)])^10", f, 50), BudgetExhausted);
  const auto a = parse_element("(x[h(s,s)] + x[h(1,s)])^10", *f);
  EXPECT_EQ(t_eq(a, a, f, 50), TEq::unknown);
  EXPECT_EQ(t_eq(a, a, f), TEq::equal);
}

TEST(TRing, ForeignElementsRejected) {
  auto a = fam(R"({"kind":"scaled","k":2})");
  auto b = fam(R"({"kind":"scaled","k":3})");
  EXPECT_THROW((void)(TElement::one(a) + TElement::one(b)), MismatchError);
}

TEST(Parser, ExpressionTrees) {
  auto s = fam(R"({"kind":"scaled","k":2})");
  const auto prod = parse_element("x[3]*x[5]", *s);
  EXPECT_EQ(prod.kind, Expr::Kind::product);
  EXPECT_EQ(prod.children.at(0).kind, Expr::Kind::letter);
  EXPECT_EQ(prod.children.at(1).kind, Expr::Kind::letter);

  auto d = fam(R"({"kind":"double"})");
  const auto sum = parse_element("x[(2,3)]*x[(0,1)] + 1", *d);
  EXPECT_EQ(sum.kind, Expr::Kind::sum);
  EXPECT_EQ(sum.children.at(0).kind, Expr::Kind::product);
  EXPECT_EQ(sum.children.at(1).kind, Expr::Kind::constant);
}

TEST(Parser, ErrorPositions) {
  auto s = fam(R"({"kind":"scaled","k":2})");
  try {
    (void)parse_element("x[3", *s);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 3u);
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 4u);
  }
  EXPECT_THROW((void)parse_element("x[3] +", *s), ParseError);
  EXPECT_THROW((void)parse_element("x[(1,2)]", *s), ParseError);
  EXPECT_THROW((void)parse_element("x[1/2]", *s), ParseError);
  EXPECT_THROW((void)parse_element("y", *s), ParseError);
}
