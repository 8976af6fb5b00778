#include "trilocal/verify.hpp"

#include "trilocal/expr_parser.hpp"

namespace trilocal {

Report verify_presentation(const FamilyPtr& family, std::uint64_t seed, std::size_t samples) {
  const Family& f = *family;
  Report report;
  report.title = "presentation: " + f.name();
  report.seed = seed;
  report.facts.emplace_back("family", f.id());
  Rng rng(seed);
  auto x = [&](const BimElement& m) { return t_generator(family, m); };
  const TElement one = TElement::one(family);

  Check& id = report.add("(id) x[p] = 1");
  id.cases = 1;
  if (!(x(f.p()) == one)) id.fail("x[" + f.format_melem(f.p()) + "] = " + x(f.p()).to_string());

  Check& plus = report.add("(+) x[m] + x[m'] = x[m + m']");
  Check& left = report.add("(a) x[a p] x[m] = x[a m]");
  Check& right = report.add("(b) x[m] x[p b] = x[m b]");
  Check& rho_a = report.add("rho_A unital ring morphism");
  Check& rho_b = report.add("rho_B unital ring morphism");
  Check& rho_m = report.add("rho_M(a m b) = rho_A(a) rho_M(m) rho_B(b)");
  Check& idem = report.add("normal forms are fixed points and reparse");
  rho_a.cases = rho_b.cases = 0;
  if (!(rho_A(family, f.a_one()) == one)) rho_a.fail("rho_A(1) = " + rho_A(family, f.a_one()).to_string());
  if (!(rho_B(family, f.b_one()) == one)) rho_b.fail("rho_B(1) = " + rho_B(family, f.b_one()).to_string());

  for (std::size_t s = 0; s < samples; ++s) {
    const BimElement m = f.random_m(rng), m2 = f.random_m(rng);
    const RingElem a = f.random_a(rng), a2 = f.random_a(rng);
    const RingElem b = f.random_b(rng), b2 = f.random_b(rng);
    const std::string ms = "m = " + f.format_melem(m);

    ++plus.cases;
    if (!(x(m) + x(m2) == x(m + m2))) plus.fail(ms + ", m' = " + f.format_melem(m2));
    ++left.cases;
    if (!(x(f.left_act(a, f.p())) * x(m) == x(f.left_act(a, m)))) left.fail(ms + ", a = " + f.format_ring(a));
    ++right.cases;
    if (!(x(m) * x(f.right_act(f.p(), b)) == x(f.right_act(m, b)))) right.fail(ms + ", b = " + f.format_ring(b));
    ++rho_a.cases;
    if (!(rho_A(family, a * a2) == rho_A(family, a) * rho_A(family, a2)) ||
        !(rho_A(family, a + a2) == rho_A(family, a) + rho_A(family, a2)))
      rho_a.fail("a = " + f.format_ring(a) + ", a' = " + f.format_ring(a2));
    ++rho_b.cases;
    if (!(rho_B(family, b * b2) == rho_B(family, b) * rho_B(family, b2)) ||
        !(rho_B(family, b + b2) == rho_B(family, b) + rho_B(family, b2)))
      rho_b.fail("b = " + f.format_ring(b) + ", b' = " + f.format_ring(b2));
    ++rho_m.cases;
    if (!(rho_M(family, f.apply(a, m, b)) == rho_A(family, a) * rho_M(family, m) * rho_B(family, b)))
      rho_m.fail(ms + ", a = " + f.format_ring(a) + ", b = " + f.format_ring(b));

    ++idem.cases;
    const TElement e = t_normalize(random_expr(f, rng), family);
    const std::string printed = e.to_string();
    const TElement again = parse_and_normalize(printed, family);
    if (!(again == e) || again.to_string() != printed) idem.fail("e = " + printed + " reparses to " + again.to_string());
  }
  return report;
}

Report verify_oracle(const FamilyPtr& family, std::uint64_t seed, std::size_t samples) {
  const Family& f = *family;
  Report report;
  report.title = "oracle isomorphism: " + f.name();
  report.seed = seed;
  report.facts.emplace_back("family", f.id());
  Rng rng(seed);
  Check& unit = report.add("iso(1) = 1");
  unit.cases = 1;
  if (!(family_iso(TElement::one(family)) == f.oracle_scalar(1))) unit.fail("iso(1) = " + family_iso(TElement::one(family)).to_string());
  Check& add = report.add("iso(e1 + e2) = iso(e1) + iso(e2)");
  Check& mul = report.add("iso(e1 e2) = iso(e1) iso(e2)");
  Check& eq = report.add("t_eq agrees with oracle equality");
  std::bernoulli_distribution coin(0.5);
  for (std::size_t s = 0; s < samples; ++s) {
    const Expr r1 = random_expr(f, rng);
    const TElement e1 = t_normalize(r1, family);
    TElement e2 = t_normalize(random_expr(f, rng), family);
    if (coin(rng)) {
      // Same value, different expression: (+) and (a) rewritten by hand.
      const BimElement m = f.random_m(rng), m2 = f.random_m(rng);
      const RingElem a = f.random_a(rng);
      Expr alt = Expr::binary(Expr::Kind::sum, r1,
                              Expr::binary(Expr::Kind::difference,
                                           Expr::binary(Expr::Kind::sum, Expr::letter(m), Expr::letter(m2)),
                                           Expr::letter(m + m2)));
      alt = Expr::binary(Expr::Kind::sum, std::move(alt),
                         Expr::binary(Expr::Kind::difference,
                                      Expr::binary(Expr::Kind::product, Expr::letter(f.left_act(a, f.p())), Expr::letter(m)),
                                      Expr::letter(f.left_act(a, m))));
      e2 = t_normalize(alt, family);
    }
    const OracleValue o1 = family_iso(e1), o2 = family_iso(e2);
    ++add.cases;
    if (!(family_iso(e1 + e2) == o1 + o2)) add.fail("e1 = " + e1.to_string() + ", e2 = " + e2.to_string());
    ++mul.cases;
    if (!(family_iso(e1 * e2) == o1 * o2)) mul.fail("e1 = " + e1.to_string() + ", e2 = " + e2.to_string());
    ++eq.cases;
    if ((o1 == o2) != (t_eq(e1, e2) == TEq::equal))
      eq.fail("e1 = " + e1.to_string() + ", e2 = " + e2.to_string() + ", oracle " + o1.to_string() + " vs " + o2.to_string());
  }
  return report;
}

}  // namespace trilocal
