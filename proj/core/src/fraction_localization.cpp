#include "trilocal/fraction_localization.hpp"

namespace trilocal {

CentralPair make_central_pair(FamilyPtr family, const RingElem& a0, const RingElem& b0, std::uint64_t seed,
                              std::size_t samples) {
  family->check_a(a0);
  family->check_b(b0);
  CentralPair pair{family, nullptr, a0, b0, false};
  auto check = [&](const BimElement& m) {
    if (!(family->left_act(a0, m) == family->right_act(m, b0)))
      throw DomainError("a0 m != m b0 for m = " + family->format_melem(m) + " (a0 = " + family->format_ring(a0) +
                        ", b0 = " + family->format_ring(b0) + ")");
  };
  if (auto basis = family->basis()) {
    for (const auto& m : *basis) check(m);
    pair.basis_checked = true;
  }
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) check(family->random_m(rng));
  if (!a0.is_scalar()) throw UnsupportedError("changing p is only supported for scalar a0");
  pair.target = family->with_scaled_p(a0.constant_term());
  return pair;
}

TElement central_element(const CentralPair& pair) {
  return t_generator(pair.source, pair.source->left_act(pair.a0, pair.source->p()));
}

Report check_central(const CentralPair& pair, std::uint64_t seed, std::size_t samples) {
  const Family& f = *pair.source;
  Report report;
  report.title = "centrality of x[a0 p]: " + f.name() + ", a0 = " + f.format_ring(pair.a0);
  report.seed = seed;
  report.facts.emplace_back("certification", pair.basis_checked ? "basis and samples" : "samples only");
  const TElement z = central_element(pair);
  report.facts.emplace_back("x[a0 p]", z.to_string());
  Check& c = report.add("x[a0 p] x[m] = x[m] x[a0 p]");
  auto test = [&](const BimElement& m) {
    TElement x = t_generator(pair.source, m);
    if (!(z * x == x * z)) c.fail("m = " + f.format_melem(m) + ": " + (z * x).to_string() + " vs " + (x * z).to_string());
    ++c.cases;
  };
  if (auto basis = f.basis())
    for (const auto& m : *basis) test(m);
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) test(f.random_m(rng));
  return report;
}

TElement phi(const TElement& e, const CentralPair& pair) {
  TElement(pair.source).check_compatible(e);
  const Family& src = *pair.source;
  TElement out(pair.target);
  for (const auto& [w, c] : e.terms()) {
    TElement term = TElement::scalar(pair.target, c);
    for (const auto& key : w)
      term = term * t_generator(pair.target, src.left_act(pair.a0, BimElement::single(src.bimodule_id(), key)));
    out = out + term;
  }
  return out;
}

std::optional<mpq_class> oracle_rational(const OracleValue& v) {
  if (v.holds<Scalar>()) return v.as<Scalar>().value();
  if (v.holds<KadicFraction>()) return v.as<KadicFraction>().to_rational();
  return std::nullopt;
}

Fraction fraction_form(const TElement& e, const CentralPair& pair) {
  TElement(pair.target).check_compatible(e);
  auto q = oracle_rational(family_iso(e));
  if (!q || !pair.a0.is_scalar() || !pair.a0.constant_term().is_integer())
    throw UnsupportedError("fraction forms need a family whose oracle ring lies in Q and an integer a0");
  const mpz_class a0 = pair.a0.constant_term().numerator();
  const std::size_t bound = mpz_sizeinbase(q->get_den().get_mpz_t(), 2) + 1;
  mpq_class scaled = *q;
  for (unsigned long r = 0; r <= bound; ++r) {
    if (auto terms = pair.source->element_from_rational(scaled))
      return Fraction{TElement::from_atoms(pair.source, std::move(*terms)), r};
    scaled *= a0;
  }
  throw UnsupportedError("element " + e.to_string() + " has no fraction form over " + pair.source->name());
}

TElement reassemble(const Fraction& f, const CentralPair& pair) {
  const TElement xp = t_generator(pair.target, pair.source->p());
  return phi(f.numerator, pair) * t_pow(xp, f.exponent);
}

LetterHom<Scalar> rational_inclusion(const FamilyPtr& family) {
  LetterHom<Scalar> f;
  f.scalar = [](const Scalar& c) { return c; };
  f.letter = [family](const BimElement& m) {
    auto q = oracle_rational(family->letter_oracle(m));
    if (!q) throw UnsupportedError("family " + family->name() + " has no rational oracle");
    return Scalar(*q);
  };
  return f;
}

LetterHom<TElement> phi_hom(const CentralPair& pair) {
  LetterHom<TElement> f;
  f.scalar = [target = pair.target](const Scalar& c) { return TElement::scalar(target, c); };
  f.letter = [pair](const BimElement& m) {
    return t_generator(pair.target, pair.source->left_act(pair.a0, m));
  };
  return f;
}

Report verify_proposition(const CentralPair& pair, std::uint64_t seed, std::size_t samples) {
  const Family& src = *pair.source;
  Report report = check_central(pair, seed, samples);
  report.title = "proposition: " + src.name() + ", a0 = " + src.format_ring(pair.a0) +
                 ", b0 = " + src.format_ring(pair.b0);
  const TElement one = TElement::one(pair.target);
  const TElement xp = t_generator(pair.target, src.p());
  const TElement phi_z = phi(central_element(pair), pair);
  {
    Check& c = report.add("phi(x[a0 p]) x[p] = 1 = x[p] phi(x[a0 p])");
    c.cases = 1;
    if (!(phi_z * xp == one) || !(xp * phi_z == one))
      c.fail("phi(x[a0 p]) = " + phi_z.to_string() + ", x[p] = " + xp.to_string());
  }

  Rng rng(seed + 1);
  Check& morph = report.add("phi is a ring morphism");
  Check& round = report.add("fraction form round trip");
  Check& minimal = report.add("fraction exponent is minimal");
  Check& factor_q = report.add("f~ phi = f for f: T -> Q");
  Check& factor_t = report.add("f~ = id for f = phi");
  Check& orders = report.add("f~ letterwise = f~ on normal form");

  const LetterHom<Scalar> incl = rational_inclusion(pair.source);
  const Scalar incl_inv = incl.letter(src.left_act(pair.a0, src.p())).inverse();
  const LetterHom<TElement> phi_f = phi_hom(pair);
  const LetterHom<Scalar> target_incl = rational_inclusion(pair.target);

  for (std::size_t s = 0; s < samples; ++s) {
    const TElement e1 = t_normalize(random_expr(src, rng), pair.source);
    const TElement e2 = t_normalize(random_expr(src, rng), pair.source);
    if (!(phi(e1 * e2, pair) == phi(e1, pair) * phi(e2, pair)) || !(phi(e1 + e2, pair) == phi(e1, pair) + phi(e2, pair)))
      morph.fail("e1 = " + e1.to_string() + ", e2 = " + e2.to_string());
    ++morph.cases;

    const Expr raw = random_expr(*pair.target, rng);
    const TElement e = t_normalize(raw, pair.target);
    const Fraction fr = fraction_form(e, pair);
    if (!(reassemble(fr, pair) == e))
      round.fail("e = " + e.to_string() + ", alpha = " + fr.numerator.to_string() + ", r = " + std::to_string(fr.exponent));
    ++round.cases;
    if (fr.exponent > 0) {
      // r - 1 must not suffice: e·φ(x_{a0 p})^{r-1} lies outside φ(T(M,p)).
      mpq_class v = *oracle_rational(family_iso(e));
      mpq_class a0 = pair.a0.constant_term().value();
      for (unsigned long i = 0; i + 1 < fr.exponent; ++i) v *= a0;
      if (pair.source->element_from_rational(v))
        minimal.fail("e = " + e.to_string() + " also has a fraction form with r = " + std::to_string(fr.exponent - 1));
    }
    ++minimal.cases;

    if (!(factor_inverting_hom(incl, incl_inv, phi(e1, pair), pair) == evaluate(incl, e1)))
      factor_q.fail("e = " + e1.to_string());
    ++factor_q.cases;

    const TElement via_phi = factor_inverting_hom(phi_f, xp, e, pair);
    if (!(via_phi == e)) factor_t.fail("e = " + e.to_string() + " maps to " + via_phi.to_string());
    ++factor_t.cases;

    const Scalar lhs = factor_inverting_hom(incl, incl_inv, raw, pair);
    const Scalar rhs = factor_inverting_hom(incl, incl_inv, e, pair);
    if (!(lhs == rhs) || !(rhs == evaluate(target_incl, e)))
      orders.fail("e = " + e.to_string() + ": " + lhs.to_string() + " vs " + rhs.to_string());
    ++orders.cases;
  }
  return report;
}

}  // namespace trilocal
