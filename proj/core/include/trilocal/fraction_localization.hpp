#pragma once

// Replacing p by a₀p when a₀m = mb₀ for all m: x_{a₀p} is central in
// T(M,p), m ↦ a₀m induces φ: T(M,p) -> T(M,a₀p), every element of
// T(M,a₀p) is a fraction φ(α)·φ(x_{a₀p})^{-r}, and homomorphisms out of
// T(M,p) inverting x_{a₀p} factor uniquely through φ.

#include <cstdint>
#include <functional>
#include <optional>

#include "trilocal/error.hpp"
#include "trilocal/report.hpp"
#include "trilocal/t_ring.hpp"

namespace trilocal {

struct CentralPair {
  FamilyPtr source;  ///< (M, p)
  FamilyPtr target;  ///< (M, a₀p)
  RingElem a0;
  RingElem b0;
  /// True when a₀m = mb₀ was checked on a basis of M, not only on samples.
  bool basis_checked = false;
};

/// Throws DomainError when a₀m ≠ mb₀ on a basis element or a sample, and
/// UnsupportedError when the family cannot change p.
CentralPair make_central_pair(FamilyPtr family, const RingElem& a0, const RingElem& b0,
                              std::uint64_t seed = kDefaultSeed, std::size_t samples = 1000);

/// x_{a₀p}·x_m = x_m·x_{a₀p} in T(M,p) on the basis and on random m.
Report check_central(const CentralPair& pair, std::uint64_t seed = kDefaultSeed, std::size_t samples = 1000);

/// x_{a₀p} in T(M,p).
TElement central_element(const CentralPair& pair);
TElement phi(const TElement& e, const CentralPair& pair);

struct Fraction {
  TElement numerator;  ///< α in T(M,p)
  unsigned long exponent = 0;
};

/// (α, r) with e = φ(α)·φ(x_{a₀p})^{-r} and r minimal. Needs a family whose
/// oracle ring sits inside Q.
Fraction fraction_form(const TElement& e, const CentralPair& pair);
/// φ(α)·x_p^r, using x_p = φ(x_{a₀p})^{-1} in T(M,a₀p).
TElement reassemble(const Fraction& f, const CentralPair& pair);

/// Oracle value as a rational, for families whose oracle ring lies in Q.
std::optional<mpq_class> oracle_rational(const OracleValue& v);

/// A ring homomorphism T(M,p) -> S given on scalars and on letters x_m.
template <class S>
struct LetterHom {
  std::function<S(const Scalar&)> scalar;
  std::function<S(const BimElement&)> letter;
};

/// f on a normal form of T(M,p).
template <class S>
S evaluate(const LetterHom<S>& f, const TElement& e) {
  const Family& fam = *e.family();
  S out = f.scalar(0);
  for (const auto& [w, c] : e.terms()) {
    S term = f.scalar(c);
    for (const auto& key : w) term = term * f.letter(BimElement::single(fam.bimodule_id(), key));
    out = out + term;
  }
  return out;
}

namespace detail {

template <class S>
void check_inverse(const LetterHom<S>& f, const S& f_inv, const CentralPair& pair) {
  const S z = f.letter(pair.source->left_act(pair.a0, pair.source->p()));
  const S one = f.scalar(1);
  if (!(f_inv * z == one) || !(z * f_inv == one))
    throw DomainError("the supplied element is not an inverse of f(x_{a0 p})");
}

}  // namespace detail

/// The unique f̃: T(M,a₀p) -> S with f̃∘φ = f, applied to a normal form:
/// f̃(x_m) = f(x_{a₀p})^{-1}·f(x_m).
template <class S>
S factor_inverting_hom(const LetterHom<S>& f, const S& f_inv, const TElement& e, const CentralPair& pair) {
  detail::check_inverse(f, f_inv, pair);
  TElement(pair.target).check_compatible(e);
  const Family& fam = *pair.target;
  S out = f.scalar(0);
  for (const auto& [w, c] : e.terms()) {
    S term = f.scalar(c);
    for (const auto& key : w) term = term * (f_inv * f.letter(BimElement::single(fam.bimodule_id(), key)));
    out = out + term;
  }
  return out;
}

/// f̃ applied letter by letter to an unnormalized expression over T(M,a₀p).
template <class S>
S factor_inverting_hom(const LetterHom<S>& f, const S& f_inv, const Expr& e, const CentralPair& pair) {
  detail::check_inverse(f, f_inv, pair);
  std::function<S(const Expr&)> go = [&](const Expr& x) -> S {
    switch (x.kind) {
      case Expr::Kind::constant: return f.scalar(x.value);
      case Expr::Kind::letter: return f_inv * f.letter(x.melem);
      case Expr::Kind::sum: return go(x.children.at(0)) + go(x.children.at(1));
      case Expr::Kind::difference: return go(x.children.at(0)) + f.scalar(-1) * go(x.children.at(1));
      case Expr::Kind::product: return go(x.children.at(0)) * go(x.children.at(1));
      case Expr::Kind::power: {
        S base = go(x.children.at(0));
        S out = f.scalar(1);
        for (unsigned long i = 0; i < x.exponent; ++i) out = out * base;
        return out;
      }
      case Expr::Kind::negate: return f.scalar(-1) * go(x.children.at(0));
    }
    throw std::logic_error("unknown expression kind");
  };
  return go(e);
}

/// The inclusion of T(M,p) into Q through the oracle, for families whose
/// oracle ring lies in Q.
LetterHom<Scalar> rational_inclusion(const FamilyPtr& family);
/// φ viewed as a LetterHom into T(M,a₀p).
LetterHom<TElement> phi_hom(const CentralPair& pair);

/// Runs centrality, φ(x_{a₀p})·x_p = 1, fraction round trips and the
/// factorization identity with S = Q and S = T(M,a₀p).
Report verify_proposition(const CentralPair& pair, std::uint64_t seed = kDefaultSeed, std::size_t samples = 500);

}  // namespace trilocal
