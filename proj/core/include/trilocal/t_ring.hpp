#pragma once

// The ring T(M,p): linear combinations of words in the generators x_m modulo
// (+) x_m + x_m' = x_{m+m'}, (a) x_{ap} x_m = x_{am}, (b) x_m x_{pb} = x_{mb}
// and (id) x_p = 1.
//
// Normal forms: every letter x_m is expanded by (+) over the family's
// coordinates and then split by (a)/(b) read right to left into atom letters
// (x_{s·p}, x_{p·u} and the generators of a complement of ApB); (id) erases
// x_p. Words of atoms are then reduced by the family's collapse hook.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "trilocal/error.hpp"
#include "trilocal/family.hpp"

namespace trilocal {

inline constexpr std::size_t kDefaultBudget = 1'000'000;

/// Counts reductions (letter splits and term products) for one normalization.
class Budget {
 public:
  explicit Budget(std::size_t limit = kDefaultBudget) : limit_(limit) {}
  void charge(std::size_t n = 1) {
    used_ += n;
    if (used_ > limit_) throw BudgetExhausted(limit_);
  }
  std::size_t used() const noexcept { return used_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

class TElement {
 public:
  explicit TElement(FamilyPtr family);
  static TElement scalar(FamilyPtr family, const Scalar& c);
  static TElement one(FamilyPtr family) { return scalar(std::move(family), 1); }
  /// Builds an element from words of atom letters and collapses it.
  static TElement from_atoms(FamilyPtr family, TermMap terms);

  const FamilyPtr& family() const noexcept { return family_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  Scalar coefficient(const TWord& w) const;

  /// Rendering in the element grammar; parses back to an equal element.
  std::string to_string() const;

  TElement scaled(const Scalar& c) const;
  friend TElement operator+(const TElement& a, const TElement& b);
  friend TElement operator-(const TElement& a, const TElement& b) { return a + (-b); }
  TElement operator-() const { return scaled(Scalar(-1)); }
  friend TElement operator*(const TElement& a, const TElement& b);
  friend bool operator==(const TElement& a, const TElement& b);

  void check_compatible(const TElement& other) const;

 private:
  FamilyPtr family_;
  TermMap terms_;
};

TElement t_add(const TElement& a, const TElement& b);
TElement t_mul(const TElement& a, const TElement& b, Budget* budget = nullptr);
TElement t_pow(const TElement& a, unsigned long n, Budget* budget = nullptr);

/// Expansion of a single letter x_key into a word of atoms (empty for x_p).
TWord expand_letter(const Family& family, const Letter& key, Budget* budget = nullptr);

/// Normal form of x_m.
TElement t_generator(const FamilyPtr& family, const BimElement& m, Budget* budget = nullptr);

/// Raw expression tree produced by the parser.
struct Expr {
  enum class Kind { constant, letter, sum, difference, product, power, negate };
  Kind kind = Kind::constant;
  Scalar value;              ///< constant
  BimElement melem;          ///< letter
  unsigned long exponent = 0;  ///< power
  std::vector<Expr> children;
  std::size_t offset = 0;  ///< position in the source text

  static Expr constant(const Scalar& c, std::size_t offset = 0);
  static Expr letter(BimElement m, std::size_t offset = 0);
  static Expr binary(Kind kind, Expr lhs, Expr rhs);
};

/// Random expression: a short sum of scalar multiples of short products of generators.
Expr random_expr(const Family& family, Rng& rng, std::size_t max_terms = 3, std::size_t max_letters = 3);

TElement t_normalize(const Expr& e, const FamilyPtr& family, Budget& budget);
TElement t_normalize(const Expr& e, const FamilyPtr& family);

TElement rho_A(const FamilyPtr& family, const RingElem& a);
TElement rho_M(const FamilyPtr& family, const BimElement& m);
TElement rho_B(const FamilyPtr& family, const RingElem& b);

enum class TEq { equal, distinct, unknown };
std::string to_string(TEq value);

TEq t_eq(const TElement& a, const TElement& b);
/// Normalizes both expressions under one budget; unknown when it runs out.
TEq t_eq(const Expr& a, const Expr& b, const FamilyPtr& family, std::size_t budget = kDefaultBudget);

/// Image under the isomorphism of T(M,p) with the family's oracle ring.
OracleValue family_iso(const TElement& e);

}  // namespace trilocal
