#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace trilocal {

/// Element numerator / k^exponent of Z[1/k].
///
/// Canonical: exponent == 0 or k does not divide numerator; zero is (0, 0).
/// Construct through normalize() or from_rational(); all arithmetic returns
/// canonical values.
class KadicFraction {
 public:
  /// Zero of Z[1/k]; throws DomainError when k < 2.
  explicit KadicFraction(const mpz_class& k);

  /// Canonical form of numerator / k^r with minimal exponent.
  static KadicFraction normalize(const mpz_class& k, mpz_class numerator, unsigned long r);
  static KadicFraction integer(const mpz_class& k, const mpz_class& value) { return normalize(k, value, 0); }

  /// The element equal to q, or nullopt when q's denominator has a prime
  /// factor not dividing k.
  static std::optional<KadicFraction> from_rational(const mpz_class& k, const mpq_class& q);

  const mpz_class& base() const noexcept { return base_; }
  const mpz_class& numerator() const noexcept { return numerator_; }
  unsigned long exponent() const noexcept { return exponent_; }

  mpq_class to_rational() const;
  bool is_zero() const { return numerator_ == 0; }
  /// Units of Z[1/k] are ±(products of primes dividing k).
  bool is_unit() const;

  /// Renders the rational value, e.g. "15/4".
  std::string to_string() const { return to_rational().get_str(); }

  friend KadicFraction operator+(const KadicFraction& a, const KadicFraction& b);
  friend KadicFraction operator-(const KadicFraction& a, const KadicFraction& b);
  friend KadicFraction operator*(const KadicFraction& a, const KadicFraction& b);
  KadicFraction operator-() const;
  friend bool operator==(const KadicFraction& a, const KadicFraction& b) {
    return a.base_ == b.base_ && a.numerator_ == b.numerator_ && a.exponent_ == b.exponent_;
  }

 private:
  KadicFraction(mpz_class k, mpz_class n, unsigned long r)
      : base_(std::move(k)), numerator_(std::move(n)), exponent_(r) {}
  void check_base(const KadicFraction& other) const;

  mpz_class base_;
  mpz_class numerator_;
  unsigned long exponent_ = 0;
};

/// Free-function form of KadicFraction::normalize. Throws DomainError for k < 2.
inline KadicFraction kadic_normalize(const mpz_class& k, const mpz_class& numerator, unsigned long r) {
  return KadicFraction::normalize(k, numerator, r);
}

/// Removes from |value| every prime factor shared with k. Returns
/// (stripped, removed) with value = ±stripped * removed.
std::pair<mpz_class, mpz_class> strip_base_primes(const mpz_class& value, const mpz_class& k);

}  // namespace trilocal
