#include "trilocal/kadic.hpp"

#include "trilocal/error.hpp"

namespace trilocal {

namespace {

void require_base(const mpz_class& k) {
  if (k < 2) throw DomainError("k-adic base must be at least 2, got " + k.get_str());
}

mpz_class power(const mpz_class& k, unsigned long e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), k.get_mpz_t(), e);
  return out;
}

}  // namespace

KadicFraction::KadicFraction(const mpz_class& k) : base_(k), numerator_(0), exponent_(0) {
  require_base(k);
}

KadicFraction KadicFraction::normalize(const mpz_class& k, mpz_class numerator, unsigned long r) {
  require_base(k);
  if (numerator == 0) return KadicFraction(k, 0, 0);
  while (r > 0 && mpz_divisible_p(numerator.get_mpz_t(), k.get_mpz_t())) {
    mpz_divexact(numerator.get_mpz_t(), numerator.get_mpz_t(), k.get_mpz_t());
    --r;
  }
  return KadicFraction(k, std::move(numerator), r);
}

std::optional<KadicFraction> KadicFraction::from_rational(const mpz_class& k, const mpq_class& q) {
  require_base(k);
  const mpz_class den = q.get_den();
  if (strip_base_primes(den, k).first != 1) return std::nullopt;
  // den | k^r for some r; take the least.
  unsigned long r = 0;
  mpz_class kr = 1;
  while (!mpz_divisible_p(kr.get_mpz_t(), den.get_mpz_t())) {
    kr *= k;
    ++r;
  }
  return normalize(k, q.get_num() * (kr / den), r);
}

mpq_class KadicFraction::to_rational() const {
  mpq_class out(numerator_, power(base_, exponent_));
  out.canonicalize();
  return out;
}

bool KadicFraction::is_unit() const {
  if (numerator_ == 0) return false;
  return strip_base_primes(numerator_, base_).first == 1;
}

void KadicFraction::check_base(const KadicFraction& other) const {
  if (base_ != other.base_) throw MismatchError("k-adic fractions over different bases");
}

KadicFraction operator+(const KadicFraction& a, const KadicFraction& b) {
  a.check_base(b);
  unsigned long r = std::max(a.exponent_, b.exponent_);
  mpz_class n = a.numerator_ * power(a.base_, r - a.exponent_) + b.numerator_ * power(a.base_, r - b.exponent_);
  return KadicFraction::normalize(a.base_, n, r);
}

KadicFraction operator-(const KadicFraction& a, const KadicFraction& b) { return a + (-b); }

KadicFraction operator*(const KadicFraction& a, const KadicFraction& b) {
  a.check_base(b);
  return KadicFraction::normalize(a.base_, a.numerator_ * b.numerator_, a.exponent_ + b.exponent_);
}

KadicFraction KadicFraction::operator-() const { return KadicFraction(base_, -numerator_, exponent_); }

std::pair<mpz_class, mpz_class> strip_base_primes(const mpz_class& value, const mpz_class& k) {
  mpz_class stripped = abs(value);
  mpz_class removed = 1;
  if (stripped == 0) return {0, 1};
  for (mpz_class g = gcd(stripped, k); g > 1; g = gcd(stripped, k)) {
    stripped /= g;
    removed *= g;
  }
  return {stripped, removed};
}

}  // namespace trilocal
