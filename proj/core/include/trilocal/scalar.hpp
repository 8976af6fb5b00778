#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace trilocal {

/// Coefficient ring of a family: the integers or the rationals.
enum class CoeffRing { Z, Q };

std::string to_string(CoeffRing ring);

/// Exact rational number, always in lowest terms with a positive denominator.
/// Integers are the scalars whose denominator is 1.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpz_class& value) : value_(value) {}
  explicit Scalar(const mpq_class& value);
  Scalar(const mpz_class& num, const mpz_class& den);

  /// Parses "12", "-3" or "5/6". Throws DomainError on malformed input or a
  /// zero denominator.
  static Scalar parse(std::string_view text);

  const mpq_class& value() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Multiplicative inverse; throws DomainError on zero.
  Scalar inverse() const;
  bool belongs_to(CoeffRing ring) const { return ring == CoeffRing::Q || is_integer(); }

  std::string to_string() const { return value_.get_str(); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.value_ + b.value_)); }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.value_ - b.value_)); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.value_ * b.value_)); }
  Scalar operator-() const { return Scalar(mpq_class(-value_)); }
  Scalar& operator+=(const Scalar& o) { value_ += o.value_; return *this; }
  Scalar& operator*=(const Scalar& o) { value_ *= o.value_; return *this; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

enum class ScalarOp { add, mul, neg };

/// add/mul combine a and b; neg ignores b.
Scalar scalar_arith(ScalarOp op, const Scalar& a, const Scalar& b);

}  // namespace trilocal
