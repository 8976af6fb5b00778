#pragma once

#include <string>
#include <variant>

#include "trilocal/free_algebra.hpp"
#include "trilocal/kadic.hpp"
#include "trilocal/polynomial.hpp"
#include "trilocal/scalar.hpp"

namespace trilocal {

/// Element of one of the independent oracle rings T is identified with:
/// Z or Q, R0[x], Z[1/k], or a free algebra over Q.
class OracleValue {
 public:
  using Storage = std::variant<Scalar, Polynomial, KadicFraction, FreeAlgebraElement>;

  OracleValue(Scalar v) : value_(std::move(v)) {}              // NOLINT
  OracleValue(Polynomial v) : value_(std::move(v)) {}          // NOLINT
  OracleValue(KadicFraction v) : value_(std::move(v)) {}       // NOLINT
  OracleValue(FreeAlgebraElement v) : value_(std::move(v)) {}  // NOLINT

  const Storage& storage() const noexcept { return value_; }
  template <class T>
  const T& as() const { return std::get<T>(value_); }
  template <class T>
  bool holds() const { return std::holds_alternative<T>(value_); }

  bool is_zero() const;
  std::string to_string() const;

  friend OracleValue operator+(const OracleValue& a, const OracleValue& b);
  friend OracleValue operator*(const OracleValue& a, const OracleValue& b);
  OracleValue operator-() const;
  friend bool operator==(const OracleValue& a, const OracleValue& b) { return a.value_ == b.value_; }

 private:
  Storage value_;
};

}  // namespace trilocal
