#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trilocal/scalar.hpp"

namespace trilocal {

/// Polynomial in one central indeterminate x, dense ascending coefficients.
/// The leading coefficient is nonzero unless the polynomial is zero.
class Polynomial {
 public:
  explicit Polynomial(CoeffRing ring = CoeffRing::Q) : ring_(ring) {}
  Polynomial(CoeffRing ring, std::vector<Scalar> coefficients);

  static Polynomial constant(CoeffRing ring, const Scalar& c) { return Polynomial(ring, {c}); }
  static Polynomial monomial(CoeffRing ring, const Scalar& c, std::size_t degree);
  static Polynomial x(CoeffRing ring) { return monomial(ring, 1, 1); }

  CoeffRing ring() const noexcept { return ring_; }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Scalar coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  Scalar leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }

  /// Division with remainder; only valid over Q. Throws DomainError on a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  Polynomial scaled(const Scalar& c) const;

  /// Renders e.g. "2x+3x^2", "1-x^2", "0".
  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const { return scaled(Scalar(-1)); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  void check_ring(const Polynomial& other) const;

  CoeffRing ring_;
  std::vector<Scalar> coeffs_;
};

/// Convolution product.
inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

}  // namespace trilocal
