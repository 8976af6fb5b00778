#include "trilocal/polynomial.hpp"

#include <algorithm>

#include "trilocal/error.hpp"

namespace trilocal {

Polynomial::Polynomial(CoeffRing ring, std::vector<Scalar> coefficients)
    : ring_(ring), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_)
    if (!c.belongs_to(ring_)) throw DomainError("coefficient " + c.to_string() + " is not in " + trilocal::to_string(ring_));
  trim();
}

Polynomial Polynomial::monomial(CoeffRing ring, const Scalar& c, std::size_t degree) {
  std::vector<Scalar> coeffs(degree + 1, Scalar(0));
  coeffs[degree] = c;
  return Polynomial(ring, std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (ring_ != other.ring_) throw MismatchError("polynomials over different coefficient rings");
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  std::vector<Scalar> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return Polynomial(a.ring_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(a.ring_, std::move(out));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const auto& v : coeffs_) out.push_back(v * c);
  return Polynomial(ring_, std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  check_ring(divisor);
  if (ring_ != CoeffRing::Q) throw UnsupportedError("polynomial division requires coefficients in Q");
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  Polynomial rem = *this;
  std::vector<Scalar> quot(std::max<long>(degree() - divisor.degree() + 1, 0), Scalar(0));
  const Scalar lead_inv = divisor.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    auto shift = static_cast<std::size_t>(rem.degree() - divisor.degree());
    Scalar factor = rem.leading() * lead_inv;
    quot[shift] += factor;
    rem = rem - monomial(ring_, factor, shift) * divisor;
  }
  return {Polynomial(ring_, std::move(quot)), rem};
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const Scalar& c = coeffs_[d];
    if (c.is_zero()) continue;
    Scalar mag = c.sign() < 0 ? -c : c;
    if (c.sign() < 0) out += "-";
    else if (!first) out += "+";
    first = false;
    if (d == 0) {
      out += mag.to_string();
      continue;
    }
    if (!mag.is_one()) out += mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")";
    out += "x";
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

}  // namespace trilocal
