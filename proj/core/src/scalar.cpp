#include "trilocal/scalar.hpp"

#include <cctype>

#include "trilocal/error.hpp"

namespace trilocal {

std::string to_string(CoeffRing ring) { return ring == CoeffRing::Z ? "Z" : "Q"; }

Scalar::Scalar(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Scalar::Scalar(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw DomainError("malformed rational literal '" + std::string(text) + "'");
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (negative) n = -n;
  return Scalar(n, d);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Scalar(mpq_class(1 / value_));
}

Scalar scalar_arith(ScalarOp op, const Scalar& a, const Scalar& b) {
  switch (op) {
    case ScalarOp::add: return a + b;
    case ScalarOp::mul: return a * b;
    case ScalarOp::neg: return -a;
  }
  return a;
}

}  // namespace trilocal
