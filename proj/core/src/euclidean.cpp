#include "trilocal/euclidean.hpp"

#include "trilocal/error.hpp"

namespace trilocal {

std::pair<mpz_class, mpz_class> IntegerRing::divmod(const mpz_class& a, const mpz_class& b) const {
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return {q, r};
}

bool IntegerRing::divides(const mpz_class& a, const mpz_class& b) const {
  if (a == 0) return b == 0;
  return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

bool RationalPolyRing::divides(const Polynomial& a, const Polynomial& b) const {
  if (a.is_zero()) return b.is_zero();
  return b.divmod(a).second.is_zero();
}

KadicFraction KadicRing::unit_normalizer(const KadicFraction& a) const {
  if (a.is_zero()) return one();
  auto [stripped, removed] = strip_base_primes(a.numerator(), k);
  mpz_class kr;
  mpz_pow_ui(kr.get_mpz_t(), k.get_mpz_t(), a.exponent());
  mpq_class v(kr, removed);
  v.canonicalize();
  if (a.numerator() < 0) v = -v;
  return *KadicFraction::from_rational(k, v);
}

bool KadicRing::divides(const KadicFraction& a, const KadicFraction& b) const {
  if (a.is_zero()) return b.is_zero();
  mpq_class q = b.to_rational() / a.to_rational();
  return KadicFraction::from_rational(k, q).has_value();
}

KadicFraction KadicRing::exact_quotient(const KadicFraction& b, const KadicFraction& a) const {
  mpq_class q = b.to_rational() / a.to_rational();
  auto out = KadicFraction::from_rational(k, q);
  if (!out) throw DomainError("inexact division in " + name());
  return *out;
}

SmithResult<IntegerRing> smith_normal_form(const IntMatrix& m) { return smith_form(IntegerRing{}, m); }

SmithResult<KadicRing> euclidean_reduce(const KadicRing& ring, const Matrix<KadicFraction>& m) {
  unsigned long e = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e = std::max(e, m(i, j).exponent());

  IntMatrix cleared(m.rows(), m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_class scale;
      mpz_pow_ui(scale.get_mpz_t(), ring.k.get_mpz_t(), e - m(i, j).exponent());
      cleared(i, j) = m(i, j).numerator() * scale;
    }
  auto s = smith_normal_form(cleared);

  mpz_class ke;
  mpz_pow_ui(ke.get_mpz_t(), ring.k.get_mpz_t(), e);
  SmithResult<KadicRing> out{Matrix<KadicFraction>(m.rows(), m.rows(), ring.zero()),
                             Matrix<KadicFraction>(m.rows(), m.cols(), ring.zero()),
                             Matrix<KadicFraction>(m.cols(), m.cols(), ring.zero()), s.rank};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class removed = 1;
    if (i < std::min(m.rows(), m.cols())) {
      auto [stripped, rem] = strip_base_primes(s.D(i, i), ring.k);
      removed = rem;
      if (s.D(i, i) != 0) out.D(i, i) = ring.from_integer(stripped);
    }
    mpq_class factor(ke, removed);
    factor.canonicalize();
    KadicFraction unit = *KadicFraction::from_rational(ring.k, factor);
    for (std::size_t j = 0; j < m.rows(); ++j) out.U(i, j) = unit * ring.from_integer(s.U(i, j));
  }
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.V(i, j) = ring.from_integer(s.V(i, j));
  detail::verify_smith(ring, m, out);
  return out;
}

SmithResult<RationalPolyRing> euclidean_reduce(const RationalPolyRing& ring, const Matrix<Polynomial>& m) {
  return smith_form(ring, m);
}

Matrix<Scalar> scalar_matrix(std::size_t rows, std::size_t cols) { return Matrix<Scalar>(rows, cols, Scalar(0)); }

namespace {

IntMatrix to_integer_matrix(const Matrix<Scalar>& m) {
  IntMatrix out(m.rows(), m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_integer()) throw DomainError("non-integral entry " + m(i, j).to_string() + " over Z");
      out(i, j) = m(i, j).numerator();
    }
  return out;
}

std::vector<mpz_class> to_integer_vector(const std::vector<Scalar>& v) {
  std::vector<mpz_class> out;
  out.reserve(v.size());
  for (const auto& c : v) {
    if (!c.is_integer()) throw DomainError("non-integral entry " + c.to_string() + " over Z");
    out.push_back(c.numerator());
  }
  return out;
}

}  // namespace

std::optional<std::vector<Scalar>> solve_left_scalar(CoeffRing ring, const Matrix<Scalar>& m,
                                                      const std::vector<Scalar>& w) {
  if (ring == CoeffRing::Q) return solve_left(RationalField{}, m, w);
  for (const auto& c : w)
    if (!c.is_integer()) return std::nullopt;
  auto y = solve_left(IntegerRing{}, to_integer_matrix(m), to_integer_vector(w));
  if (!y) return std::nullopt;
  std::vector<Scalar> out;
  for (const auto& c : *y) out.emplace_back(c);
  return out;
}

Matrix<Scalar> left_kernel_scalar(CoeffRing ring, const Matrix<Scalar>& m) {
  if (ring == CoeffRing::Q) return left_kernel(RationalField{}, m);
  IntMatrix k = left_kernel(IntegerRing{}, to_integer_matrix(m));
  Matrix<Scalar> out(k.rows(), k.cols(), Scalar(0));
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) out(i, j) = Scalar(k(i, j));
  return out;
}

}  // namespace trilocal
