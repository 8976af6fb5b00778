#pragma once

// Smith normal form and linear solving over the principal ideal domains used
// for cokernel computations: Z, Q, Q[x] (generic Euclidean elimination) and
// Z[1/k] (integer elimination followed by stripping units).

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trilocal/error.hpp"
#include "trilocal/kadic.hpp"
#include "trilocal/matrix.hpp"
#include "trilocal/polynomial.hpp"
#include "trilocal/scalar.hpp"

namespace trilocal {

struct IntegerRing {
  using value_type = mpz_class;
  static constexpr bool euclidean = true;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return a == 0; }
  std::pair<value_type, value_type> divmod(const value_type& a, const value_type& b) const;
  bool less_norm(const value_type& a, const value_type& b) const { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
  /// Unit u with u*a canonical (non-negative).
  value_type unit_normalizer(const value_type& a) const { return a < 0 ? -1 : 1; }
  value_type unit_inverse(const value_type& u) const { return u; }
  bool is_unit(const value_type& a) const { return a == 1 || a == -1; }
  bool divides(const value_type& a, const value_type& b) const;
  value_type exact_quotient(const value_type& b, const value_type& a) const { return b / a; }
  std::string to_string(const value_type& a) const { return a.get_str(); }
  std::string name() const { return "Z"; }
};

struct RationalField {
  using value_type = Scalar;
  static constexpr bool euclidean = true;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  std::pair<value_type, value_type> divmod(const value_type& a, const value_type& b) const {
    return {a * b.inverse(), Scalar(0)};
  }
  bool less_norm(const value_type& a, const value_type& b) const { return a.is_zero() && !b.is_zero(); }
  value_type unit_normalizer(const value_type& a) const { return a.is_zero() ? Scalar(1) : a.inverse(); }
  value_type unit_inverse(const value_type& u) const { return u.inverse(); }
  bool is_unit(const value_type& a) const { return !a.is_zero(); }
  bool divides(const value_type& a, const value_type& b) const { return !a.is_zero() || b.is_zero(); }
  value_type exact_quotient(const value_type& b, const value_type& a) const { return b * a.inverse(); }
  std::string to_string(const value_type& a) const { return a.to_string(); }
  std::string name() const { return "Q"; }
};

struct RationalPolyRing {
  using value_type = Polynomial;
  static constexpr bool euclidean = true;

  value_type zero() const { return Polynomial(CoeffRing::Q); }
  value_type one() const { return Polynomial::constant(CoeffRing::Q, 1); }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  std::pair<value_type, value_type> divmod(const value_type& a, const value_type& b) const { return a.divmod(b); }
  bool less_norm(const value_type& a, const value_type& b) const { return a.degree() < b.degree(); }
  /// Makes nonzero polynomials monic.
  value_type unit_normalizer(const value_type& a) const {
    return a.is_zero() ? one() : Polynomial::constant(CoeffRing::Q, a.leading().inverse());
  }
  value_type unit_inverse(const value_type& u) const {
    return Polynomial::constant(CoeffRing::Q, u.leading().inverse());
  }
  bool is_unit(const value_type& a) const { return a.degree() == 0; }
  bool divides(const value_type& a, const value_type& b) const;
  value_type exact_quotient(const value_type& b, const value_type& a) const { return b.divmod(a).first; }
  std::string to_string(const value_type& a) const { return a.to_string(); }
  std::string name() const { return "Q[x]"; }
};

/// Z[1/k]. Not reduced by generic elimination: see euclidean_reduce().
struct KadicRing {
  using value_type = KadicFraction;
  static constexpr bool euclidean = false;

  mpz_class k;

  value_type zero() const { return KadicFraction(k); }
  value_type one() const { return KadicFraction::integer(k, 1); }
  value_type from_integer(const mpz_class& n) const { return KadicFraction::integer(k, n); }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  /// Unit u with u*a = stripped positive integer.
  value_type unit_normalizer(const value_type& a) const;
  bool is_unit(const value_type& a) const { return a.is_unit(); }
  bool divides(const value_type& a, const value_type& b) const;
  value_type exact_quotient(const value_type& b, const value_type& a) const;
  std::string to_string(const value_type& a) const { return a.to_string(); }
  std::string name() const { return "Z[1/" + k.get_str() + "]"; }
};

template <class Ring>
Matrix<typename Ring::value_type> identity_matrix(const Ring& ring, std::size_t n) {
  Matrix<typename Ring::value_type> out(n, n, ring.zero());
  for (std::size_t i = 0; i < n; ++i) out(i, i) = ring.one();
  return out;
}

template <class Ring>
Matrix<typename Ring::value_type> multiply(const Ring& ring, const Matrix<typename Ring::value_type>& a,
                                           const Matrix<typename Ring::value_type>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  Matrix<typename Ring::value_type> out(a.rows(), b.cols(), ring.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (ring.is_zero(a(i, l))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = out(i, j) + a(i, l) * b(l, j);
    }
  return out;
}

/// Row vector times matrix.
template <class Ring>
std::vector<typename Ring::value_type> row_times(const Ring& ring, const std::vector<typename Ring::value_type>& v,
                                                 const Matrix<typename Ring::value_type>& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vector/matrix dimension mismatch");
  std::vector<typename Ring::value_type> out(m.cols(), ring.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (ring.is_zero(v[i])) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = out[j] + v[i] * m(i, j);
  }
  return out;
}

/// U * m * V = D with U, V invertible over the ring, D diagonal with
/// d_0 | d_1 | ... and every nonzero d_i in canonical associate form.
template <class Ring>
struct SmithResult {
  Matrix<typename Ring::value_type> U;
  Matrix<typename Ring::value_type> D;
  Matrix<typename Ring::value_type> V;
  std::size_t rank = 0;

  std::vector<typename Ring::value_type> diagonal() const {
    std::vector<typename Ring::value_type> out;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
    return out;
  }
};

namespace detail {

template <class Ring, class T = typename Ring::value_type>
void add_row_multiple(const Ring&, Matrix<T>& m, std::size_t target, std::size_t source, const T& factor) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) = m(target, j) + factor * m(source, j);
}

template <class Ring, class T = typename Ring::value_type>
void add_col_multiple(const Ring&, Matrix<T>& m, std::size_t target, std::size_t source, const T& factor) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) = m(i, target) + m(i, source) * factor;
}

template <class Ring, class T = typename Ring::value_type>
void scale_row(Matrix<T>& m, std::size_t i, const T& factor) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = factor * m(i, j);
}

template <class Ring>
void verify_smith(const Ring& ring, const Matrix<typename Ring::value_type>& m, const SmithResult<Ring>& r) {
  if (!(multiply(ring, multiply(ring, r.U, m), r.V) == r.D))
    throw std::logic_error("Smith normal form identity U*m*V = D failed for ring " + ring.name());
}

}  // namespace detail

/// Smith normal form over a Euclidean ring by elimination with
/// smallest-norm pivots. The identity U*m*V = D is checked before returning.
template <class Ring>
  requires Ring::euclidean
SmithResult<Ring> smith_form(const Ring& ring, const Matrix<typename Ring::value_type>& m) {
  using T = typename Ring::value_type;
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithResult<Ring> r{identity_matrix(ring, rows), m, identity_matrix(ring, cols), 0};
  Matrix<T>& D = r.D;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Pivot: smallest-norm nonzero entry of the trailing block.
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (!ring.is_zero(D(i, j)) && (!pivot || ring.less_norm(D(i, j), D(pivot->first, pivot->second))))
          pivot = {i, j};
    if (!pivot) break;
    D.swap_rows(t, pivot->first);
    r.U.swap_rows(t, pivot->first);
    D.swap_cols(t, pivot->second);
    r.V.swap_cols(t, pivot->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (ring.is_zero(D(i, t))) continue;
        auto [q, rem] = ring.divmod(D(i, t), D(t, t));
        T neg_q = ring.zero() - q;
        detail::add_row_multiple(ring, D, i, t, neg_q);
        detail::add_row_multiple(ring, r.U, i, t, neg_q);
        if (!ring.is_zero(rem)) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (ring.is_zero(D(t, j))) continue;
        auto [q, rem] = ring.divmod(D(t, j), D(t, t));
        T neg_q = ring.zero() - q;
        detail::add_col_multiple(ring, D, j, t, neg_q);
        detail::add_col_multiple(ring, r.V, j, t, neg_q);
        if (!ring.is_zero(rem)) clean = false;
      }
      if (!clean) {
        // A remainder survived in row t or column t: it has smaller norm than
        // the pivot, so move it to (t, t) and eliminate again.
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (!ring.is_zero(D(i, t)) && (!best || ring.less_norm(D(i, t), D(best->first, best->second))))
            best = {i, t};
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!ring.is_zero(D(t, j)) && (!best || ring.less_norm(D(t, j), D(best->first, best->second))))
            best = {t, j};
        D.swap_rows(t, best->first);
        r.U.swap_rows(t, best->first);
        D.swap_cols(t, best->second);
        r.V.swap_cols(t, best->second);
        continue;
      }
      // Divisibility: the pivot must divide the whole trailing block.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < rows && !offending; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!ring.divides(D(t, t), D(i, j))) {
            offending = i;
            break;
          }
      if (!offending) break;
      detail::add_row_multiple(ring, D, t, *offending, ring.one());
      detail::add_row_multiple(ring, r.U, t, *offending, ring.one());
    }
    T u = ring.unit_normalizer(D(t, t));
    detail::scale_row<Ring>(D, t, u);
    detail::scale_row<Ring>(r.U, t, u);
    r.rank = t + 1;
  }
  detail::verify_smith(ring, m, r);
  return r;
}

/// Integer Smith normal form.
SmithResult<IntegerRing> smith_normal_form(const IntMatrix& m);

/// Smith form over Z[1/k]: clears denominators, runs the integer kernel, then
/// divides every diagonal entry by its unit part (primes dividing k).
SmithResult<KadicRing> euclidean_reduce(const KadicRing& ring, const Matrix<KadicFraction>& m);

/// Smith form over Q[x] (monic invariant factors).
SmithResult<RationalPolyRing> euclidean_reduce(const RationalPolyRing& ring, const Matrix<Polynomial>& m);

template <class Ring>
SmithResult<Ring> reduce(const Ring& ring, const Matrix<typename Ring::value_type>& m) {
  if constexpr (Ring::euclidean) {
    return smith_form(ring, m);
  } else {
    return euclidean_reduce(ring, m);
  }
}

/// y with y * m = w, or nullopt when w is not in the row span of m.
template <class Ring>
std::optional<std::vector<typename Ring::value_type>> solve_left(const Ring& ring, const SmithResult<Ring>& s,
                                                                  const std::vector<typename Ring::value_type>& w) {
  using T = typename Ring::value_type;
  if (w.size() != s.V.rows()) throw std::invalid_argument("solve_left: vector length mismatch");
  std::vector<T> z = row_times(ring, w, s.V);
  std::vector<T> scaled(s.D.rows(), ring.zero());
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (j < s.rank) {
      if (!ring.divides(s.D(j, j), z[j])) return std::nullopt;
      scaled[j] = ring.exact_quotient(z[j], s.D(j, j));
    } else if (!ring.is_zero(z[j])) {
      return std::nullopt;
    }
  }
  return row_times(ring, scaled, s.U);
}

template <class Ring>
std::optional<std::vector<typename Ring::value_type>> solve_left(const Ring& ring,
                                                                  const Matrix<typename Ring::value_type>& m,
                                                                  const std::vector<typename Ring::value_type>& w) {
  return solve_left(ring, reduce(ring, m), w);
}

/// True when w lies in the row span of m.
template <class Ring>
bool in_row_span(const Ring& ring, const SmithResult<Ring>& s, const std::vector<typename Ring::value_type>& w) {
  return solve_left(ring, s, w).has_value();
}

/// Rows spanning { y : y * m = 0 }.
template <class Ring>
Matrix<typename Ring::value_type> left_kernel(const Ring& ring, const Matrix<typename Ring::value_type>& m) {
  auto s = reduce(ring, m);
  Matrix<typename Ring::value_type> out(0, m.rows(), ring.zero());
  for (std::size_t i = s.rank; i < m.rows(); ++i) out.push_row(s.U.row(i));
  return out;
}

/// Cokernel summary of a presentation: non-unit invariant factors and free rank.
template <class Ring>
struct CokernelInvariants {
  std::vector<typename Ring::value_type> torsion;
  std::size_t free_rank = 0;
};

/// Invariant factors of coker(m) where the rows of m are relations on m.cols() generators.
template <class Ring>
CokernelInvariants<Ring> cokernel_invariants(const Ring& ring, const Matrix<typename Ring::value_type>& m) {
  CokernelInvariants<Ring> out;
  if (m.rows() == 0) {
    out.free_rank = m.cols();
    return out;
  }
  auto s = reduce(ring, m);
  for (std::size_t i = 0; i < s.rank; ++i)
    if (!ring.is_unit(s.D(i, i))) out.torsion.push_back(s.D(i, i));
  out.free_rank = m.cols() - s.rank;
  return out;
}

// Linear algebra over the coefficient ring Z or Q with Scalar entries
// (integral entries required for Z).

Matrix<Scalar> scalar_matrix(std::size_t rows, std::size_t cols);
std::optional<std::vector<Scalar>> solve_left_scalar(CoeffRing ring, const Matrix<Scalar>& m,
                                                      const std::vector<Scalar>& w);
Matrix<Scalar> left_kernel_scalar(CoeffRing ring, const Matrix<Scalar>& m);

}  // namespace trilocal
