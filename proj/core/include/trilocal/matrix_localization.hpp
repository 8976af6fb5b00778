#pragma once

// σ⁻¹R realized as M₂(T(M,p)) with the localization map
// ρ = (ρ_A ρ_M; 0 ρ_B).

#include <array>
#include <cstdint>

#include "trilocal/report.hpp"
#include "trilocal/t_ring.hpp"
#include "trilocal/triangular.hpp"

namespace trilocal {

class Matrix2 {
 public:
  Matrix2(TElement t11, TElement t12, TElement t21, TElement t22);
  static Matrix2 zero(const FamilyPtr& family);
  static Matrix2 identity(const FamilyPtr& family);
  /// Matrix unit e_ij, 1-based indices.
  static Matrix2 unit(const FamilyPtr& family, int i, int j);

  /// Entry (i, j), 1-based.
  const TElement& at(int i, int j) const { return entries_.at(static_cast<std::size_t>(2 * (i - 1) + (j - 1))); }
  const FamilyPtr& family() const { return entries_[0].family(); }
  std::string to_string() const;

  friend bool operator==(const Matrix2& x, const Matrix2& y) { return x.entries_ == y.entries_; }

 private:
  std::array<TElement, 4> entries_;
};

enum class M2Op { add, mul };
Matrix2 m2_arith(M2Op op, const Matrix2& x, const Matrix2& y);
Matrix2 operator+(const Matrix2& x, const Matrix2& y);
Matrix2 operator*(const Matrix2& x, const Matrix2& y);

Matrix2 rho_matrix(const FamilyPtr& family, const TriElement& r);

/// Checks that ρ is a unital ring morphism on `samples` random pairs, that
/// ρ(0,p,0) = e12, and that e12·e21 = e11, e21·e12 = e22.
Report verify_sigma_inverting(const FamilyPtr& family, std::uint64_t seed = kDefaultSeed, std::size_t samples = 1000);

}  // namespace trilocal
