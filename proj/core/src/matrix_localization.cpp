#include "trilocal/matrix_localization.hpp"

#include "trilocal/error.hpp"

namespace trilocal {

Matrix2::Matrix2(TElement t11, TElement t12, TElement t21, TElement t22)
    : entries_{std::move(t11), std::move(t12), std::move(t21), std::move(t22)} {
  for (const auto& e : entries_) entries_[0].check_compatible(e);
}

Matrix2 Matrix2::zero(const FamilyPtr& family) {
  TElement z(family);
  return Matrix2(z, z, z, z);
}

Matrix2 Matrix2::identity(const FamilyPtr& family) {
  TElement z(family), one = TElement::one(family);
  return Matrix2(one, z, z, one);
}

Matrix2 Matrix2::unit(const FamilyPtr& family, int i, int j) {
  if (i < 1 || i > 2 || j < 1 || j > 2) throw DomainError("matrix unit index out of range");
  TElement z(family), one = TElement::one(family);
  return Matrix2(i == 1 && j == 1 ? one : z, i == 1 && j == 2 ? one : z, i == 2 && j == 1 ? one : z,
                 i == 2 && j == 2 ? one : z);
}

std::string Matrix2::to_string() const {
  return "[[" + at(1, 1).to_string() + ", " + at(1, 2).to_string() + "], [" + at(2, 1).to_string() + ", " +
         at(2, 2).to_string() + "]]";
}

Matrix2 m2_arith(M2Op op, const Matrix2& x, const Matrix2& y) {
  if (op == M2Op::add)
    return Matrix2(x.at(1, 1) + y.at(1, 1), x.at(1, 2) + y.at(1, 2), x.at(2, 1) + y.at(2, 1), x.at(2, 2) + y.at(2, 2));
  auto entry = [&](int i, int j) { return x.at(i, 1) * y.at(1, j) + x.at(i, 2) * y.at(2, j); };
  return Matrix2(entry(1, 1), entry(1, 2), entry(2, 1), entry(2, 2));
}

Matrix2 operator+(const Matrix2& x, const Matrix2& y) { return m2_arith(M2Op::add, x, y); }
Matrix2 operator*(const Matrix2& x, const Matrix2& y) { return m2_arith(M2Op::mul, x, y); }

Matrix2 rho_matrix(const FamilyPtr& family, const TriElement& r) {
  return Matrix2(rho_A(family, r.a), rho_M(family, r.m), TElement(family), rho_B(family, r.b));
}

Report verify_sigma_inverting(const FamilyPtr& family, std::uint64_t seed, std::size_t samples) {
  const Family& f = *family;
  Report report;
  report.title = "sigma-inverting: " + f.name();
  report.seed = seed;
  report.facts.emplace_back("family", f.id());
  Rng rng(seed);

  const TriElement one = tri_identity(f);
  const Matrix2 i2 = Matrix2::identity(family);
  {
    Check& c = report.add("rho(1) = I");
    c.cases = 1;
    Matrix2 img = rho_matrix(family, one);
    if (!(img == i2)) c.fail("rho(1) = " + img.to_string());
  }
  {
    Check& mul = report.add("rho(r1 r2) = rho(r1) rho(r2)");
    Check& add = report.add("rho(r1 + r2) = rho(r1) + rho(r2)");
    for (std::size_t s = 0; s < samples; ++s) {
      TriElement r1 = tri_random(f, rng), r2 = tri_random(f, rng);
      Matrix2 x = rho_matrix(family, r1), y = rho_matrix(family, r2);
      Matrix2 prod = rho_matrix(family, tri_mul(f, r1, r2));
      if (!(prod == x * y))
        mul.fail("r1 = " + tri_to_string(f, r1) + ", r2 = " + tri_to_string(f, r2) + ": rho(r1 r2) = " +
                 prod.to_string() + " but rho(r1) rho(r2) = " + (x * y).to_string());
      Matrix2 sum = rho_matrix(family, tri_add(f, r1, r2));
      if (!(sum == x + y))
        add.fail("r1 = " + tri_to_string(f, r1) + ", r2 = " + tri_to_string(f, r2) + ": rho(r1 + r2) = " +
                 sum.to_string());
      ++mul.cases;
      ++add.cases;
    }
  }
  const Matrix2 e11 = Matrix2::unit(family, 1, 1), e12 = Matrix2::unit(family, 1, 2),
                e21 = Matrix2::unit(family, 2, 1), e22 = Matrix2::unit(family, 2, 2);
  {
    Check& c = report.add("rho(0,p,0) = e12");
    c.cases = 1;
    Matrix2 img = rho_matrix(family, TriElement{f.a_scalar(0), f.p(), f.b_scalar(0)});
    if (!(img == e12)) c.fail("rho(0," + f.format_melem(f.p()) + ",0) = " + img.to_string());
  }
  {
    Check& c = report.add("e12 e21 = e11");
    c.cases = 1;
    if (!(e12 * e21 == e11)) c.fail("e12 e21 = " + (e12 * e21).to_string());
  }
  {
    Check& c = report.add("e21 e12 = e22");
    c.cases = 1;
    if (!(e21 * e12 == e22)) c.fail("e21 e12 = " + (e21 * e12).to_string());
  }
  return report;
}

}  // namespace trilocal
