#include "trilocal/module_localization.hpp"

#include "trilocal/error.hpp"
#include "trilocal/matrix_localization.hpp"
#include "trilocal/t_ring.hpp"

namespace trilocal {

namespace {

mpz_class from_oracle(const IntegerRing&, const OracleValue& v) {
  const Scalar& s = v.as<Scalar>();
  if (!s.is_integer()) throw std::logic_error("non-integral oracle value over Z");
  return s.numerator();
}
KadicFraction from_oracle(const KadicRing&, const OracleValue& v) { return v.as<KadicFraction>(); }
Polynomial from_oracle(const RationalPolyRing&, const OracleValue& v) { return v.as<Polynomial>(); }

mpz_class random_value(const IntegerRing&, Rng& rng) {
  std::uniform_int_distribution<long> d(-6, 6);
  return d(rng);
}
KadicFraction random_value(const KadicRing& ring, Rng& rng) {
  std::uniform_int_distribution<long> d(-6, 6);
  std::uniform_int_distribution<unsigned long> e(0, 2);
  return kadic_normalize(ring.k, d(rng), e(rng));
}
Polynomial random_value(const RationalPolyRing&, Rng& rng) {
  std::uniform_int_distribution<long> d(-3, 3);
  std::uniform_int_distribution<int> deg(0, 2);
  std::vector<Scalar> coeffs;
  for (int i = deg(rng); i >= 0; --i) coeffs.emplace_back(d(rng));
  return Polynomial(CoeffRing::Q, coeffs);
}

// Calls visit(ring) with the Euclidean/PID model of T for the family.
template <class Visitor>
auto with_t_ring(const Family& family, Visitor&& visit) {
  switch (family.kind()) {
    case FamilyKind::regular:
      if (family.coeff_ring() == CoeffRing::Z) return visit(IntegerRing{});
      break;
    case FamilyKind::scaled: return visit(KadicRing{family.descriptor().k});
    case FamilyKind::double_sum:
      if (family.coeff_ring() == CoeffRing::Q) return visit(RationalPolyRing{});
      break;
    default: break;
  }
  throw UnsupportedError("module localization needs T = Z, Z[1/k] or Q[x]; family " + family.name() +
                         " is not supported");
}

template <class Ring>
using Mat = Matrix<typename Ring::value_type>;

template <class Ring>
std::string vec_to_string(const Ring& ring, const std::vector<typename Ring::value_type>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + ring.to_string(v[i]);
  return out + "]";
}

template <class Ring>
Mat<Ring> build_L_over(const Ring& ring, const TripleModule& n, GSign sign) {
  const FamilyPtr& fam = n.family();
  const std::size_t na = n.na().gens, nb = n.nb().gens, total = na + nb;
  auto rho_a = [&](const Scalar& c) { return from_oracle(ring, family_iso(rho_A(fam, fam->a_scalar(c)))); };
  auto rho_b = [&](const Scalar& c) { return from_oracle(ring, family_iso(rho_B(fam, fam->b_scalar(c)))); };

  Mat<Ring> rels(0, total, ring.zero());
  for (std::size_t r = 0; r < n.na().rels.rows(); ++r) {
    std::vector<typename Ring::value_type> row(total, ring.zero());
    for (std::size_t i = 0; i < na; ++i) row[i] = rho_a(n.na().rels(r, i));
    rels.push_row(row);
  }
  for (std::size_t r = 0; r < n.nb().rels.rows(); ++r) {
    std::vector<typename Ring::value_type> row(total, ring.zero());
    for (std::size_t j = 0; j < nb; ++j) row[na + j] = rho_b(n.nb().rels(r, j));
    rels.push_row(row);
  }
  const auto basis = *fam->basis();
  for (std::size_t mu = 0; mu < basis.size(); ++mu) {
    const auto x_mu = from_oracle(ring, family_iso(t_generator(fam, basis[mu])));
    for (std::size_t j = 0; j < nb; ++j) {
      // (1⊗f)(1⊗μ⊗n_j) + (g⊗1)(1⊗μ⊗n_j) = f(μ⊗n_j) - x_μ·n_j.
      std::vector<typename Ring::value_type> row(total, ring.zero());
      for (std::size_t i = 0; i < na; ++i) row[i] = rho_a(n.f()[mu](j, i));
      row[na + j] = sign == GSign::standard ? ring.zero() - x_mu : x_mu;
      rels.push_row(row);
    }
  }
  return rels;
}

template <class Ring>
LInvariants invariants_over(const Ring& ring, const Mat<Ring>& rels) {
  auto inv = cokernel_invariants(ring, rels);
  LInvariants out;
  for (const auto& d : inv.torsion) out.torsion.push_back(ring.to_string(d));
  out.free_rank = inv.free_rank;
  return out;
}

// Presentation of (T T) ⊗_R N over T: generators e_c ⊗ g_l at index 2l + c.
template <class Ring>
Mat<Ring> tensor_presentation(const Ring& ring, const TripleModule& n) {
  const FamilyPtr& fam = n.family();
  const Family& f = *fam;
  const std::size_t na = n.na().gens, nb = n.nb().gens, total = na + nb;

  // Relations of N as a left R-module: one R-coefficient per generator.
  std::vector<std::vector<TriElement>> relations;
  auto blank = [&] { return std::vector<TriElement>(total, tri_zero(f)); };
  auto scalar = [&](const Scalar& c) { return TriElement{f.a_scalar(c), f.zero(), f.b_scalar(c)}; };
  const TriElement e11{f.a_one(), f.zero(), f.b_scalar(0)};
  const TriElement e22{f.a_scalar(0), f.zero(), f.b_one()};
  for (std::size_t i = 0; i < na; ++i) {
    auto rel = blank();
    rel[i] = e22;
    relations.push_back(rel);
  }
  for (std::size_t j = 0; j < nb; ++j) {
    auto rel = blank();
    rel[na + j] = e11;
    relations.push_back(rel);
  }
  for (std::size_t r = 0; r < n.na().rels.rows(); ++r) {
    auto rel = blank();
    for (std::size_t i = 0; i < na; ++i) rel[i] = scalar(n.na().rels(r, i));
    relations.push_back(rel);
  }
  for (std::size_t r = 0; r < n.nb().rels.rows(); ++r) {
    auto rel = blank();
    for (std::size_t j = 0; j < nb; ++j) rel[na + j] = scalar(n.nb().rels(r, j));
    relations.push_back(rel);
  }
  const auto basis = *f.basis();
  for (std::size_t mu = 0; mu < basis.size(); ++mu)
    for (std::size_t j = 0; j < nb; ++j) {
      // (0,μ,0)·n_j = f(μ⊗n_j) in N.
      auto rel = blank();
      rel[na + j] = TriElement{f.a_scalar(0), basis[mu], f.b_scalar(0)};
      for (std::size_t i = 0; i < na; ++i) rel[i] = scalar(-n.f()[mu](j, i));
      relations.push_back(rel);
    }

  Mat<Ring> out(0, 2 * total, ring.zero());
  for (const auto& rel : relations) {
    std::vector<Matrix2> images;
    for (const auto& r : rel) images.push_back(rho_matrix(fam, r));
    for (int c = 1; c <= 2; ++c) {
      std::vector<typename Ring::value_type> row(2 * total, ring.zero());
      for (std::size_t l = 0; l < total; ++l)
        for (int c2 = 1; c2 <= 2; ++c2)
          row[2 * l + static_cast<std::size_t>(c2 - 1)] = from_oracle(ring, family_iso(images[l].at(c, c2)));
      out.push_row(row);
    }
  }
  return out;
}

template <class Ring>
std::vector<typename Ring::value_type> apply_map(const Ring& ring, const std::vector<typename Ring::value_type>& v,
                                                 const IntMatrix& map) {
  std::vector<typename Ring::value_type> out(map.cols(), ring.zero());
  for (std::size_t i = 0; i < map.rows(); ++i)
    for (std::size_t j = 0; j < map.cols(); ++j)
      if (map(i, j) != 0) out[j] = out[j] + v[i];
  return out;
}

template <class Ring>
std::vector<typename Ring::value_type> difference(const Ring& ring, std::vector<typename Ring::value_type> a,
                                                  const std::vector<typename Ring::value_type>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] - b[i];
  (void)ring;
  return a;
}

std::pair<IntMatrix, IntMatrix> alpha_beta_maps(std::size_t na, std::size_t nb) {
  const std::size_t total = na + nb;
  IntMatrix alpha(total, 2 * total, 0), beta(2 * total, total, 0);
  for (std::size_t i = 0; i < na; ++i) {
    alpha(i, 2 * i) = 1;
    beta(2 * i, i) = 1;
  }
  for (std::size_t j = 0; j < nb; ++j) {
    alpha(na + j, 2 * (na + j) + 1) = 1;
    beta(2 * (na + j) + 1, na + j) = 1;
  }
  return {alpha, beta};
}

template <class Ring>
Report verify_alpha_beta_over(const Ring& ring, const TripleModule& n, const Mat<Ring>& L, std::size_t samples,
                              std::uint64_t seed) {
  const std::size_t na = n.na().gens, nb = n.nb().gens, total = na + nb;
  Report report;
  report.title = "alpha/beta: " + n.family()->name() + " over " + ring.name();
  report.seed = seed;
  const Mat<Ring> W = tensor_presentation(ring, n);
  report.facts.emplace_back("L generators", std::to_string(total));
  report.facts.emplace_back("(T T)(x)N generators", std::to_string(2 * total));
  const auto [alpha, beta] = alpha_beta_maps(na, nb);
  const auto sL = reduce(ring, L);
  const auto sW = reduce(ring, W);

  Check& a_def = report.add("alpha well defined");
  for (std::size_t r = 0; r < L.rows(); ++r) {
    ++a_def.cases;
    if (!in_row_span(ring, sW, apply_map(ring, L.row(r), alpha)))
      a_def.fail("relation " + vec_to_string(ring, L.row(r)) + " of L is not killed by alpha");
  }
  Check& b_def = report.add("beta well defined");
  for (std::size_t r = 0; r < W.rows(); ++r) {
    ++b_def.cases;
    if (!in_row_span(ring, sL, apply_map(ring, W.row(r), beta)))
      b_def.fail("relation " + vec_to_string(ring, W.row(r)) + " of (T T)(x)N maps to " +
                 vec_to_string(ring, apply_map(ring, W.row(r), beta)) + " outside the relations of L");
  }
  Rng rng(seed);
  Check& ba = report.add("beta alpha = id");
  Check& ab = report.add("alpha beta = id");
  for (std::size_t s = 0; s < samples && total > 0; ++s) {
    std::vector<typename Ring::value_type> l(total, ring.zero()), w(2 * total, ring.zero());
    for (auto& v : l) v = random_value(ring, rng);
    for (auto& v : w) v = random_value(ring, rng);
    ++ba.cases;
    if (!in_row_span(ring, sL, difference(ring, apply_map(ring, apply_map(ring, l, alpha), beta), l)))
      ba.fail("l = " + vec_to_string(ring, l));
    ++ab.cases;
    if (!in_row_span(ring, sW, difference(ring, apply_map(ring, apply_map(ring, w, beta), alpha), w)))
      ab.fail("w = " + vec_to_string(ring, w));
  }
  return report;
}

}  // namespace

std::optional<std::string> module_localization_ring(const Family& family) {
  try {
    return with_t_ring(family, [](const auto& ring) { return ring.name(); });
  } catch (const UnsupportedError&) {
    return std::nullopt;
  }
}

std::size_t PresentationMatrix::relation_count() const {
  return std::visit([](const auto& m) { return m.rows(); }, rels);
}

std::vector<std::vector<std::string>> PresentationMatrix::rows() const {
  return std::visit(
      [](const auto& m) {
        std::vector<std::vector<std::string>> out;
        for (std::size_t i = 0; i < m.rows(); ++i) {
          std::vector<std::string> row;
          for (std::size_t j = 0; j < m.cols(); ++j) {
            if constexpr (std::is_same_v<std::decay_t<decltype(m(i, j))>, mpz_class>) row.push_back(m(i, j).get_str());
            else row.push_back(m(i, j).to_string());
          }
          out.push_back(std::move(row));
        }
        return out;
      },
      rels);
}

PresentationMatrix build_L(const TripleModule& n, GSign sign) {
  return with_t_ring(*n.family(), [&](const auto& ring) {
    PresentationMatrix p{ring.name(), n.na().gens + n.nb().gens, build_L_over(ring, n, sign)};
    if constexpr (std::is_same_v<std::decay_t<decltype(ring)>, KadicRing>) p.kadic_base = ring.k;
    return p;
  });
}

LInvariants l_invariants(const PresentationMatrix& p) {
  if (const auto* m = std::get_if<Matrix<mpz_class>>(&p.rels)) return invariants_over(IntegerRing{}, *m);
  if (const auto* m = std::get_if<Matrix<Polynomial>>(&p.rels)) return invariants_over(RationalPolyRing{}, *m);
  const auto& m = std::get<Matrix<KadicFraction>>(p.rels);
  return invariants_over(KadicRing{p.kadic_base}, m);
}

Report verify_alpha_beta(const TripleModule& n, const PresentationMatrix& L, std::size_t samples, std::uint64_t seed) {
  return with_t_ring(*n.family(), [&](const auto& ring) {
    using Ring = std::decay_t<decltype(ring)>;
    const auto* rels = std::get_if<Mat<Ring>>(&L.rels);
    if (!rels || L.gens != n.na().gens + n.nb().gens)
      throw MismatchError("presentation of L does not belong to this module");
    return verify_alpha_beta_over(ring, n, *rels, samples, seed);
  });
}

LocalizedModule localize_module(const TripleModule& n, std::size_t samples, std::uint64_t seed) {
  PresentationMatrix L = build_L(n);
  LInvariants inv = l_invariants(L);
  auto [alpha, beta] = alpha_beta_maps(n.na().gens, n.nb().gens);
  Report ab = verify_alpha_beta(n, L, samples, seed);
  ab.facts.emplace_back("action", "M2(T) acts on the column (L; L) by matrix multiplication");
  return LocalizedModule{std::move(L), std::move(inv), std::move(alpha), std::move(beta), std::move(ab)};
}

}  // namespace trilocal
