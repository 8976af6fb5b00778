#include "trilocal/triangular.hpp"

#include "trilocal/error.hpp"
#include "trilocal/euclidean.hpp"

namespace trilocal {

TriElement tri_make(const Family& family, const RingElem& a, const BimElement& m, const RingElem& b) {
  family.check_a(a);
  family.check_member(m);
  family.check_b(b);
  return TriElement{a, m, b};
}

TriElement tri_identity(const Family& family) { return TriElement{family.a_one(), family.zero(), family.b_one()}; }

TriElement tri_zero(const Family& family) {
  return TriElement{family.a_scalar(0), family.zero(), family.b_scalar(0)};
}

TriElement tri_random(const Family& family, Rng& rng) {
  RingElem a = family.random_a(rng);
  BimElement m = family.random_m(rng);
  RingElem b = family.random_b(rng);
  return TriElement{std::move(a), std::move(m), std::move(b)};
}

TriElement tri_add(const Family& family, const TriElement& x, const TriElement& y) {
  family.check_member(x.m);
  family.check_member(y.m);
  return TriElement{x.a + y.a, x.m + y.m, x.b + y.b};
}

TriElement tri_mul(const Family& family, const TriElement& x, const TriElement& y) {
  family.check_member(x.m);
  family.check_member(y.m);
  return TriElement{x.a * y.a, family.left_act(x.a, y.m) + family.right_act(x.m, y.b), x.b * y.b};
}

std::string tri_to_string(const Family& family, const TriElement& r) {
  return "(" + family.format_ring(r.a) + ", " + family.format_melem(r.m) + ", " + family.format_ring(r.b) + ")";
}

SigmaMorphism sigma_of(const Family& family) { return SigmaMorphism{family.p()}; }

QColumn sigma_apply(const Family& family, const SigmaMorphism& sigma, const RingElem& a) {
  return QColumn{family.left_act(a, sigma.p), family.b_scalar(0)};
}

// ---------------------------------------------------------------------------

Presentation::Presentation(std::size_t g, Matrix<Scalar> r) : gens(g), rels(std::move(r)) {
  if (rels.rows() == 0 && rels.cols() != gens) rels = Matrix<Scalar>(0, gens, Scalar(0));
  if (rels.cols() != gens) throw DomainError("relation matrix has " + std::to_string(rels.cols()) +
                                             " columns for " + std::to_string(gens) + " generators");
}

namespace {

std::vector<Scalar> zeros(std::size_t n) { return std::vector<Scalar>(n, Scalar(0)); }

std::vector<Scalar> vec_sub(std::vector<Scalar> a, const std::vector<Scalar>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] - b[i];
  return a;
}

std::vector<Scalar> vec_times(const std::vector<Scalar>& v, const Matrix<Scalar>& m) {
  return row_times(RationalField{}, v, m);
}

bool in_span(CoeffRing ring, const Matrix<Scalar>& rels, const std::vector<Scalar>& w) {
  return solve_left_scalar(ring, rels, w).has_value();
}

std::string vec_to_string(const std::vector<Scalar>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].to_string();
  return out + "]";
}

void check_entries(CoeffRing ring, const Matrix<Scalar>& m, const char* what) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).belongs_to(ring))
        throw DomainError(std::string(what) + " entry " + m(i, j).to_string() + " is not in " + to_string(ring));
}

}  // namespace

TripleModule::TripleModule(Unchecked, FamilyPtr family, Presentation na, Presentation nb,
                           std::vector<Matrix<Scalar>> f)
    : family_(std::move(family)), na_(std::move(na)), nb_(std::move(nb)), f_(std::move(f)) {
  if (!family_->a_alphabet()->empty() || !family_->b_alphabet()->empty())
    throw UnsupportedError("triple modules need A and B to be Z or Q; family " + family_->name() + " is free");
  auto basis = family_->basis();
  if (!basis) throw UnsupportedError("family " + family_->name() + " has no finite free basis of M");
  if (f_.size() != basis->size())
    throw DomainError("f must give one matrix per basis element of M (" + std::to_string(basis->size()) + ")");
  for (const auto& fm : f_)
    if (fm.rows() != nb_.gens || fm.cols() != na_.gens)
      throw DomainError("each f matrix must be n_B x n_A = " + std::to_string(nb_.gens) + " x " +
                        std::to_string(na_.gens));
  check_entries(ring(), na_.rels, "N_A relation");
  check_entries(ring(), nb_.rels, "N_B relation");
  for (const auto& fm : f_) check_entries(ring(), fm, "f");
}

TripleModule::TripleModule(FamilyPtr family, Presentation na, Presentation nb, std::vector<Matrix<Scalar>> f)
    : TripleModule(Unchecked{}, std::move(family), std::move(na), std::move(nb), std::move(f)) {
  if (auto bad = first_ill_defined())
    throw DomainError("f is not well defined: relation " + std::to_string(bad->second) + " of N_B under basis element " +
                      std::to_string(bad->first) + " does not map into the relations of N_A");
}

TripleModule TripleModule::unchecked(FamilyPtr family, Presentation na, Presentation nb,
                                     std::vector<Matrix<Scalar>> f) {
  return TripleModule(Unchecked{}, std::move(family), std::move(na), std::move(nb), std::move(f));
}

std::optional<std::pair<std::size_t, std::size_t>> TripleModule::first_ill_defined() const {
  for (std::size_t mu = 0; mu < f_.size(); ++mu)
    for (std::size_t r = 0; r < nb_.rels.rows(); ++r)
      if (!in_span(ring(), na_.rels, vec_times(nb_.rels.row(r), f_[mu]))) return std::make_pair(mu, r);
  return std::nullopt;
}

std::vector<Scalar> TripleModule::f_apply(const BimElement& m, const std::vector<Scalar>& y) const {
  if (y.size() != nb_.gens) throw DomainError("N_B vector has wrong length");
  auto coords = family_->basis_coordinates(m);
  std::vector<Scalar> out = zeros(na_.gens);
  for (std::size_t mu = 0; mu < coords.size(); ++mu) {
    if (coords[mu].is_zero()) continue;
    auto img = vec_times(y, f_[mu]);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] + coords[mu] * img[i];
  }
  return out;
}

bool TripleModule::equivalent(const Element& x, const Element& y) const {
  if (x.a.size() != na_.gens || y.a.size() != na_.gens || x.b.size() != nb_.gens || y.b.size() != nb_.gens)
    throw DomainError("triple module element has wrong dimensions");
  return in_span(ring(), na_.rels, vec_sub(x.a, y.a)) && in_span(ring(), nb_.rels, vec_sub(x.b, y.b));
}

TripleModule::Element TripleModule::random_element(Rng& rng) const {
  Element e{zeros(na_.gens), zeros(nb_.gens)};
  for (auto& c : e.a) c = family_->random_scalar(rng);
  for (auto& c : e.b) c = family_->random_scalar(rng);
  return e;
}

TripleModule random_triple_module(const FamilyPtr& family, Rng& rng, std::size_t max_gens, long max_entry) {
  auto basis = family->basis();
  if (!basis) throw UnsupportedError("family " + family->name() + " has no finite free basis of M");
  std::uniform_int_distribution<std::size_t> gens(0, max_gens), rels(0, 2);
  std::uniform_int_distribution<long> entry(-max_entry, max_entry);
  const std::size_t na = gens(rng), nb = gens(rng);
  auto random_matrix = [&](std::size_t rows, std::size_t cols) {
    Matrix<Scalar> m(rows, cols, Scalar(0));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(entry(rng));
    return m;
  };
  Matrix<Scalar> rb = random_matrix(nb == 0 ? 0 : rels(rng), nb);
  std::vector<Matrix<Scalar>> f;
  for (std::size_t mu = 0; mu < basis->size(); ++mu) f.push_back(random_matrix(nb, na));
  Matrix<Scalar> ra = random_matrix(na == 0 ? 0 : rels(rng), na);
  for (std::size_t mu = 0; mu < f.size(); ++mu)
    for (std::size_t r = 0; r < rb.rows(); ++r) {
      auto img = vec_times(rb.row(r), f[mu]);
      if (!in_span(family->coeff_ring(), ra, img)) ra.push_row(img);
    }
  return TripleModule(family, Presentation(na, ra), Presentation(nb, rb), std::move(f));
}

TripleModule::Element triple_action(const TripleModule& n, const TriElement& r, const TripleModule::Element& v) {
  const Family& fam = *n.family();
  fam.check_member(r.m);
  if (v.a.size() != n.na().gens || v.b.size() != n.nb().gens)
    throw DomainError("triple module element has wrong dimensions");
  const Scalar a = r.a.constant_term(), b = r.b.constant_term();
  TripleModule::Element out{n.f_apply(r.m, v.b), v.b};
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = a * v.a[i] + out.a[i];
  for (auto& c : out.b) c = b * c;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Matrix<Scalar> stack(const Matrix<Scalar>& top, const Matrix<Scalar>& bottom) {
  Matrix<Scalar> out(0, top.cols(), Scalar(0));
  for (std::size_t i = 0; i < top.rows(); ++i) out.push_row(top.row(i));
  for (std::size_t i = 0; i < bottom.rows(); ++i) out.push_row(bottom.row(i));
  return out;
}

// Every relation of `from` maps into the relations of `to`.
bool well_defined(CoeffRing ring, const Presentation& from, const Presentation& to, const Matrix<Scalar>& map) {
  for (std::size_t r = 0; r < from.rels.rows(); ++r)
    if (!in_span(ring, to.rels, vec_times(from.rels.row(r), map))) return false;
  return true;
}

// map · back is the identity on generators of `p` modulo its relations.
bool composite_identity(CoeffRing ring, const Presentation& p, const Matrix<Scalar>& map, const Matrix<Scalar>& back) {
  for (std::size_t i = 0; i < p.gens; ++i) {
    std::vector<Scalar> e = zeros(p.gens);
    e[i] = 1;
    if (!in_span(ring, p.rels, vec_sub(vec_times(map.row(i), back), e))) return false;
  }
  return true;
}

}  // namespace

Roundtrip module_roundtrip(const TripleModule& n) {
  const CoeffRing ring = n.ring();
  const std::size_t na = n.na().gens, nb = n.nb().gens, total = na + nb;

  // N as a module over the coefficient ring: N_A ⊕ N_B.
  Matrix<Scalar> rel(0, total, Scalar(0));
  for (std::size_t r = 0; r < n.na().rels.rows(); ++r) {
    auto row = zeros(total);
    for (std::size_t i = 0; i < na; ++i) row[i] = n.na().rels(r, i);
    rel.push_row(row);
  }
  for (std::size_t r = 0; r < n.nb().rels.rows(); ++r) {
    auto row = zeros(total);
    for (std::size_t j = 0; j < nb; ++j) row[na + j] = n.nb().rels(r, j);
    rel.push_row(row);
  }
  // e11 acting on generators.
  Matrix<Scalar> e11(total, total, Scalar(0));
  for (std::size_t i = 0; i < na; ++i) e11(i, i) = 1;

  // e11·N: generated by the images e11·g_l, relations {y : y·E ∈ span(rel)}.
  const Matrix<Scalar> stacked = stack(e11, rel);
  Matrix<Scalar> kernel = left_kernel_scalar(ring, stacked);
  Matrix<Scalar> na_rels(0, total, Scalar(0));
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    auto row = kernel.row(r);
    row.resize(total);
    na_rels.push_row(row);
  }
  Presentation na_new(total, na_rels);
  // N / e11·N.
  Presentation nb_new(total, stack(rel, e11));

  auto basis = *n.family()->basis();
  std::vector<Matrix<Scalar>> f_new;
  for (std::size_t mu = 0; mu < basis.size(); ++mu) {
    Matrix<Scalar> fm(total, total, Scalar(0));
    for (std::size_t l = na; l < total; ++l) {
      // (0, μ, 0)·g_l = (f(μ ⊗ n_{l-na}), 0), expressed through the e11 images.
      auto w = zeros(total);
      for (std::size_t i = 0; i < na; ++i) w[i] = n.f()[mu](l - na, i);
      auto y = solve_left_scalar(ring, stacked, w);
      if (!y) throw std::logic_error("module_roundtrip: (0,m,0)·N does not lie in e11·N");
      for (std::size_t i = 0; i < total; ++i) fm(l, i) = (*y)[i];
    }
    f_new.push_back(std::move(fm));
  }

  Roundtrip out{TripleModule(n.family(), na_new, nb_new, f_new),
                Matrix<Scalar>(na, total, Scalar(0)),
                Matrix<Scalar>(total, na, Scalar(0)),
                Matrix<Scalar>(nb, total, Scalar(0)),
                Matrix<Scalar>(total, nb, Scalar(0)),
                false,
                {}};
  for (std::size_t i = 0; i < na; ++i) {
    out.forward_a(i, i) = 1;
    out.backward_a(i, i) = 1;
  }
  for (std::size_t j = 0; j < nb; ++j) {
    out.forward_b(j, na + j) = 1;
    out.backward_b(na + j, j) = 1;
  }

  const TripleModule& t = out.triple;
  if (!well_defined(ring, n.na(), t.na(), out.forward_a)) out.failure = "N_A -> e11 N not well defined";
  else if (!well_defined(ring, t.na(), n.na(), out.backward_a)) out.failure = "e11 N -> N_A not well defined";
  else if (!well_defined(ring, n.nb(), t.nb(), out.forward_b)) out.failure = "N_B -> N/e11 N not well defined";
  else if (!well_defined(ring, t.nb(), n.nb(), out.backward_b)) out.failure = "N/e11 N -> N_B not well defined";
  else if (!composite_identity(ring, n.na(), out.forward_a, out.backward_a)) out.failure = "N_A round trip is not the identity";
  else if (!composite_identity(ring, t.na(), out.backward_a, out.forward_a)) out.failure = "e11 N round trip is not the identity";
  else if (!composite_identity(ring, n.nb(), out.forward_b, out.backward_b)) out.failure = "N_B round trip is not the identity";
  else if (!composite_identity(ring, t.nb(), out.backward_b, out.forward_b)) out.failure = "N/e11 N round trip is not the identity";
  else {
    for (std::size_t mu = 0; mu < basis.size() && out.failure.empty(); ++mu)
      for (std::size_t j = 0; j < nb; ++j) {
        auto lhs = vec_times(n.f()[mu].row(j), out.forward_a);
        auto rhs = vec_times(out.forward_b.row(j), t.f()[mu]);
        if (!in_span(ring, t.na().rels, vec_sub(lhs, rhs))) {
          out.failure = "f is not compatible with the witnesses at basis element " + std::to_string(mu) +
                        ", generator " + std::to_string(j) + ": " + vec_to_string(lhs) + " vs " + vec_to_string(rhs);
          break;
        }
      }
  }
  out.verified = out.failure.empty();
  return out;
}

}  // namespace trilocal
