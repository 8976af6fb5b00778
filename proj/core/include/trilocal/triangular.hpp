#pragma once

// The triangular ring R = (A M; 0 B), its column modules P = (A; 0) and
// Q = (M; B), the map σ: P -> Q fixed by p, and left R-modules written as
// triples (N_A, N_B, f: M ⊗_B N_B -> N_A).

#include <optional>
#include <vector>

#include "trilocal/family.hpp"
#include "trilocal/matrix.hpp"

namespace trilocal {

struct TriElement {
  RingElem a;
  BimElement m;
  RingElem b;

  friend bool operator==(const TriElement&, const TriElement&) = default;
};

TriElement tri_make(const Family& family, const RingElem& a, const BimElement& m, const RingElem& b);
TriElement tri_identity(const Family& family);
TriElement tri_zero(const Family& family);
TriElement tri_random(const Family& family, Rng& rng);
TriElement tri_add(const Family& family, const TriElement& x, const TriElement& y);
/// (a a', a m' + m b', b b').
TriElement tri_mul(const Family& family, const TriElement& x, const TriElement& y);
std::string tri_to_string(const Family& family, const TriElement& r);

/// Column Q = (M; B).
struct QColumn {
  BimElement m;
  RingElem b;

  friend bool operator==(const QColumn&, const QColumn&) = default;
};

struct SigmaMorphism {
  BimElement p;
};

SigmaMorphism sigma_of(const Family& family);
/// σ(a; 0) = (a·p; 0).
QColumn sigma_apply(const Family& family, const SigmaMorphism& sigma, const RingElem& a);

/// Generators and relation rows (one row per relation, one column per generator).
struct Presentation {
  std::size_t gens = 0;
  Matrix<Scalar> rels;

  Presentation() = default;
  Presentation(std::size_t g, Matrix<Scalar> r);
  static Presentation free(std::size_t g) { return Presentation(g, Matrix<Scalar>(0, g, Scalar(0))); }
};

/// A left R-module as a triple. The family must expose a finite free basis
/// of M and have A = B = Z or Q. f[μ] is an n_B × n_A matrix whose row j
/// holds the N_A-coordinates of f(μ ⊗ n_j).
class TripleModule {
 public:
  /// Element (x; y) with x ∈ A^{n_A}, y ∈ B^{n_B} coordinate vectors.
  struct Element {
    std::vector<Scalar> a;
    std::vector<Scalar> b;
    friend bool operator==(const Element&, const Element&) = default;
  };

  /// Throws DomainError when f is not well defined on N_B's relations.
  TripleModule(FamilyPtr family, Presentation na, Presentation nb, std::vector<Matrix<Scalar>> f);
  /// Skips the well-definedness check; for negative controls only.
  static TripleModule unchecked(FamilyPtr family, Presentation na, Presentation nb, std::vector<Matrix<Scalar>> f);

  const FamilyPtr& family() const noexcept { return family_; }
  const Presentation& na() const noexcept { return na_; }
  const Presentation& nb() const noexcept { return nb_; }
  const std::vector<Matrix<Scalar>>& f() const noexcept { return f_; }
  std::size_t basis_size() const { return f_.size(); }
  CoeffRing ring() const { return family_->coeff_ring(); }

  /// f(m ⊗ y) as an N_A coordinate vector.
  std::vector<Scalar> f_apply(const BimElement& m, const std::vector<Scalar>& y) const;
  /// Equal in N (difference lies in the relation span).
  bool equivalent(const Element& x, const Element& y) const;
  Element random_element(Rng& rng) const;
  /// Checks f ∘ (N_B relations) ⊆ span(N_A relations); returns the first offending (μ, row).
  std::optional<std::pair<std::size_t, std::size_t>> first_ill_defined() const;

 private:
  struct Unchecked {};
  TripleModule(Unchecked, FamilyPtr family, Presentation na, Presentation nb, std::vector<Matrix<Scalar>> f);

  FamilyPtr family_;
  Presentation na_;
  Presentation nb_;
  std::vector<Matrix<Scalar>> f_;
};

/// Random well-defined triple with at most `max_gens` generators per side
/// and generated entries bounded by `max_entry`. Relations of N_A that make
/// f well defined are added as needed and may exceed the bound.
TripleModule random_triple_module(const FamilyPtr& family, Rng& rng, std::size_t max_gens = 4, long max_entry = 10);

/// (a·x + f(m ⊗ y), b·y).
TripleModule::Element triple_action(const TripleModule& n, const TriElement& r, const TripleModule::Element& v);

/// Result of turning a triple into a column R-module and back.
struct Roundtrip {
  TripleModule triple;
  /// Generator maps between the input and the extracted triple, as matrices
  /// whose row i is the image of generator i.
  Matrix<Scalar> forward_a, backward_a, forward_b, backward_b;
  /// Witness checks: well-definedness of all four maps, both composites
  /// identities modulo relations, and f compatibility.
  bool verified = false;
  std::string failure;
};

Roundtrip module_roundtrip(const TripleModule& n);

}  // namespace trilocal
