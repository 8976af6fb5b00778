#pragma once

// Computable (A,B)-bimodules M with a distinguished element p. A family fixes
// the rings A and B, the bimodule M, the element p, the hooks the rewriting
// engine in t_ring.hpp needs to normalize T(M,p), and the oracle ring T(M,p)
// is isomorphic to.

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "trilocal/free_algebra.hpp"
#include "trilocal/oracle.hpp"
#include "trilocal/scalar.hpp"

namespace trilocal {

using Rng = std::mt19937_64;

/// Elements of A and B. Z and Q are free algebras over the empty alphabet.
using RingElem = FreeAlgebraElement;

enum class FamilyKind { regular, double_sum, scaled, tensor_free, hnn_free };

std::string to_string(FamilyKind kind);

/// Parameters selecting a family; round-trips through its JSON form, e.g.
/// {"kind":"scaled","k":2}, {"kind":"double","ring":"Q"},
/// {"kind":"tensor-free","A_gens":["s"],"B_gens":["u"]}.
struct FamilyDescriptor {
  FamilyKind kind = FamilyKind::regular;
  CoeffRing ring = CoeffRing::Z;
  mpz_class k = 0;
  std::vector<std::string> a_gens;
  std::vector<std::string> b_gens;

  /// Throws SchemaError on unknown kinds, unknown fields or incomplete parameters.
  static FamilyDescriptor parse(std::string_view json_text);
  /// Canonical compact JSON.
  std::string to_json() const;
};

/// Basis key of a bimodule coordinate. Its meaning is family specific:
/// the slot selects a summand, left/right are words in the generators of A
/// (resp. B) for tensor coordinates a ⊗ b.
struct BimKey {
  int slot = 0;
  Word left;
  Word right;

  friend bool operator==(const BimKey&, const BimKey&) = default;
};

struct BimKeyLess {
  bool operator()(const BimKey& a, const BimKey& b) const {
    if (a.slot != b.slot) return a.slot < b.slot;
    LengthLex word_less;
    if (a.left != b.left) return word_less(a.left, b.left);
    return word_less(a.right, b.right);
  }
};

/// Element of M in canonical coordinates (no zero coefficients).
class BimElement {
 public:
  using Coords = std::map<BimKey, Scalar, BimKeyLess>;

  BimElement() = default;
  explicit BimElement(std::string module_id) : module_id_(std::move(module_id)) {}
  static BimElement single(std::string module_id, BimKey key, const Scalar& c = 1);

  const std::string& module_id() const noexcept { return module_id_; }
  const Coords& coords() const noexcept { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  Scalar coefficient(const BimKey& key) const;
  void add_term(const BimKey& key, const Scalar& c);

  BimElement scaled(const Scalar& c) const;
  friend BimElement operator+(const BimElement& a, const BimElement& b);
  friend BimElement operator-(const BimElement& a, const BimElement& b) { return a + (-b); }
  BimElement operator-() const { return scaled(Scalar(-1)); }
  friend bool operator==(const BimElement& a, const BimElement& b) {
    return a.module_id_ == b.module_id_ && a.coords_ == b.coords_;
  }

 private:
  std::string module_id_;
  Coords coords_;
};

/// Result of bim_factor_p. Each present factor reproduces m exactly.
struct PFactorization {
  std::optional<RingElem> left;   ///< a with m = a·p
  std::optional<RingElem> right;  ///< b with m = p·b
  struct Split {
    std::vector<std::pair<RingElem, RingElem>> pairs;  ///< m = Σ aᵢ·p·bᵢ + residual
    BimElement residual;
  };
  std::optional<Split> split;
};

// Words of T(M,p): products of letters x_m, each letter indexed by a basis key
// with coefficient 1.
using Letter = BimKey;
using TWord = std::vector<Letter>;

struct TWordOrder {
  bool operator()(const TWord& a, const TWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    BimKeyLess less;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (less(a[i], b[i])) return true;
      if (less(b[i], a[i])) return false;
    }
    return false;
  }
};

using TermMap = std::map<TWord, Scalar, TWordOrder>;

/// x_key = x_atom · x_rest (relation (a)) or x_rest · x_atom (relation (b)).
struct LetterSplit {
  Letter atom;
  Letter rest;
};

class Family {
 public:
  explicit Family(FamilyDescriptor descriptor);
  virtual ~Family() = default;
  Family(const Family&) = delete;
  Family& operator=(const Family&) = delete;

  const FamilyDescriptor& descriptor() const noexcept { return descriptor_; }
  /// Identity of the pair (M, p); elements of T compare only within one id.
  virtual std::string id() const { return descriptor_json_; }
  virtual std::string name() const = 0;
  CoeffRing coeff_ring() const noexcept { return descriptor_.ring; }
  virtual FamilyKind kind() const { return descriptor_.kind; }

  // --- rings A and B ---------------------------------------------------
  const AlphabetPtr& a_alphabet() const noexcept { return a_alphabet_; }
  const AlphabetPtr& b_alphabet() const noexcept { return b_alphabet_; }
  RingElem a_scalar(const Scalar& c) const { return RingElem::scalar(coeff_ring(), a_alphabet_, c); }
  RingElem b_scalar(const Scalar& c) const { return RingElem::scalar(coeff_ring(), b_alphabet_, c); }
  RingElem a_one() const { return a_scalar(1); }
  RingElem b_one() const { return b_scalar(1); }
  RingElem parse_a(std::string_view text) const;
  RingElem parse_b(std::string_view text) const;
  std::string format_ring(const RingElem& r) const;

  // --- the bimodule M ----------------------------------------------------
  virtual std::string bimodule_id() const = 0;
  virtual BimElement p() const = 0;
  BimElement zero() const { return BimElement(bimodule_id()); }
  /// a·m·b.
  virtual BimElement apply(const RingElem& a, const BimElement& m, const RingElem& b) const = 0;
  BimElement left_act(const RingElem& a, const BimElement& m) const { return apply(a, m, b_one()); }
  BimElement right_act(const BimElement& m, const RingElem& b) const { return apply(a_one(), m, b); }
  /// Throws MismatchError unless m belongs to this family's bimodule.
  void check_member(const BimElement& m) const;
  void check_a(const RingElem& a) const;
  void check_b(const RingElem& b) const;

  virtual PFactorization factor_p(const BimElement& m) const = 0;
  /// Free basis of M as a left A-module, when the family declares one.
  virtual std::optional<std::vector<BimElement>> basis() const { return std::nullopt; }
  /// Coordinates of m over basis(); throws UnsupportedError without a basis.
  virtual std::vector<Scalar> basis_coordinates(const BimElement& m) const;

  // --- rewriting hooks ------------------------------------------------
  /// Relation (id): the letter equals p and is erased.
  virtual bool is_p_letter(const Letter& key) const;
  /// Relation (a) read right to left: x_{s·m'} -> x_{s·p} x_{m'}.
  virtual std::optional<LetterSplit> split_left(const Letter&) const { return std::nullopt; }
  /// Relation (b) read right to left: x_{m'·u} -> x_{m'} x_{p·u}.
  virtual std::optional<LetterSplit> split_right(const Letter&) const { return std::nullopt; }
  /// Linear relations among words of atoms that (+) and (id) induce beyond
  /// letter expansion. Must leave a canonical term map.
  virtual void collapse(TermMap&) const {}

  // --- oracle ring ------------------------------------------------------
  virtual OracleValue oracle_scalar(const Scalar& c) const = 0;
  /// Closed-form image of the generator x_m in the oracle ring.
  virtual OracleValue letter_oracle(const BimElement& m) const = 0;
  /// Inverse isomorphism on rationals, for families whose oracle ring is a
  /// subring of Q. nullopt when q is not in the image.
  virtual std::optional<TermMap> element_from_rational(const mpq_class&) const { return std::nullopt; }

  // --- literals -------------------------------------------------------
  virtual BimElement parse_melem(std::string_view text) const = 0;
  virtual std::string format_melem(const BimElement& m) const = 0;

  // --- sampling -------------------------------------------------------
  virtual Scalar random_scalar(Rng& rng) const;
  virtual RingElem random_a(Rng& rng) const;
  virtual RingElem random_b(Rng& rng) const;
  virtual BimElement random_m(Rng& rng) const = 0;

  /// The family (M, a0·p), used for the induced map T(M,p) -> T(M,a0 p).
  virtual std::shared_ptr<const Family> with_scaled_p(const Scalar& a0) const;

 protected:
  RingElem random_ring_elem(Rng& rng, const AlphabetPtr& alphabet) const;

  FamilyDescriptor descriptor_;
  std::string descriptor_json_;
  AlphabetPtr a_alphabet_;
  AlphabetPtr b_alphabet_;
};

using FamilyPtr = std::shared_ptr<const Family>;

FamilyPtr make_family(const FamilyDescriptor& descriptor);
FamilyPtr make_family(std::string_view json_text);

/// Parses a ring element literal: sums of [rational "*"] gen ("*" gen)* or rationals.
RingElem parse_ring_literal(std::string_view text, CoeffRing ring, const AlphabetPtr& alphabet);
/// Inverse of parse_ring_literal for single monomials c·w ("1" for the empty word).
std::string format_ring_literal(const RingElem& r);

namespace fixtures {

/// Negative control: wraps a family but drops relation (id), so x_p survives
/// as a letter. Used to show the σ-inverting checks detect a broken ρ.
FamilyPtr drop_identity_relation(FamilyPtr inner);

}  // namespace fixtures

}  // namespace trilocal
