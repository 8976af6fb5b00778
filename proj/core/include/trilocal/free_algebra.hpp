#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "trilocal/scalar.hpp"

namespace trilocal {

/// A word is a finite sequence of generator indices; the empty word is 1.
using Word = std::vector<int>;

/// Length-then-lexicographic order on words.
struct LengthLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Ordered generator names. Shared between elements of one ring.
using Alphabet = std::vector<std::string>;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names);
bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

/// Element of the free associative algebra Z<S> or Q<S>.
///
/// Stored as word -> coefficient with no zero coefficients. Z and Q themselves
/// are the free algebras over the empty alphabet.
class FreeAlgebraElement {
 public:
  using TermMap = std::map<Word, Scalar, LengthLex>;

  FreeAlgebraElement(CoeffRing ring, AlphabetPtr alphabet);

  static FreeAlgebraElement scalar(CoeffRing ring, AlphabetPtr alphabet, const Scalar& c);
  static FreeAlgebraElement monomial(CoeffRing ring, AlphabetPtr alphabet, Word word, const Scalar& c = 1);
  /// Single generator by name; throws DomainError for an unknown name.
  static FreeAlgebraElement generator(CoeffRing ring, AlphabetPtr alphabet, const std::string& name);

  CoeffRing ring() const noexcept { return ring_; }
  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const TermMap& terms() const noexcept { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// True when the element is c * (empty word) for some c (including 0).
  bool is_scalar() const;
  /// Coefficient of the empty word.
  Scalar constant_term() const;
  Scalar coefficient(const Word& w) const;

  /// Adds c * w in place.
  void add_term(const Word& w, const Scalar& c);

  std::string to_string() const;
  std::string word_to_string(const Word& w) const;

  friend FreeAlgebraElement operator+(const FreeAlgebraElement& a, const FreeAlgebraElement& b);
  friend FreeAlgebraElement operator-(const FreeAlgebraElement& a, const FreeAlgebraElement& b);
  friend FreeAlgebraElement operator*(const FreeAlgebraElement& a, const FreeAlgebraElement& b);
  FreeAlgebraElement operator-() const;
  FreeAlgebraElement scaled(const Scalar& c) const;
  friend bool operator==(const FreeAlgebraElement& a, const FreeAlgebraElement& b);

  /// Throws MismatchError unless both operands share ring and alphabet.
  void check_compatible(const FreeAlgebraElement& other) const;

 private:
  CoeffRing ring_;
  AlphabetPtr alphabet_;
  TermMap terms_;
};

/// Bilinear concatenation product.
FreeAlgebraElement free_mul(const FreeAlgebraElement& a, const FreeAlgebraElement& b);

}  // namespace trilocal
