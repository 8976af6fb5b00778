#include "trilocal/free_algebra.hpp"

#include <algorithm>

#include "trilocal/error.hpp"

namespace trilocal {

AlphabetPtr make_alphabet(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

FreeAlgebraElement::FreeAlgebraElement(CoeffRing ring, AlphabetPtr alphabet)
    : ring_(ring), alphabet_(alphabet ? std::move(alphabet) : make_alphabet({})) {}

FreeAlgebraElement FreeAlgebraElement::scalar(CoeffRing ring, AlphabetPtr alphabet, const Scalar& c) {
  return monomial(ring, std::move(alphabet), {}, c);
}

FreeAlgebraElement FreeAlgebraElement::monomial(CoeffRing ring, AlphabetPtr alphabet, Word word,
                                                const Scalar& c) {
  FreeAlgebraElement out(ring, std::move(alphabet));
  for (int g : word)
    if (g < 0 || static_cast<std::size_t>(g) >= out.alphabet_->size())
      throw DomainError("generator index out of range");
  out.add_term(word, c);
  return out;
}

FreeAlgebraElement FreeAlgebraElement::generator(CoeffRing ring, AlphabetPtr alphabet,
                                                 const std::string& name) {
  auto it = std::find(alphabet->begin(), alphabet->end(), name);
  if (it == alphabet->end()) throw DomainError("unknown generator '" + name + "'");
  int index = static_cast<int>(it - alphabet->begin());
  return monomial(ring, std::move(alphabet), {index});
}

bool FreeAlgebraElement::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Scalar FreeAlgebraElement::constant_term() const { return coefficient({}); }

Scalar FreeAlgebraElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void FreeAlgebraElement::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  if (!c.belongs_to(ring_))
    throw DomainError("coefficient " + c.to_string() + " is not in " + trilocal::to_string(ring_));
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string FreeAlgebraElement::word_to_string(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    out += (*alphabet_)[static_cast<std::size_t>(w[i])];
  }
  return out;
}

std::string FreeAlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Scalar mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      out += mag.to_string();
    } else {
      if (!mag.is_one()) out += mag.to_string() + "*";
      out += word_to_string(w);
    }
  }
  return out;
}

void FreeAlgebraElement::check_compatible(const FreeAlgebraElement& other) const {
  if (ring_ != other.ring_) throw MismatchError("free algebra elements over different coefficient rings");
  if (!same_alphabet(alphabet_, other.alphabet_))
    throw MismatchError("free algebra elements over different alphabets");
}

FreeAlgebraElement operator+(const FreeAlgebraElement& a, const FreeAlgebraElement& b) {
  a.check_compatible(b);
  FreeAlgebraElement out = a;
  for (const auto& [w, c] : b.terms_) out.add_term(w, c);
  return out;
}

FreeAlgebraElement operator-(const FreeAlgebraElement& a, const FreeAlgebraElement& b) { return a + (-b); }

FreeAlgebraElement FreeAlgebraElement::operator-() const { return scaled(Scalar(-1)); }

FreeAlgebraElement FreeAlgebraElement::scaled(const Scalar& c) const {
  FreeAlgebraElement out(ring_, alphabet_);
  for (const auto& [w, coeff] : terms_) out.add_term(w, coeff * c);
  return out;
}

FreeAlgebraElement operator*(const FreeAlgebraElement& a, const FreeAlgebraElement& b) {
  a.check_compatible(b);
  FreeAlgebraElement out(a.ring_, a.alphabet_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

bool operator==(const FreeAlgebraElement& a, const FreeAlgebraElement& b) {
  return a.ring_ == b.ring_ && same_alphabet(a.alphabet_, b.alphabet_) && a.terms_ == b.terms_;
}

FreeAlgebraElement free_mul(const FreeAlgebraElement& a, const FreeAlgebraElement& b) { return a * b; }

}  // namespace trilocal
