#include <algorithm>
#include <cctype>

#include "trilocal/error.hpp"
#include "trilocal/family.hpp"

namespace trilocal {

namespace {

const BimKey kUnitKey{0, {}, {}};

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Scalar parse_coefficient(std::string_view text, CoeffRing ring) {
  Scalar c = Scalar::parse(trim(text));
  if (!c.belongs_to(ring)) throw DomainError("coefficient " + c.to_string() + " is not in " + to_string(ring));
  return c;
}

// Splits "f(a,b)"-style arguments at top-level commas.
std::vector<std::string> split_args(std::string_view body) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    else if (body[i] == ')') --depth;
    else if (body[i] == ',' && depth == 0) {
      out.push_back(trim(body.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(body.substr(start)));
  return out;
}

// A sum of tagged calls "[c*]tag(args)" with "+"/"-" between them, as used by
// the free families.
struct TaggedTerm {
  Scalar coeff;
  std::vector<std::string> args;
};

std::vector<TaggedTerm> parse_tagged_sum(std::string_view text, char tag, CoeffRing ring) {
  std::vector<TaggedTerm> out;
  std::string s = trim(text);
  if (s == "0") return out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  bool first = true;
  while (true) {
    skip();
    if (i >= s.size()) break;
    Scalar sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? Scalar(-1) : Scalar(1);
      ++i;
      skip();
    } else if (!first) {
      throw DomainError("expected '+' or '-' in '" + s + "'");
    }
    first = false;
    Scalar coeff = sign;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t start = i;
      while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
      coeff *= parse_coefficient(std::string_view(s).substr(start, i - start), ring);
      skip();
      if (i >= s.size() || s[i] != '*') throw DomainError("expected '*' after coefficient in '" + s + "'");
      ++i;
      skip();
    }
    if (i + 1 >= s.size() || s[i] != tag || s[i + 1] != '(')
      throw DomainError(std::string("expected '") + tag + "(' in '" + s + "'");
    i += 2;
    std::size_t start = i;
    int depth = 1;
    while (i < s.size() && depth > 0) {
      if (s[i] == '(') ++depth;
      else if (s[i] == ')') --depth;
      ++i;
    }
    if (depth != 0) throw DomainError("unbalanced parentheses in '" + s + "'");
    out.push_back({coeff, split_args(std::string_view(s).substr(start, i - 1 - start))});
  }
  return out;
}

std::string join_plus(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "+";
    out += parts[i];
  }
  return out;
}

Word random_word(Rng& rng, const AlphabetPtr& alphabet) {
  if (alphabet->empty()) return {};
  std::uniform_int_distribution<int> len(0, 2), letter(0, static_cast<int>(alphabet->size()) - 1);
  Word w;
  for (int l = len(rng); l > 0; --l) w.push_back(letter(rng));
  return w;
}

Scalar random_integer(Rng& rng, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return Scalar(d(rng));
}

// ---------------------------------------------------------------------------
// regular: A = B = M = Z or Q, p = 1, T = A.

class RegularFamily final : public Family {
 public:
  explicit RegularFamily(FamilyDescriptor d) : Family(std::move(d)) {}

  std::string name() const override { return "regular(" + to_string(coeff_ring()) + ")"; }
  std::string bimodule_id() const override { return to_string(coeff_ring()); }
  BimElement p() const override { return BimElement::single(bimodule_id(), kUnitKey); }
  bool is_p_letter(const Letter& key) const override { return key == kUnitKey; }

  BimElement apply(const RingElem& a, const BimElement& m, const RingElem& b) const override {
    check_a(a);
    check_b(b);
    check_member(m);
    return m.scaled(a.constant_term() * b.constant_term());
  }

  PFactorization factor_p(const BimElement& m) const override {
    check_member(m);
    PFactorization f;
    RingElem a = a_scalar(m.coefficient(kUnitKey));
    f.left = a;
    f.right = b_scalar(m.coefficient(kUnitKey));
    f.split = PFactorization::Split{{{a, b_one()}}, zero()};
    return f;
  }

  std::optional<std::vector<BimElement>> basis() const override { return std::vector<BimElement>{p()}; }
  std::vector<Scalar> basis_coordinates(const BimElement& m) const override {
    check_member(m);
    return {m.coefficient(kUnitKey)};
  }

  OracleValue oracle_scalar(const Scalar& c) const override { return c; }
  OracleValue letter_oracle(const BimElement& m) const override {
    check_member(m);
    return m.coefficient(kUnitKey);
  }
  std::optional<TermMap> element_from_rational(const mpq_class& q) const override {
    Scalar c(q);
    if (!c.belongs_to(coeff_ring())) return std::nullopt;
    TermMap out;
    if (!c.is_zero()) out.emplace(TWord{}, c);
    return out;
  }

  BimElement parse_melem(std::string_view text) const override {
    return BimElement::single(bimodule_id(), kUnitKey, parse_coefficient(text, coeff_ring()));
  }
  std::string format_melem(const BimElement& m) const override {
    check_member(m);
    return m.coefficient(kUnitKey).to_string();
  }

  BimElement random_m(Rng& rng) const override {
    return BimElement::single(bimodule_id(), kUnitKey, random_scalar(rng));
  }

  FamilyPtr with_scaled_p(const Scalar& a0) const override;
};

// ---------------------------------------------------------------------------
// scaled: A = B = M = Z, p = k, T = Z[1/k]. Words are powers of x_1.

class ScaledFamily final : public Family {
 public:
  explicit ScaledFamily(FamilyDescriptor d) : Family(std::move(d)) {}

  const mpz_class& k() const { return descriptor_.k; }
  std::string name() const override { return "scaled(k=" + k().get_str() + ")"; }
  std::string bimodule_id() const override { return "Z"; }
  BimElement p() const override { return BimElement::single(bimodule_id(), kUnitKey, Scalar(k())); }
  bool is_p_letter(const Letter&) const override { return false; }

  BimElement apply(const RingElem& a, const BimElement& m, const RingElem& b) const override {
    check_a(a);
    check_b(b);
    check_member(m);
    return m.scaled(a.constant_term() * b.constant_term());
  }

  PFactorization factor_p(const BimElement& m) const override {
    check_member(m);
    PFactorization f;
    mpz_class n = m.coefficient(kUnitKey).numerator();
    if (mpz_divisible_p(n.get_mpz_t(), k().get_mpz_t())) {
      mpz_class q = n / k();
      f.left = a_scalar(Scalar(q));
      f.right = b_scalar(Scalar(q));
    }
    return f;
  }

  std::optional<std::vector<BimElement>> basis() const override {
    return std::vector<BimElement>{BimElement::single(bimodule_id(), kUnitKey)};
  }
  std::vector<Scalar> basis_coordinates(const BimElement& m) const override {
    check_member(m);
    return {m.coefficient(kUnitKey)};
  }

  // Relation (id) reads k·x_1 = 1; every element is N·x_1^R with k ∤ N or R = 0.
  void collapse(TermMap& terms) const override {
    if (terms.empty()) return;
    unsigned long r = 0;
    for (const auto& [w, c] : terms) r = std::max<unsigned long>(r, w.size());
    mpz_class n = 0;
    for (const auto& [w, c] : terms) {
      mpz_class scale;
      mpz_pow_ui(scale.get_mpz_t(), k().get_mpz_t(), r - w.size());
      n += c.numerator() * scale;
    }
    KadicFraction v = kadic_normalize(k(), n, r);
    terms.clear();
    if (v.is_zero()) return;
    terms.emplace(TWord(v.exponent(), kUnitKey), Scalar(v.numerator()));
  }

  OracleValue oracle_scalar(const Scalar& c) const override { return KadicFraction::integer(k(), c.numerator()); }
  OracleValue letter_oracle(const BimElement& m) const override {
    check_member(m);
    return kadic_normalize(k(), m.coefficient(kUnitKey).numerator(), 1);
  }
  std::optional<TermMap> element_from_rational(const mpq_class& q) const override {
    auto v = KadicFraction::from_rational(k(), q);
    if (!v) return std::nullopt;
    TermMap out;
    if (!v->is_zero()) out.emplace(TWord(v->exponent(), kUnitKey), Scalar(v->numerator()));
    return out;
  }

  BimElement parse_melem(std::string_view text) const override {
    return BimElement::single(bimodule_id(), kUnitKey, parse_coefficient(text, CoeffRing::Z));
  }
  std::string format_melem(const BimElement& m) const override {
    check_member(m);
    return m.coefficient(kUnitKey).to_string();
  }

  BimElement random_m(Rng& rng) const override {
    return BimElement::single(bimodule_id(), kUnitKey, random_integer(rng, -20, 20));
  }

  FamilyPtr with_scaled_p(const Scalar& a0) const override {
    if (!a0.is_integer() || a0.sign() <= 0)
      throw UnsupportedError("scaled family: a0 must be a positive integer, got " + a0.to_string());
    FamilyDescriptor d = descriptor_;
    d.k = k() * a0.numerator();
    return make_family(d);
  }
};

FamilyPtr RegularFamily::with_scaled_p(const Scalar& a0) const {
  if (coeff_ring() != CoeffRing::Z || !a0.is_integer() || a0.sign() <= 0)
    throw UnsupportedError("regular family: changing p is supported over Z with a positive integer a0");
  if (a0.is_one()) return make_family(descriptor_);
  FamilyDescriptor d;
  d.kind = FamilyKind::scaled;
  d.ring = CoeffRing::Z;
  d.k = a0.numerator();
  return make_family(d);
}

// ---------------------------------------------------------------------------
// double: M = R0 ⊕ R0, p = (1,0), T = R0[x] with x = x_{(0,1)}.

class DoubleFamily final : public Family {
 public:
  explicit DoubleFamily(FamilyDescriptor d) : Family(std::move(d)) {}

  static BimKey first() { return BimKey{0, {}, {}}; }
  static BimKey second() { return BimKey{1, {}, {}}; }

  std::string name() const override { return "double(" + to_string(coeff_ring()) + ")"; }
  std::string bimodule_id() const override { return "double-" + to_string(coeff_ring()); }
  BimElement p() const override { return BimElement::single(bimodule_id(), first()); }
  bool is_p_letter(const Letter& key) const override { return key == kUnitKey; }

  BimElement apply(const RingElem& a, const BimElement& m, const RingElem& b) const override {
    check_a(a);
    check_b(b);
    check_member(m);
    return m.scaled(a.constant_term() * b.constant_term());
  }

  PFactorization factor_p(const BimElement& m) const override {
    check_member(m);
    PFactorization f;
    Scalar a = m.coefficient(first());
    if (m.coefficient(second()).is_zero()) {
      f.left = a_scalar(a);
      f.right = b_scalar(a);
    }
    f.split = PFactorization::Split{{{a_scalar(a), b_one()}},
                                    BimElement::single(bimodule_id(), second(), m.coefficient(second()))};
    return f;
  }

  std::optional<std::vector<BimElement>> basis() const override {
    return std::vector<BimElement>{BimElement::single(bimodule_id(), first()),
                                   BimElement::single(bimodule_id(), second())};
  }
  std::vector<Scalar> basis_coordinates(const BimElement& m) const override {
    check_member(m);
    return {m.coefficient(first()), m.coefficient(second())};
  }

  OracleValue oracle_scalar(const Scalar& c) const override { return Polynomial::constant(coeff_ring(), c); }
  OracleValue letter_oracle(const BimElement& m) const override {
    check_member(m);
    return Polynomial(coeff_ring(), {m.coefficient(first()), m.coefficient(second())});
  }

  BimElement parse_melem(std::string_view text) const override {
    std::string s = trim(text);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
      throw DomainError("double family element must look like (a,b), got '" + s + "'");
    auto args = split_args(std::string_view(s).substr(1, s.size() - 2));
    if (args.size() != 2) throw DomainError("double family element needs two components, got '" + s + "'");
    BimElement m = zero();
    m.add_term(first(), parse_coefficient(args[0], coeff_ring()));
    m.add_term(second(), parse_coefficient(args[1], coeff_ring()));
    return m;
  }
  std::string format_melem(const BimElement& m) const override {
    check_member(m);
    return "(" + m.coefficient(first()).to_string() + "," + m.coefficient(second()).to_string() + ")";
  }

  BimElement random_m(Rng& rng) const override {
    BimElement m = zero();
    m.add_term(first(), random_scalar(rng));
    m.add_term(second(), random_scalar(rng));
    return m;
  }
};

// ---------------------------------------------------------------------------
// tensor-free: A = R0<S>, B = R0<U>, M = A ⊗ B, p = 1 ⊗ 1, T = R0<S ∪ U>.
// Key (0, wA, wB) is the pure tensor wA ⊗ wB.

class TensorFreeFamily final : public Family {
 public:
  explicit TensorFreeFamily(FamilyDescriptor d) : Family(std::move(d)), module_id_("tensor:" + descriptor_.to_json()) {
    std::vector<std::string> names = descriptor_.a_gens;
    names.insert(names.end(), descriptor_.b_gens.begin(), descriptor_.b_gens.end());
    oracle_alphabet_ = make_alphabet(std::move(names));
  }

  std::string name() const override { return "tensor-free"; }
  std::string bimodule_id() const override { return module_id_; }
  BimElement p() const override { return BimElement::single(bimodule_id(), kUnitKey); }
  bool is_p_letter(const Letter& key) const override { return key == kUnitKey; }

  BimElement apply(const RingElem& a, const BimElement& m, const RingElem& b) const override {
    check_a(a);
    check_b(b);
    check_member(m);
    BimElement out = zero();
    for (const auto& [wa, ca] : a.terms())
      for (const auto& [key, cm] : m.coords())
        for (const auto& [wb, cb] : b.terms())
          out.add_term(BimKey{0, concat(wa, key.left), concat(key.right, wb)}, ca * cm * cb);
    return out;
  }

  PFactorization factor_p(const BimElement& m) const override {
    check_member(m);
    PFactorization f;
    RingElem left(coeff_ring(), a_alphabet_), right(coeff_ring(), b_alphabet_);
    bool left_ok = true, right_ok = true;
    PFactorization::Split split{{}, zero()};
    for (const auto& [key, c] : m.coords()) {
      if (key.right.empty()) left.add_term(key.left, c);
      else left_ok = false;
      if (key.left.empty()) right.add_term(key.right, c);
      else right_ok = false;
      split.pairs.emplace_back(RingElem::monomial(coeff_ring(), a_alphabet_, key.left, c),
                               RingElem::monomial(coeff_ring(), b_alphabet_, key.right));
    }
    if (left_ok) f.left = left;
    if (right_ok) f.right = right;
    f.split = std::move(split);
    return f;
  }

  std::optional<LetterSplit> split_left(const Letter& l) const override {
    if (l.left.empty() || (l.left.size() == 1 && l.right.empty())) return std::nullopt;
    return LetterSplit{BimKey{0, {l.left.front()}, {}}, BimKey{0, Word(l.left.begin() + 1, l.left.end()), l.right}};
  }
  std::optional<LetterSplit> split_right(const Letter& l) const override {
    if (!l.left.empty() || l.right.size() < 2) return std::nullopt;
    return LetterSplit{BimKey{0, {}, {l.right.back()}}, BimKey{0, {}, Word(l.right.begin(), l.right.end() - 1)}};
  }

  OracleValue oracle_scalar(const Scalar& c) const override {
    return RingElem::scalar(coeff_ring(), oracle_alphabet_, c);
  }
  OracleValue letter_oracle(const BimElement& m) const override {
    check_member(m);
    const int shift = static_cast<int>(a_alphabet_->size());
    RingElem out(coeff_ring(), oracle_alphabet_);
    for (const auto& [key, c] : m.coords()) {
      Word w = key.left;
      for (int g : key.right) w.push_back(g + shift);
      out.add_term(w, c);
    }
    return out;
  }

  BimElement parse_melem(std::string_view text) const override {
    BimElement m = zero();
    for (const auto& term : parse_tagged_sum(text, 't', coeff_ring())) {
      if (term.args.size() != 2) throw DomainError("tensor element must look like t(a,b)");
      RingElem a = parse_a(term.args[0]).scaled(term.coeff);
      RingElem b = parse_b(term.args[1]);
      m = m + apply(a, p(), b);
    }
    return m;
  }
  std::string format_melem(const BimElement& m) const override {
    check_member(m);
    std::vector<std::string> parts;
    for (const auto& [key, c] : m.coords()) {
      parts.push_back("t(" + RingElem::monomial(coeff_ring(), a_alphabet_, key.left, c).to_string() + "," +
                      RingElem::monomial(coeff_ring(), b_alphabet_, key.right).to_string() + ")");
    }
    return join_plus(parts);
  }

  BimElement random_m(Rng& rng) const override {
    BimElement m = zero();
    std::uniform_int_distribution<int> terms(1, 2);
    for (int t = terms(rng); t > 0; --t)
      m.add_term(BimKey{0, random_word(rng, a_alphabet_), random_word(rng, b_alphabet_)}, random_scalar(rng));
    return m;
  }

 private:
  std::string module_id_;
  AlphabetPtr oracle_alphabet_;
};

// ---------------------------------------------------------------------------
// hnn-free: A = B = R0<S>, M = A ⊕ (A ⊗ A), p = (1, 0), T = R0<S ∪ {x}>.
// Keys: (0, w, []) is (w, 0); (1, w1, w2) is (0, w1 ⊗ w2).

class HnnFreeFamily final : public Family {
 public:
  explicit HnnFreeFamily(FamilyDescriptor d) : Family(std::move(d)), module_id_("hnn:" + descriptor_.to_json()) {
    std::vector<std::string> names = descriptor_.a_gens;
    names.push_back("x");
    oracle_alphabet_ = make_alphabet(std::move(names));
  }

  std::string name() const override { return "hnn-free"; }
  std::string bimodule_id() const override { return module_id_; }
  BimElement p() const override { return BimElement::single(bimodule_id(), kUnitKey); }
  bool is_p_letter(const Letter& key) const override { return key == kUnitKey; }

  BimElement apply(const RingElem& a, const BimElement& m, const RingElem& b) const override {
    check_a(a);
    check_b(b);
    check_member(m);
    BimElement out = zero();
    for (const auto& [wa, ca] : a.terms())
      for (const auto& [key, cm] : m.coords())
        for (const auto& [wb, cb] : b.terms()) {
          if (key.slot == 0) out.add_term(BimKey{0, concat(concat(wa, key.left), wb), {}}, ca * cm * cb);
          else out.add_term(BimKey{1, concat(wa, key.left), concat(key.right, wb)}, ca * cm * cb);
        }
    return out;
  }

  PFactorization factor_p(const BimElement& m) const override {
    check_member(m);
    PFactorization f;
    RingElem first(coeff_ring(), a_alphabet_);
    BimElement residual = zero();
    for (const auto& [key, c] : m.coords()) {
      if (key.slot == 0) first.add_term(key.left, c);
      else residual.add_term(key, c);
    }
    if (residual.is_zero()) {
      f.left = first;
      f.right = first;
    }
    f.split = PFactorization::Split{{{first, b_one()}}, residual};
    return f;
  }

  std::optional<LetterSplit> split_left(const Letter& l) const override {
    if (l.slot == 0) {
      if (l.left.size() < 2) return std::nullopt;
      return LetterSplit{BimKey{0, {l.left.front()}, {}}, BimKey{0, Word(l.left.begin() + 1, l.left.end()), {}}};
    }
    if (l.left.empty()) return std::nullopt;
    return LetterSplit{BimKey{0, {l.left.front()}, {}}, BimKey{1, Word(l.left.begin() + 1, l.left.end()), l.right}};
  }
  std::optional<LetterSplit> split_right(const Letter& l) const override {
    if (l.slot != 1 || !l.left.empty() || l.right.empty()) return std::nullopt;
    return LetterSplit{BimKey{0, {l.right.back()}, {}}, BimKey{1, {}, Word(l.right.begin(), l.right.end() - 1)}};
  }

  OracleValue oracle_scalar(const Scalar& c) const override {
    return RingElem::scalar(coeff_ring(), oracle_alphabet_, c);
  }
  OracleValue letter_oracle(const BimElement& m) const override {
    check_member(m);
    const int x = static_cast<int>(a_alphabet_->size());
    RingElem out(coeff_ring(), oracle_alphabet_);
    for (const auto& [key, c] : m.coords()) {
      if (key.slot == 0) {
        out.add_term(key.left, c);
      } else {
        Word w = key.left;
        w.push_back(x);
        w.insert(w.end(), key.right.begin(), key.right.end());
        out.add_term(w, c);
      }
    }
    return out;
  }

  BimElement parse_melem(std::string_view text) const override {
    BimElement m = zero();
    const BimElement tensor_unit = BimElement::single(bimodule_id(), BimKey{1, {}, {}});
    for (const auto& term : parse_tagged_sum(text, 'h', coeff_ring())) {
      if (term.args.size() == 1) {
        m = m + apply(parse_a(term.args[0]).scaled(term.coeff), p(), b_one());
      } else if (term.args.size() == 2) {
        m = m + apply(parse_a(term.args[0]).scaled(term.coeff), tensor_unit, parse_b(term.args[1]));
      } else {
        throw DomainError("hnn element must look like h(a) or h(a1,a2)");
      }
    }
    return m;
  }
  std::string format_melem(const BimElement& m) const override {
    check_member(m);
    std::vector<std::string> parts;
    for (const auto& [key, c] : m.coords()) {
      std::string head = RingElem::monomial(coeff_ring(), a_alphabet_, key.left, c).to_string();
      if (key.slot == 0) parts.push_back("h(" + head + ")");
      else parts.push_back("h(" + head + "," + RingElem::monomial(coeff_ring(), a_alphabet_, key.right).to_string() + ")");
    }
    return join_plus(parts);
  }

  BimElement random_m(Rng& rng) const override {
    BimElement m = zero();
    std::uniform_int_distribution<int> terms(1, 3), slot(0, 1);
    for (int t = terms(rng); t > 0; --t) {
      if (slot(rng) == 0) m.add_term(BimKey{0, random_word(rng, a_alphabet_), {}}, random_scalar(rng));
      else m.add_term(BimKey{1, random_word(rng, a_alphabet_), random_word(rng, a_alphabet_)}, random_scalar(rng));
    }
    return m;
  }

 private:
  std::string module_id_;
  AlphabetPtr oracle_alphabet_;
};

}  // namespace

FamilyPtr make_family(const FamilyDescriptor& descriptor) {
  switch (descriptor.kind) {
    case FamilyKind::regular: return std::make_shared<RegularFamily>(descriptor);
    case FamilyKind::scaled:
      if (descriptor.k < 2) throw SchemaError("scaled family requires k >= 2");
      return std::make_shared<ScaledFamily>(descriptor);
    case FamilyKind::double_sum: return std::make_shared<DoubleFamily>(descriptor);
    case FamilyKind::tensor_free: return std::make_shared<TensorFreeFamily>(descriptor);
    case FamilyKind::hnn_free: return std::make_shared<HnnFreeFamily>(descriptor);
  }
  throw SchemaError("unknown family kind");
}

}  // namespace trilocal
