#include "trilocal/t_ring.hpp"

#include <optional>

#include "trilocal/error.hpp"

namespace trilocal {

namespace {

void add_term(TermMap& terms, const TWord& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

bool same_family(const FamilyPtr& a, const FamilyPtr& b) { return a == b || a->id() == b->id(); }

void expand_into(const Family& family, const Letter& key, TWord& out, Budget* budget) {
  if (family.is_p_letter(key)) return;
  if (auto s = family.split_left(key)) {
    if (budget) budget->charge();
    out.push_back(s->atom);
    expand_into(family, s->rest, out, budget);
    return;
  }
  if (auto s = family.split_right(key)) {
    if (budget) budget->charge();
    expand_into(family, s->rest, out, budget);
    out.push_back(s->atom);
    return;
  }
  out.push_back(key);
}

}  // namespace

TElement::TElement(FamilyPtr family) : family_(std::move(family)) {
  if (!family_) throw MismatchError("element without a family");
}

TElement TElement::scalar(FamilyPtr family, const Scalar& c) {
  if (!c.belongs_to(family->coeff_ring()))
    throw DomainError("scalar " + c.to_string() + " is not in " + trilocal::to_string(family->coeff_ring()));
  TermMap terms;
  add_term(terms, {}, c);
  return from_atoms(std::move(family), std::move(terms));
}

TElement TElement::from_atoms(FamilyPtr family, TermMap terms) {
  TElement out(std::move(family));
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second.is_zero()) it = terms.erase(it);
    else ++it;
  }
  out.family_->collapse(terms);
  out.terms_ = std::move(terms);
  return out;
}

bool TElement::is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Scalar TElement::coefficient(const TWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void TElement::check_compatible(const TElement& other) const {
  if (!same_family(family_, other.family_))
    throw MismatchError("elements of T for different families: " + family_->name() + " and " +
                        other.family_->name());
}

std::string TElement::to_string() const {
  if (terms_.empty()) return "0";
  const Family& f = *family_;
  auto letter = [&](const Letter& key, const Scalar& c) {
    return "x[" + f.format_melem(BimElement::single(f.bimodule_id(), key, c)) + "]";
  };
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
      continue;
    }
    // The coefficient is folded into the first letter: c·x_m = x_{c·m}.
    out += letter(w[0], mag);
    std::size_t i = 1;
    if (mag.is_one()) {
      while (i < w.size() && w[i] == w[0]) ++i;
      if (i > 1) out += "^" + std::to_string(i);
    }
    while (i < w.size()) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      out += "*" + letter(w[i], 1);
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
  }
  return out;
}

TElement TElement::scaled(const Scalar& c) const {
  if (!c.belongs_to(family_->coeff_ring()))
    throw DomainError("scalar " + c.to_string() + " is not in " + trilocal::to_string(family_->coeff_ring()));
  TermMap terms;
  for (const auto& [w, v] : terms_) add_term(terms, w, v * c);
  return from_atoms(family_, std::move(terms));
}

TElement operator+(const TElement& a, const TElement& b) {
  a.check_compatible(b);
  TermMap terms = a.terms_;
  for (const auto& [w, c] : b.terms_) add_term(terms, w, c);
  return TElement::from_atoms(a.family_, std::move(terms));
}

TElement operator*(const TElement& a, const TElement& b) { return t_mul(a, b); }

bool operator==(const TElement& a, const TElement& b) {
  return same_family(a.family_, b.family_) && a.terms_ == b.terms_;
}

TElement t_add(const TElement& a, const TElement& b) { return a + b; }

TElement t_mul(const TElement& a, const TElement& b, Budget* budget) {
  a.check_compatible(b);
  if (budget) budget->charge(a.terms().size() * b.terms().size());
  TermMap terms;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      TWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      add_term(terms, w, ca * cb);
    }
  return TElement::from_atoms(a.family(), std::move(terms));
}

TElement t_pow(const TElement& a, unsigned long n, Budget* budget) {
  TElement result = TElement::one(a.family());
  TElement base = a;
  while (n > 0) {
    if (n & 1UL) result = t_mul(result, base, budget);
    n >>= 1;
    if (n > 0) base = t_mul(base, base, budget);
  }
  return result;
}

TWord expand_letter(const Family& family, const Letter& key, Budget* budget) {
  TWord out;
  expand_into(family, key, out, budget);
  return out;
}

TElement t_generator(const FamilyPtr& family, const BimElement& m, Budget* budget) {
  family->check_member(m);
  TermMap terms;
  for (const auto& [key, c] : m.coords()) add_term(terms, expand_letter(*family, key, budget), c);
  return TElement::from_atoms(family, std::move(terms));
}

Expr Expr::constant(const Scalar& c, std::size_t offset) {
  Expr e;
  e.kind = Kind::constant;
  e.value = c;
  e.offset = offset;
  return e;
}

Expr Expr::letter(BimElement m, std::size_t offset) {
  Expr e;
  e.kind = Kind::letter;
  e.melem = std::move(m);
  e.offset = offset;
  return e;
}

Expr Expr::binary(Kind kind, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = kind;
  e.offset = lhs.offset;
  e.children.push_back(std::move(lhs));
  e.children.push_back(std::move(rhs));
  return e;
}

Expr random_expr(const Family& family, Rng& rng, std::size_t max_terms, std::size_t max_letters) {
  std::uniform_int_distribution<std::size_t> terms(1, max_terms), letters(0, max_letters);
  std::optional<Expr> sum;
  for (std::size_t t = terms(rng); t > 0; --t) {
    Expr term = Expr::constant(family.random_scalar(rng));
    for (std::size_t l = letters(rng); l > 0; --l)
      term = Expr::binary(Expr::Kind::product, std::move(term), Expr::letter(family.random_m(rng)));
    sum = sum ? Expr::binary(Expr::Kind::sum, std::move(*sum), std::move(term)) : std::move(term);
  }
  return std::move(*sum);
}

TElement t_normalize(const Expr& e, const FamilyPtr& family, Budget& budget) {
  switch (e.kind) {
    case Expr::Kind::constant: return TElement::scalar(family, e.value);
    case Expr::Kind::letter: return t_generator(family, e.melem, &budget);
    case Expr::Kind::sum:
      return t_normalize(e.children.at(0), family, budget) + t_normalize(e.children.at(1), family, budget);
    case Expr::Kind::difference:
      return t_normalize(e.children.at(0), family, budget) - t_normalize(e.children.at(1), family, budget);
    case Expr::Kind::product:
      return t_mul(t_normalize(e.children.at(0), family, budget), t_normalize(e.children.at(1), family, budget),
                   &budget);
    case Expr::Kind::power: return t_pow(t_normalize(e.children.at(0), family, budget), e.exponent, &budget);
    case Expr::Kind::negate: return -t_normalize(e.children.at(0), family, budget);
  }
  throw std::logic_error("unknown expression kind");
}

TElement t_normalize(const Expr& e, const FamilyPtr& family) {
  Budget budget;
  return t_normalize(e, family, budget);
}

TElement rho_A(const FamilyPtr& family, const RingElem& a) {
  return t_generator(family, family->left_act(a, family->p()));
}

TElement rho_M(const FamilyPtr& family, const BimElement& m) { return t_generator(family, m); }

TElement rho_B(const FamilyPtr& family, const RingElem& b) {
  return t_generator(family, family->right_act(family->p(), b));
}

std::string to_string(TEq value) {
  switch (value) {
    case TEq::equal: return "equal";
    case TEq::distinct: return "distinct";
    case TEq::unknown: return "unknown";
  }
  return "?";
}

TEq t_eq(const TElement& a, const TElement& b) {
  a.check_compatible(b);
  return a == b ? TEq::equal : TEq::distinct;
}

TEq t_eq(const Expr& a, const Expr& b, const FamilyPtr& family, std::size_t budget) {
  Budget shared(budget);
  try {
    return t_eq(t_normalize(a, family, shared), t_normalize(b, family, shared));
  } catch (const BudgetExhausted&) {
    return TEq::unknown;
  }
}

OracleValue family_iso(const TElement& e) {
  const Family& f = *e.family();
  OracleValue out = f.oracle_scalar(0);
  for (const auto& [w, c] : e.terms()) {
    OracleValue term = f.oracle_scalar(c);
    for (const auto& key : w) term = term * f.letter_oracle(BimElement::single(f.bimodule_id(), key));
    out = out + term;
  }
  return out;
}

}  // namespace trilocal
