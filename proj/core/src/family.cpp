#include "trilocal/family.hpp"

#include <algorithm>
#include <cctype>
#include <nlohmann/json.hpp>
#include <set>

#include "trilocal/error.hpp"

namespace trilocal {

using nlohmann::json;

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::regular: return "regular";
    case FamilyKind::double_sum: return "double";
    case FamilyKind::scaled: return "scaled";
    case FamilyKind::tensor_free: return "tensor-free";
    case FamilyKind::hnn_free: return "hnn-free";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Descriptor JSON

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::vector<std::string> read_gens(const json& j, const char* field) {
  if (!j.contains(field)) return {};
  const json& v = j.at(field);
  if (!v.is_array()) throw SchemaError(std::string(field) + " must be an array of generator names");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& g : v) {
    if (!g.is_string()) throw SchemaError(std::string(field) + " entries must be strings");
    auto name = g.get<std::string>();
    if (!is_identifier(name)) throw SchemaError("invalid generator name '" + name + "'");
    if (!seen.insert(name).second) throw SchemaError("duplicate generator name '" + name + "'");
    out.push_back(name);
  }
  return out;
}

}  // namespace

FamilyDescriptor FamilyDescriptor::parse(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("family descriptor is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("family descriptor must be a JSON object");
  static const std::set<std::string> known = {"kind", "ring", "k", "A_gens", "B_gens"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) throw SchemaError("unknown family descriptor field '" + key + "'");
  if (!j.contains("kind") || !j["kind"].is_string()) throw SchemaError("family descriptor needs a string 'kind'");

  FamilyDescriptor d;
  const auto kind = j["kind"].get<std::string>();
  if (kind == "regular") d.kind = FamilyKind::regular;
  else if (kind == "double") d.kind = FamilyKind::double_sum;
  else if (kind == "scaled") d.kind = FamilyKind::scaled;
  else if (kind == "tensor-free") d.kind = FamilyKind::tensor_free;
  else if (kind == "hnn-free") d.kind = FamilyKind::hnn_free;
  else throw SchemaError("unknown family kind '" + kind + "'");

  const bool q_default = d.kind == FamilyKind::double_sum || d.kind == FamilyKind::tensor_free ||
                         d.kind == FamilyKind::hnn_free;
  d.ring = q_default ? CoeffRing::Q : CoeffRing::Z;
  if (j.contains("ring")) {
    if (!j["ring"].is_string()) throw SchemaError("'ring' must be \"Z\" or \"Q\"");
    auto r = j["ring"].get<std::string>();
    if (r == "Z") d.ring = CoeffRing::Z;
    else if (r == "Q") d.ring = CoeffRing::Q;
    else throw SchemaError("'ring' must be \"Z\" or \"Q\", got '" + r + "'");
  }

  if (d.kind == FamilyKind::scaled) {
    if (!j.contains("k")) throw SchemaError("scaled family requires 'k'");
    const json& k = j["k"];
    if (k.is_number_integer()) d.k = mpz_class(k.dump());
    else if (k.is_string()) {
      try {
        d.k = mpz_class(k.get<std::string>());
      } catch (const std::invalid_argument&) {
        throw SchemaError("'k' must be an integer");
      }
    } else throw SchemaError("'k' must be an integer");
    if (d.k < 2) throw SchemaError("scaled family requires k >= 2");
    if (d.ring != CoeffRing::Z) throw SchemaError("scaled family is defined over Z");
  } else if (j.contains("k")) {
    throw SchemaError("'k' is only meaningful for the scaled family");
  }

  d.a_gens = read_gens(j, "A_gens");
  d.b_gens = read_gens(j, "B_gens");
  switch (d.kind) {
    case FamilyKind::regular:
    case FamilyKind::double_sum:
    case FamilyKind::scaled:
      if (!d.a_gens.empty() || !d.b_gens.empty())
        throw SchemaError(kind + " family takes no generator alphabets");
      break;
    case FamilyKind::tensor_free:
      if (!j.contains("A_gens") || !j.contains("B_gens"))
        throw SchemaError("tensor-free family requires 'A_gens' and 'B_gens' (possibly empty)");
      for (const auto& g : d.a_gens)
        if (std::find(d.b_gens.begin(), d.b_gens.end(), g) != d.b_gens.end())
          throw SchemaError("generator '" + g + "' appears in both A_gens and B_gens");
      break;
    case FamilyKind::hnn_free:
      if (!j.contains("A_gens")) throw SchemaError("hnn-free family requires 'A_gens' (possibly empty)");
      if (j.contains("B_gens") && d.b_gens != d.a_gens)
        throw SchemaError("hnn-free family has B = A; omit 'B_gens' or repeat 'A_gens'");
      d.b_gens = d.a_gens;
      if (std::find(d.a_gens.begin(), d.a_gens.end(), "x") != d.a_gens.end())
        throw SchemaError("'x' is reserved for the stable letter of the hnn-free family");
      break;
  }
  return d;
}

std::string FamilyDescriptor::to_json() const {
  json j = json::object();
  j["kind"] = to_string(kind);
  j["ring"] = trilocal::to_string(ring);
  if (kind == FamilyKind::scaled) {
    if (k.fits_slong_p()) j["k"] = k.get_si();
    else j["k"] = k.get_str();
  }
  if (kind == FamilyKind::tensor_free || kind == FamilyKind::hnn_free) j["A_gens"] = a_gens;
  if (kind == FamilyKind::tensor_free) j["B_gens"] = b_gens;
  return j.dump();
}

// ---------------------------------------------------------------------------
// BimElement

BimElement BimElement::single(std::string module_id, BimKey key, const Scalar& c) {
  BimElement out(std::move(module_id));
  out.add_term(key, c);
  return out;
}

Scalar BimElement::coefficient(const BimKey& key) const {
  auto it = coords_.find(key);
  return it == coords_.end() ? Scalar(0) : it->second;
}

void BimElement::add_term(const BimKey& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coords_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

BimElement BimElement::scaled(const Scalar& c) const {
  BimElement out(module_id_);
  for (const auto& [k, v] : coords_) out.add_term(k, v * c);
  return out;
}

BimElement operator+(const BimElement& a, const BimElement& b) {
  if (a.module_id_ != b.module_id_) throw MismatchError("bimodule elements from different families");
  BimElement out = a;
  for (const auto& [k, v] : b.coords_) out.add_term(k, v);
  return out;
}

// ---------------------------------------------------------------------------
// Ring literals

namespace {

struct LiteralCursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError(what + " in ring literal '" + std::string(text) + "' at offset " + std::to_string(pos));
  }
};

}  // namespace

RingElem parse_ring_literal(std::string_view text, CoeffRing ring, const AlphabetPtr& alphabet) {
  LiteralCursor cur{text};
  RingElem out(ring, alphabet);
  bool first = true;
  if (cur.at_end()) cur.fail("empty element");
  while (!cur.at_end()) {
    Scalar sign = 1;
    char c = cur.peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? Scalar(-1) : Scalar(1);
      ++cur.pos;
    } else if (!first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    Scalar coeff = sign;
    Word word;
    for (bool need_factor = true; need_factor;) {
      cur.skip_ws();
      if (cur.pos >= text.size()) cur.fail("expected a factor");
      char f = text[cur.pos];
      if (std::isdigit(static_cast<unsigned char>(f))) {
        std::size_t start = cur.pos;
        while (cur.pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[cur.pos])) || text[cur.pos] == '/'))
          ++cur.pos;
        coeff *= Scalar::parse(text.substr(start, cur.pos - start));
      } else if (std::isalpha(static_cast<unsigned char>(f)) || f == '_') {
        std::size_t start = cur.pos;
        while (cur.pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[cur.pos])) || text[cur.pos] == '_'))
          ++cur.pos;
        std::string name(text.substr(start, cur.pos - start));
        auto it = std::find(alphabet->begin(), alphabet->end(), name);
        if (it == alphabet->end()) cur.fail("unknown generator '" + name + "'");
        word.push_back(static_cast<int>(it - alphabet->begin()));
      } else {
        cur.fail("unexpected character '" + std::string(1, f) + "'");
      }
      need_factor = cur.peek() == '*';
      if (need_factor) ++cur.pos;
    }
    if (!coeff.belongs_to(ring)) cur.fail("coefficient " + coeff.to_string() + " outside " + to_string(ring));
    out.add_term(word, coeff);
  }
  return out;
}

std::string format_ring_literal(const RingElem& r) { return r.to_string(); }

// ---------------------------------------------------------------------------
// Family base

Family::Family(FamilyDescriptor descriptor)
    : descriptor_(std::move(descriptor)),
      descriptor_json_(descriptor_.to_json()),
      a_alphabet_(make_alphabet(descriptor_.a_gens)),
      b_alphabet_(make_alphabet(descriptor_.b_gens)) {
  if (descriptor_.kind == FamilyKind::hnn_free) b_alphabet_ = a_alphabet_;
}

RingElem Family::parse_a(std::string_view text) const { return parse_ring_literal(text, coeff_ring(), a_alphabet_); }
RingElem Family::parse_b(std::string_view text) const { return parse_ring_literal(text, coeff_ring(), b_alphabet_); }
std::string Family::format_ring(const RingElem& r) const { return format_ring_literal(r); }

void Family::check_member(const BimElement& m) const {
  if (m.module_id() != bimodule_id())
    throw MismatchError("element of bimodule '" + m.module_id() + "' used with family " + name());
}

void Family::check_a(const RingElem& a) const {
  if (a.ring() != coeff_ring() || !same_alphabet(a.alphabet(), a_alphabet_))
    throw MismatchError("element is not in the ring A of family " + name());
}

void Family::check_b(const RingElem& b) const {
  if (b.ring() != coeff_ring() || !same_alphabet(b.alphabet(), b_alphabet_))
    throw MismatchError("element is not in the ring B of family " + name());
}

std::vector<Scalar> Family::basis_coordinates(const BimElement&) const {
  throw UnsupportedError("family " + name() + " has no finite free basis");
}

bool Family::is_p_letter(const Letter& key) const {
  const BimElement pp = p();
  return pp.coords().size() == 1 && pp.coords().begin()->first == key && pp.coords().begin()->second.is_one();
}

Scalar Family::random_scalar(Rng& rng) const {
  std::uniform_int_distribution<long> num(-5, 5);
  if (coeff_ring() == CoeffRing::Z) return Scalar(num(rng));
  std::uniform_int_distribution<long> den(1, 3);
  long n = num(rng);
  long d = den(rng);
  return Scalar(mpz_class(n), mpz_class(d));
}

RingElem Family::random_ring_elem(Rng& rng, const AlphabetPtr& alphabet) const {
  if (alphabet->empty()) return RingElem::scalar(coeff_ring(), alphabet, random_scalar(rng));
  RingElem out(coeff_ring(), alphabet);
  std::uniform_int_distribution<int> terms(1, 2), len(0, 2);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(alphabet->size()) - 1);
  for (int t = terms(rng); t > 0; --t) {
    Word w;
    for (int l = len(rng); l > 0; --l) w.push_back(letter(rng));
    out.add_term(w, random_scalar(rng));
  }
  return out;
}

RingElem Family::random_a(Rng& rng) const { return random_ring_elem(rng, a_alphabet_); }
RingElem Family::random_b(Rng& rng) const { return random_ring_elem(rng, b_alphabet_); }

std::shared_ptr<const Family> Family::with_scaled_p(const Scalar&) const {
  throw UnsupportedError("changing p is not supported for family " + name());
}

FamilyPtr make_family(std::string_view json_text) { return make_family(FamilyDescriptor::parse(json_text)); }

// ---------------------------------------------------------------------------
// Negative-control fixture

namespace fixtures {

namespace {

class DroppedIdentity final : public Family {
 public:
  explicit DroppedIdentity(FamilyPtr inner) : Family(inner->descriptor()), inner_(std::move(inner)) {}

  std::string id() const override { return "drop-id:" + inner_->id(); }
  std::string name() const override { return inner_->name() + " without relation (id)"; }
  std::string bimodule_id() const override { return inner_->bimodule_id(); }
  BimElement p() const override { return inner_->p(); }
  BimElement apply(const RingElem& a, const BimElement& m, const RingElem& b) const override {
    return inner_->apply(a, m, b);
  }
  PFactorization factor_p(const BimElement& m) const override { return inner_->factor_p(m); }
  std::optional<std::vector<BimElement>> basis() const override { return inner_->basis(); }
  std::vector<Scalar> basis_coordinates(const BimElement& m) const override { return inner_->basis_coordinates(m); }
  bool is_p_letter(const Letter&) const override { return false; }
  std::optional<LetterSplit> split_left(const Letter& l) const override { return inner_->split_left(l); }
  std::optional<LetterSplit> split_right(const Letter& l) const override { return inner_->split_right(l); }
  void collapse(TermMap&) const override {}
  OracleValue oracle_scalar(const Scalar& c) const override { return inner_->oracle_scalar(c); }
  OracleValue letter_oracle(const BimElement& m) const override { return inner_->letter_oracle(m); }
  BimElement parse_melem(std::string_view text) const override { return inner_->parse_melem(text); }
  std::string format_melem(const BimElement& m) const override { return inner_->format_melem(m); }
  BimElement random_m(Rng& rng) const override { return inner_->random_m(rng); }

 private:
  FamilyPtr inner_;
};

}  // namespace

FamilyPtr drop_identity_relation(FamilyPtr inner) { return std::make_shared<DroppedIdentity>(std::move(inner)); }

}  // namespace fixtures

}  // namespace trilocal
