#include "trilocal/module_spec.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <set>

#include "trilocal/error.hpp"

namespace trilocal {

using nlohmann::json;

namespace {

Scalar read_entry(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Scalar(mpz_class(v.dump()));
  if (v.is_string()) {
    try {
      return Scalar::parse(v.get<std::string>());
    } catch (const Error&) {
    }
  }
  throw SchemaError(where + ": entries must be integers or rational strings, got " + v.dump());
}

Matrix<Scalar> read_matrix(const json& v, std::size_t cols, const std::string& where) {
  if (!v.is_array()) throw SchemaError(where + " must be an array of rows");
  Matrix<Scalar> out(0, cols, Scalar(0));
  for (const auto& row : v) {
    if (!row.is_array() || row.size() != cols)
      throw SchemaError(where + ": every row must have " + std::to_string(cols) + " entries");
    std::vector<Scalar> values;
    for (const auto& e : row) values.push_back(read_entry(e, where));
    out.push_row(values);
  }
  return out;
}

Presentation read_presentation(const json& j, const char* name) {
  if (!j.contains(name) || !j[name].is_object()) throw SchemaError(std::string("missing object '") + name + "'");
  const json& p = j[name];
  for (const auto& [key, _] : p.items())
    if (key != "gens" && key != "rels") throw SchemaError(std::string(name) + ": unknown field '" + key + "'");
  if (!p.contains("gens") || !p["gens"].is_number_integer() || p["gens"].get<long>() < 0)
    throw SchemaError(std::string(name) + ".gens must be a non-negative integer");
  const auto gens = static_cast<std::size_t>(p["gens"].get<long>());
  Matrix<Scalar> rels(0, gens, Scalar(0));
  if (p.contains("rels")) rels = read_matrix(p["rels"], gens, std::string(name) + ".rels");
  return Presentation(gens, rels);
}

json write_matrix(const Matrix<Scalar>& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Scalar& c = m(i, j);
      if (c.is_integer() && c.numerator().fits_slong_p()) row.push_back(c.numerator().get_si());
      else row.push_back(c.to_string());
    }
    out.push_back(row);
  }
  return out;
}

}  // namespace

TripleModule parse_triple_module(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("module spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("module spec must be a JSON object");
  static const std::set<std::string> known = {"family", "NA", "NB", "f"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) throw SchemaError("unknown module spec field '" + key + "'");
  if (!j.contains("family") || !j["family"].is_object()) throw SchemaError("module spec needs a 'family' object");
  FamilyPtr family = make_family(j["family"].dump());
  auto basis = family->basis();
  if (!basis) throw SchemaError("family " + family->name() + " has no finite basis of M");
  Presentation na = read_presentation(j, "NA");
  Presentation nb = read_presentation(j, "NB");

  std::vector<Matrix<Scalar>> f(basis->size(), Matrix<Scalar>(nb.gens, na.gens, Scalar(0)));
  if (j.contains("f")) {
    if (!j["f"].is_object()) throw SchemaError("'f' must map basis elements to matrices");
    for (const auto& [key, value] : j["f"].items()) {
      BimElement m;
      try {
        m = family->parse_melem(key);
      } catch (const Error& e) {
        throw SchemaError("f: '" + key + "' is not an element of M: " + e.what());
      }
      auto it = std::find(basis->begin(), basis->end(), m);
      if (it == basis->end()) throw SchemaError("f: '" + key + "' is not a basis element of M");
      f[static_cast<std::size_t>(it - basis->begin())] = read_matrix(value, na.gens, "f[" + key + "]");
      if (f[static_cast<std::size_t>(it - basis->begin())].rows() != nb.gens)
        throw SchemaError("f[" + key + "] must have one row per generator of NB");
    }
  }
  try {
    return TripleModule(family, na, nb, f);
  } catch (const DomainError& e) {
    throw SchemaError(e.what());
  }
}

std::string triple_module_to_json(const TripleModule& n) {
  json j;
  j["family"] = json::parse(n.family()->descriptor().to_json());
  j["NA"] = {{"gens", n.na().gens}, {"rels", write_matrix(n.na().rels)}};
  j["NB"] = {{"gens", n.nb().gens}, {"rels", write_matrix(n.nb().rels)}};
  json f = json::object();
  const auto basis = *n.family()->basis();
  for (std::size_t mu = 0; mu < basis.size(); ++mu) f[n.family()->format_melem(basis[mu])] = write_matrix(n.f()[mu]);
  j["f"] = f;
  return j.dump();
}

}  // namespace trilocal
