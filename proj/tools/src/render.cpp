#include "render.hpp"

namespace trilocal::cli {

Json report_to_json(const Report& report) {
  Json out;
  out["title"] = report.title;
  out["seed"] = report.seed;
  for (const auto& [key, value] : report.facts) out[key] = value;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json j;
    j["name"] = c.name;
    j["status"] = c.passed ? "pass" : "fail";
    j["cases"] = c.cases;
    if (!c.passed) j["counterexample"] = c.counterexample;
    checks.push_back(j);
  }
  out["checks"] = checks;
  out["status"] = report.passed() ? "pass" : "fail";
  return out;
}

namespace {

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool is_flat(const Json& v) {
  if (!v.is_array()) return !v.is_object();
  for (const auto& e : v)
    if (e.is_object()) return false;
    else if (e.is_array() && !is_flat(e)) return false;
  return true;
}

std::string flat_text(const Json& v) {
  if (!v.is_array()) return scalar_text(v);
  std::string out = "[";
  bool first = true;
  for (const auto& e : v) {
    out += (first ? "" : ", ") + flat_text(e);
    first = false;
  }
  return out + "]";
}

void render_into(const Json& v, const std::string& indent, std::string& out) {
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) {
      if (is_flat(value)) {
        out += indent + key + ": " + flat_text(value) + "\n";
      } else {
        out += indent + key + ":\n";
        render_into(value, indent + "  ", out);
      }
    }
  } else if (v.is_array()) {
    for (const auto& e : v) {
      if (e.is_object()) {
        std::string inner;
        render_into(e, indent + "  ", inner);
        // First line of each entry carries the list marker.
        inner.replace(indent.size(), 2, "- ");
        out += inner;
      } else {
        out += indent + "- " + flat_text(e) + "\n";
      }
    }
  } else {
    out += indent + scalar_text(v) + "\n";
  }
}

}  // namespace

std::string render_text(const Json& doc) {
  std::string out;
  render_into(doc, "", out);
  return out;
}

std::string render(const Json& doc, bool json_format) { return json_format ? doc.dump(2) + "\n" : render_text(doc); }

}  // namespace trilocal::cli
