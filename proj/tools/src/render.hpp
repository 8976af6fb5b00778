#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "trilocal/report.hpp"

namespace trilocal::cli {

using Json = nlohmann::ordered_json;

Json report_to_json(const Report& report);
/// Indented "key: value" rendering of a JSON document; field order preserved.
std::string render_text(const Json& doc);
std::string render(const Json& doc, bool json_format);

}  // namespace trilocal::cli
