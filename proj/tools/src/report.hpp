#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "ufsr/algebra.hpp"
#include "ufsr/factorization.hpp"
#include "ufsr/structure.hpp"
#include "ufsr_app/app.hpp"

namespace ufsr::app {

using Json = nlohmann::ordered_json;

struct Report {
  Json json;
  /// Preformatted text; when empty the JSON is rendered generically.
  std::string text;
  int exit_code = kOk;
};

Json dims_json(const GradedDims& d);
Json elements_json(const std::vector<Element>& xs);
Json factorization_json(const Factorization& f);
Json verdict_json(const UfsrVerdict& v);
Json ideal_json(const Ideal& ideal);
std::string parity_name(const Element& x);

/// "key: value" lines, nested objects indented.
std::string render_text(const Json& j);

AlgebraPtr load_algebra(const std::string& path);

Report census_command(const Request& r);
Report verify_paper_command(const Request& r);

}  // namespace ufsr::app
