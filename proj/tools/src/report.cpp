#include "report.hpp"

#include "ufsr/error.hpp"
#include "ufsr/spec_io.hpp"

namespace ufsr::app {

Json dims_json(const GradedDims& d) { return {{"even", d.even}, {"odd", d.odd}, {"total", d.total()}}; }

Json elements_json(const std::vector<Element>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(format_element(x));
  return a;
}

Json factorization_json(const Factorization& f) { return elements_json(f.factors); }

std::string parity_name(const Element& x) {
  if (x.is_zero()) return "zero";
  const auto p = x.parity();
  if (!p) return "mixed";
  return *p ? "odd" : "even";
}

Json verdict_json(const UfsrVerdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["method"] = to_string(v.method);
  j["scope"] = to_string(v.scope);
  j["reason"] = v.reason;
  if (v.witness) {
    Json fs = Json::array();
    for (const auto& f : v.witness->factorizations) fs.push_back(factorization_json(f));
    j["witness"] = {{"subject", format_element(v.witness->subject)}, {"factorizations", fs}};
    const auto w = verify_witness(v);
    j["verification"] = {{"ok", w.ok}, {"transcript", w.transcript}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json ideal_json(const Ideal& ideal) {
  Json j;
  j["generators"] = elements_json(ideal.generators());
  j["basis"] = elements_json(ideal.basis());
  j["dims"] = dims_json(ideal.dims());
  const bool proper = ideal.is_proper();
  j["proper"] = proper;
  j["prime"] = proper && is_prime_ideal(ideal);
  j["maximal"] = proper && is_maximal_ideal(ideal);
  const auto n = nilpotency_index(ideal);
  j["nilpotency_index"] = n ? Json(*n) : Json(nullptr);
  return j;
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

bool is_flat(const Json& a) {
  for (const auto& x : a) {
    if (x.is_structured()) return false;
  }
  return true;
}

void render(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const auto& [key, v] : j.items()) {
    if (v.is_object()) {
      out += pad + key + ":\n";
      render(v, indent + 1, out);
    } else if (v.is_array() && is_flat(v)) {
      std::string line;
      for (const auto& x : v) line += (line.empty() ? "" : ", ") + scalar_text(x);
      out += pad + key + ": [" + line + "]\n";
    } else if (v.is_array()) {
      out += pad + key + ":\n";
      for (const auto& x : v) {
        if (x.is_object()) {
          out += pad + "  -\n";
          render(x, indent + 2, out);
        } else {
          std::string line;
          for (const auto& y : x) line += (line.empty() ? "" : ", ") + scalar_text(y);
          out += pad + "  - [" + line + "]\n";
        }
      }
    } else {
      out += pad + key + ": " + scalar_text(v) + "\n";
    }
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::string out;
  render(j, 0, out);
  return out;
}

AlgebraPtr load_algebra(const std::string& path) { return build_algebra(load_spec_file(path)); }

}  // namespace ufsr::app
