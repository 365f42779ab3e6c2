#include "ufsr/spec_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "ufsr/error.hpp"

namespace ufsr {

namespace {

using nlohmann::json;

Domain parse_field(const json& f) {
  if (!f.is_object() || !f.contains("kind") || !f["kind"].is_string())
    throw SpecError("\"field\" must be an object with a string \"kind\"");
  const auto kind = f["kind"].get<std::string>();
  if (kind == "Q") return Domain::rationals();
  if (kind == "Fp") {
    if (!f.contains("p") || !f["p"].is_number_unsigned()) throw SpecError("\"Fp\" field needs a positive integer \"p\"");
    const auto p = f["p"].get<std::uint64_t>();
    if (!is_prime(p)) throw SpecError("field characteristic " + std::to_string(p) + " is not prime");
    return Domain::prime_field(p);
  }
  throw SpecError("unknown field kind \"" + kind + "\" (expected \"Q\" or \"Fp\")");
}

std::vector<std::string> string_list(const json& j, const char* key) {
  if (!j.is_array()) throw SpecError(std::string("\"") + key + "\" must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw SpecError(std::string("\"") + key + "\" must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

AlgebraSpec parse_spec_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SpecError("spec must be a JSON object");
  if (!j.contains("field")) throw SpecError("spec is missing \"field\"");
  if (!j.contains("odd_generators")) throw SpecError("spec is missing \"odd_generators\"");
  AlgebraSpec spec;
  spec.field = parse_field(j["field"]);
  spec.odd_generators = string_list(j["odd_generators"], "odd_generators");
  if (j.contains("relations")) spec.relations = string_list(j["relations"], "relations");
  return spec;
}

AlgebraSpec load_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_json(buf.str());
}

std::string spec_to_json(const AlgebraSpec& spec) {
  json j;
  if (spec.field.kind() == DomainKind::PrimeField) {
    j["field"] = {{"kind", "Fp"}, {"p", spec.field.characteristic()}};
  } else {
    j["field"] = {{"kind", "Q"}};
  }
  j["odd_generators"] = spec.odd_generators;
  j["relations"] = spec.relations;
  return j.dump();
}

}  // namespace ufsr
