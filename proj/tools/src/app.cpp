#include "ufsr_app/app.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "report.hpp"
#include "ufsr/dimension.hpp"
#include "ufsr/error.hpp"
#include "ufsr/exhaustive.hpp"
#include "ufsr/spec_io.hpp"

namespace ufsr::app {

namespace {

constexpr std::uint64_t kListLimit = std::uint64_t{1} << 16;

ElementEnumeration listable(const AlgebraPtr& alg) {
  auto en = enumerate_elements(alg);
  if (en.size() > kListLimit)
    throw Unsupported("the algebra has " + std::to_string(en.size()) + " elements; listing is limited to 65536");
  return en;
}

Element require_element(const AlgebraPtr& alg, const Request& r) {
  if (!r.element) throw ParseError("this command needs --element", 0);
  return parse_element(alg, *r.element);
}

Report info(const AlgebraPtr& alg, const Request&) {
  const auto& spec = alg->spec();
  Json j;
  j["field"] = alg->field().name();
  j["odd_generators"] = spec.odd_generators;
  j["relations"] = spec.relations;
  j["dims"] = dims_json(alg->graded_dims());
  Json basis = Json::array();
  for (Mask m : alg->basis()) basis.push_back(alg->monomial_name(m));
  j["basis"] = basis;
  j["relation_ideal_dims"] = dims_json(alg->relation_ideal_dims());
  if (alg->field().is_finite()) {
    j["element_count"] = enumerate_elements(alg).size();
  } else {
    j["element_count"] = nullptr;
  }
  j["local"] = is_local(alg);
  j["superdomain"] = is_superdomain(alg);
  j["superfield"] = is_superfield(alg);
  return {j, {}, kOk};
}

Report elements(const AlgebraPtr& alg, const Request&) {
  const auto en = listable(alg);
  Json list = Json::array();
  for (const Element& x : en) list.push_back({{"element", format_element(x)}, {"parity", parity_name(x)}});
  Json j;
  j["count"] = en.size();
  j["elements"] = list;
  std::string text;
  for (const auto& e : list) text += e["element"].get<std::string>() + "  [" + e["parity"].get<std::string>() + "]\n";
  return {j, "count: " + std::to_string(en.size()) + "\n" + text, kOk};
}

Report units(const AlgebraPtr& alg, const Request&) {
  const auto en = listable(alg);
  std::vector<Element> us;
  for (const Element& x : en) {
    if (is_unit(x)) us.push_back(x);
  }
  Json j;
  j["count"] = us.size();
  j["units"] = elements_json(us);
  return {j, {}, kOk};
}

Report irreducibles(const AlgebraPtr& alg, const Request& r) {
  if (!alg->field().is_finite()) throw Unsupported("irreducible classes can only be listed over a finite field");
  ExhaustiveFactorizer engine(alg, FactorScope::Full, r.cap);
  std::vector<std::size_t> sizes(engine.class_count(), 0);
  for (ExhaustiveFactorizer::Index x = 0; x < engine.size(); ++x) {
    if (engine.class_of(x) != ExhaustiveFactorizer::kNone) ++sizes[engine.class_of(x)];
  }
  Json classes = Json::array();
  std::size_t normal = 0;
  for (std::uint32_t c = 0; c < engine.class_count(); ++c) {
    const auto rep = engine.representative(c);
    if (!engine.is_irreducible(rep)) continue;
    const bool nrm = engine.is_normal(rep);
    normal += nrm;
    classes.push_back({{"representative", format_element(engine.element(rep))},
                       {"size", sizes[c]},
                       {"normal", nrm},
                       {"parity", parity_name(engine.element(rep))}});
  }
  Json j;
  j["class_count"] = engine.class_count();
  j["irreducible_class_count"] = classes.size();
  j["normal_irreducible_class_count"] = normal;
  j["irreducible_classes"] = classes;
  return {j, {}, kOk};
}

Report factor(const AlgebraPtr& alg, const Request& r) {
  const Element x = require_element(alg, r);
  if (!alg->field().is_finite()) throw Unsupported("factorizations can only be enumerated over a finite field");
  if (x.is_zero() || is_unit(x)) throw PreconditionError("only nonzero non-units have factorizations");
  const auto fs = factorizations(x, r.cap);
  Json j;
  j["subject"] = format_element(x);
  Json list = Json::array();
  for (const auto& f : fs) list.push_back(factorization_json(f));
  j["factorizations"] = list;
  j["class_count"] = fs.size();
  j["verdict"] = fs.size() == 1 ? "unique" : (fs.empty() ? "none" : "not unique");
  if (x.is_homogeneous()) {
    Json h = Json::array();
    for (const auto& f : homogeneous_factorizations(x, r.cap)) h.push_back(factorization_json(f));
    j["homogeneous_factorizations"] = h;
  }
  if (fs.size() != 1) {
    UfsrVerdict v;
    v.status = UfsrStatus::NotUfsr;
    v.witness = UfsrWitness{x, {fs.begin(), fs.begin() + std::min<std::ptrdiff_t>(2, std::ssize(fs))}};
    const auto w = verify_witness(v);
    j["verification"] = {{"ok", w.ok}, {"transcript", w.transcript}};
  }
  return {j, {}, kOk};
}

Report ufsr(const AlgebraPtr& alg, const Request& r) {
  Json j;
  if (alg->field().is_finite()) {
    j["full"] = verdict_json(ufsr_check(alg, r.cap));
    j["homogeneous"] = verdict_json(homogeneous_ufsr_check(alg, r.cap));
    j["even"] = verdict_json(even_ufsr_check(alg, r.cap));
  } else {
    j["full"] = verdict_json(structural_ufsr_check(alg));
  }
  std::string text = "status: " + j["full"]["status"].get<std::string>() + "\n" + render_text(j);
  return {j, text, kOk};
}

Report ideals(const AlgebraPtr& alg, const Request& r) {
  Json j;
  const Ideal jr = canonical_superideal(alg);
  j["canonical_superideal"] = ideal_json(jr);
  j["nilradical"] = ideal_json(nilradical(alg));
  j["jacobson_radical"] = ideal_json(jacobson_radical(alg));
  j["canonical_superideal_squared"] = ideal_json(ideal_power(jr, 2));
  if (r.element) j["principal"] = ideal_json(Ideal::from_generators(alg, {parse_element(alg, *r.element)}));
  return {j, {}, kOk};
}

Json ksdim_json(const AlgebraPtr& alg) {
  const auto k = ksdim(alg);
  const auto c = cotangent_sdim(alg);
  const auto p = artinian_profile(alg);
  Json j;
  j["even"] = k.even;
  j["odd"] = k.odd;
  j["cotangent"] = {{"even", c.sdim.even},
                    {"odd", c.sdim.odd},
                    {"maximal_ideal", dims_json(c.maximal_ideal_dims)},
                    {"m_squared", dims_json(c.m_squared_dims)}};
  j["regular"] = k.even == c.sdim.even && k.odd == c.sdim.odd;
  Json prof;
  prof["artinian"] = p.artinian;
  prof["noetherian"] = p.noetherian;
  prof["ksdim"] = {{"even", p.ksdim.even}, {"odd", p.ksdim.odd}};
  prof["maximal_power_vanishing"] = p.maximal_power_vanishing ? Json(*p.maximal_power_vanishing) : Json(nullptr);
  prof["all_primes_maximal"] = p.all_primes_maximal;
  j["artinian_profile"] = prof;
  return j;
}

Report ksdim_cmd(const AlgebraPtr& alg, const Request&) { return {ksdim_json(alg), {}, kOk}; }

Report regular(const AlgebraPtr& alg, const Request& r) {
  const auto k = ksdim(alg);
  const auto c = cotangent_sdim(alg);
  Json j;
  j["regular_superring"] = is_regular_superring(alg);
  j["ksdim"] = std::to_string(k.even) + "|" + std::to_string(k.odd);
  j["sdim"] = std::to_string(c.sdim.even) + "|" + std::to_string(c.sdim.odd);
  if (r.element) {
    const Element x = parse_element(alg, *r.element);
    j["element"] = {{"element", format_element(x)}, {"regular", is_regular(x)}};
  }
  return {j, {}, kOk};
}

using Handler = std::function<Report(const AlgebraPtr&, const Request&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h = {
      {"info", info},       {"elements", elements}, {"units", units},   {"irreducibles", irreducibles},
      {"factor", factor},   {"ufsr", ufsr},         {"ideals", ideals}, {"ksdim", ksdim_cmd},
      {"regular", regular},
  };
  return h;
}

Report dispatch(const Request& r) {
  if (r.command == "census") return census_command(r);
  if (r.command == "verify-paper") return verify_paper_command(r);
  auto it = handlers().find(r.command);
  if (it == handlers().end()) throw SpecError("unknown command '" + r.command + "'");
  if (r.spec_path.empty()) throw SpecError("this command needs --spec");
  if (r.command == "factor" && !r.element) throw ParseError("factor needs --element", 0);
  return it->second(load_algebra(r.spec_path), r);
}

std::string caret_line(const Request& r, const ParseError& e) {
  if (!r.element) return {};
  return "  " + *r.element + "\n  " + std::string(std::min(e.position(), r.element->size()), ' ') + "^\n";
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"info",   "elements", "units",   "irreducibles",
                                                 "factor", "ufsr",     "ideals",  "ksdim",
                                                 "regular", "verify-paper", "census"};
  return names;
}

Outcome run(const Request& request) {
  Outcome o;
  try {
    const Report rep = dispatch(request);
    o.exit_code = rep.exit_code;
    if (request.format == Format::Json) {
      o.out = rep.json.dump(2) + "\n";
    } else {
      o.out = rep.text.empty() ? render_text(rep.json) : rep.text;
    }
  } catch (const ParseError& e) {
    o.exit_code = kParseError;
    o.err = std::string("parse error: ") + e.what() + "\n" + caret_line(request, e);
  } catch (const SpecError& e) {
    o.exit_code = kParseError;
    o.err = std::string("spec error: ") + e.what() + "\n";
  } catch (const DomainError& e) {
    o.exit_code = kDomainError;
    o.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    o.exit_code = kDomainError;
    o.err = std::string("internal error: ") + e.what() + "\n";
  }
  return o;
}

}  // namespace ufsr::app
