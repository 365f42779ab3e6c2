#include "ufsr_app/census.hpp"

#include <cstdio>
#include <random>
#include <sstream>

#include "report.hpp"
#include "ufsr/error.hpp"
#include "ufsr/exhaustive.hpp"
#include "ufsr/structure.hpp"

namespace ufsr::app {

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

std::string relation_text(const std::vector<std::uint64_t>& coeffs, std::size_t n) {
  std::string out;
  std::size_t k = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j, ++k) {
      if (coeffs[k] == 0) continue;
      if (!out.empty()) out += " + ";
      if (coeffs[k] != 1) out += std::to_string(coeffs[k]) + "*";
      out += "t" + std::to_string(i) + "*t" + std::to_string(j);
    }
  }
  return out;
}

}  // namespace

std::vector<AlgebraSpec> census_specs(const CensusOptions& o) {
  if (o.field != "F2" && o.field != "F3" && o.field != "mixed")
    throw Unsupported("census needs a finite field (F2, F3 or mixed), got '" + o.field + "'");
  if (o.max_gens < 1 || o.max_gens > 4) throw PreconditionError("census needs 1 <= max-gens <= 4");
  std::mt19937_64 rng(o.seed);
  std::vector<AlgebraSpec> out;
  out.reserve(o.samples);
  for (unsigned s = 0; s < o.samples; ++s) {
    std::uint64_t p = o.field == "F2" ? 2 : 3;
    if (o.field == "mixed") p = draw(rng, 2) == 0 ? 2 : 3;
    const std::size_t n = 1 + draw(rng, o.max_gens);
    AlgebraSpec spec;
    spec.field = Domain::prime_field(p);
    for (std::size_t i = 1; i <= n; ++i) spec.odd_generators.push_back("t" + std::to_string(i));
    const std::size_t pairs = n * (n - 1) / 2;
    const std::uint64_t count = draw(rng, 4);
    for (std::uint64_t r = 0; r < count && pairs > 0; ++r) {
      std::vector<std::uint64_t> coeffs(pairs, 0);
      bool nonzero = false;
      while (!nonzero) {
        for (auto& c : coeffs) {
          c = draw(rng, p);
          nonzero = nonzero || c != 0;
        }
      }
      spec.relations.push_back(relation_text(coeffs, n));
    }
    out.push_back(std::move(spec));
  }
  return out;
}

CensusRow classify(std::size_t index, const AlgebraSpec& spec, unsigned cap) {
  CensusRow row;
  row.index = index;
  row.spec = spec;
  const auto alg = build_algebra(spec);
  row.dims = alg->graded_dims();
  row.superdomain = is_superdomain(alg);
  row.superfield = is_superfield(alg);
  row.regular = is_regular_superring(alg);
  row.ksdim = ksdim(alg);
  const Ideal j = canonical_superideal(alg);
  row.nilpotency_index = nilpotency_index(j);
  try {
    row.ufsr = ufsr_check(alg, cap).status;
  } catch (const DomainError& e) {
    row.skipped_reason = e.what();
    return row;
  }
  row.theorems_apply = *row.ufsr == UfsrStatus::Ufsr && row.superdomain;
  if (!row.theorems_apply) return row;

  auto fail = [&](const std::string& what) { row.failures.push_back(what); };
  const auto ms = maximal_ideals(alg);
  if (ms.size() != 1 || !(ms.front() == j)) fail("not local with maximal ideal J_R");
  if (!row.superfield) fail("not a superfield");
  ExhaustiveFactorizer engine(alg, FactorScope::Full, cap);
  for (auto x : engine.normal_irreducibles()) {
    if (!is_nilpotent(engine.element(x))) {
      fail("normal irreducible " + format_element(engine.element(x)) + " is not nilpotent");
      break;
    }
  }
  const std::size_t n = spec.odd_generators.size();
  if (!row.nilpotency_index || *row.nilpotency_index > n + 1) fail("nilpotency index of J_R exceeds n + 1");
  if (row.ksdim.even != 0) fail("even Krull superdimension is not 0");
  if (row.dims.odd > 0 && row.ksdim.odd < 1) fail("odd Krull superdimension is 0");
  return row;
}

std::vector<CensusRow> run_census(const CensusOptions& o) {
  std::vector<CensusRow> rows;
  const auto specs = census_specs(o);
  for (std::size_t i = 0; i < specs.size(); ++i) rows.push_back(classify(i, specs[i], o.cap));
  return rows;
}

Report census_command(const Request& r) {
  CensusOptions o{r.seed, r.samples, r.max_gens, r.field, r.cap};
  const auto rows = run_census(o);
  Json list = Json::array();
  std::size_t ufsr = 0, not_ufsr = 0, skipped = 0, theorem_rows = 0, counterexamples = 0;
  std::ostringstream text;
  text << "idx  field  n  dim    ufsr     sfield  sdomain  regular  ksdim  nil  relations\n";
  for (const auto& row : rows) {
    Json j;
    j["index"] = row.index;
    j["field"] = row.spec.field.name();
    j["generators"] = row.spec.odd_generators.size();
    j["relations"] = row.spec.relations;
    j["dims"] = dims_json(row.dims);
    j["ufsr"] = row.ufsr ? Json(to_string(*row.ufsr)) : Json("skipped");
    if (!row.skipped_reason.empty()) j["skipped_reason"] = row.skipped_reason;
    j["superfield"] = row.superfield;
    j["superdomain"] = row.superdomain;
    j["regular"] = row.regular;
    j["ksdim"] = std::to_string(row.ksdim.even) + "|" + std::to_string(row.ksdim.odd);
    j["nilpotency_index"] = row.nilpotency_index ? Json(*row.nilpotency_index) : Json(nullptr);
    j["theorems_checked"] = row.theorems_apply;
    j["failures"] = row.failures;
    list.push_back(j);

    if (!row.ufsr) {
      ++skipped;
    } else if (*row.ufsr == UfsrStatus::Ufsr) {
      ++ufsr;
    } else {
      ++not_ufsr;
    }
    theorem_rows += row.theorems_apply;
    counterexamples += !row.failures.empty();

    std::string rels;
    for (const auto& rel : row.spec.relations) rels += (rels.empty() ? "" : "; ") + rel;
    char line[160];
    std::snprintf(line, sizeof line, "%-4zu %-6s %-2zu %-6s %-8s %-7s %-8s %-8s %-6s %-4s ", row.index,
                  row.spec.field.name().c_str(), row.spec.odd_generators.size(),
                  (std::to_string(row.dims.even) + "|" + std::to_string(row.dims.odd)).c_str(),
                  j["ufsr"].get<std::string>().c_str(), row.superfield ? "yes" : "no",
                  row.superdomain ? "yes" : "no", row.regular ? "yes" : "no", j["ksdim"].get<std::string>().c_str(),
                  row.nilpotency_index ? std::to_string(*row.nilpotency_index).c_str() : "-");
    text << line << (rels.empty() ? "-" : rels) << "\n";
    for (const auto& f : row.failures) text << "     COUNTEREXAMPLE: " << f << "\n";
  }
  Json j;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["max_gens"] = r.max_gens;
  j["field"] = r.field;
  j["rows"] = list;
  j["summary"] = {{"ufsr", ufsr},
                  {"not_ufsr", not_ufsr},
                  {"skipped", skipped},
                  {"ufsr_superdomains", theorem_rows},
                  {"counterexamples", counterexamples}};
  text << "ufsr " << ufsr << ", not ufsr " << not_ufsr << ", skipped " << skipped << ", UFSR superdomains checked "
       << theorem_rows << ", counterexamples " << counterexamples << "\n";
  return {j, text.str(), counterexamples == 0 ? kOk : kCheckFailed};
}

}  // namespace ufsr::app
