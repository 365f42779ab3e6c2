#include <algorithm>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "report.hpp"
#include "ufsr/dimension.hpp"
#include "ufsr/error.hpp"
#include "ufsr/exhaustive.hpp"
#include "ufsr/spec_io.hpp"
#include "ufsr/superpoly.hpp"
#include "ufsr_app/builtin_specs.hpp"
#include "ufsr_app/census.hpp"

namespace ufsr::app {

namespace {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

class Suite {
 public:
  explicit Suite(std::string specs_dir) : dir_(std::move(specs_dir)) {}

  AlgebraPtr algebra(const std::string& stem) {
    if (dir_.empty()) {
      auto it = builtin_specs().find(stem);
      if (it == builtin_specs().end()) throw SpecError("no built-in spec '" + stem + "'");
      return build_algebra(parse_spec_json(it->second));
    }
    return build_algebra(load_spec_file(std::filesystem::path(dir_) / (stem + ".json")));
  }

  /// body returns the detail line and sets ok.
  void run(const std::string& name, const std::function<std::string(bool&)>& body) {
    Check c{name, false, {}};
    try {
      c.detail = body(c.pass);
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = std::string("exception: ") + e.what();
    }
    checks_.push_back(std::move(c));
  }

  const std::vector<Check>& checks() const { return checks_; }

  const std::vector<CensusRow>& census(std::uint64_t seed) {
    if (!census_) {
      CensusOptions o;
      o.seed = seed;
      census_ = run_census(o);
    }
    return *census_;
  }

 private:
  std::string dir_;
  std::optional<std::vector<CensusRow>> census_;
  std::vector<Check> checks_;
};

Element el(const AlgebraPtr& a, const std::string& s) { return parse_element(a, s); }

std::set<std::string> names(const std::vector<Element>& xs) {
  std::set<std::string> out;
  for (const auto& x : xs) out.insert(format_element(x));
  return out;
}

std::vector<Element> all_elements(const AlgebraPtr& a) {
  std::vector<Element> out;
  for (const Element& x : enumerate_elements(a)) out.push_back(x);
  return out;
}

Element random_unit(const AlgebraPtr& a, std::mt19937_64& rng) {
  Vector v;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    long long c = 0;
    if (a->field().is_finite()) {
      c = static_cast<long long>(rng() % a->field().characteristic());
      if (i == 0 && c == 0) c = 1;
    } else {
      c = static_cast<long long>(rng() % 19) - 9;
      if (i == 0 && c == 0) c = 7;
    }
    v.push_back(Scalar::from_int(a->field(), c));
  }
  return Element(a, v);
}

std::size_t coord(const AlgebraPtr& a, const std::string& monomial) {
  const Element m = el(a, monomial);
  for (std::size_t i = 0; i < a->dim(); ++i) {
    if (!m.coeff(i).is_zero()) return i;
  }
  throw DomainError("monomial " + monomial + " reduces to zero");
}

bool same_status(const UfsrVerdict& v, UfsrStatus s) { return v.status == s; }

void f2_checks(Suite& s) {
  const auto r = s.algebra("f2_t1t2");
  s.run("f2-t1t2-element-count", [&](bool& ok) {
    ok = enumerate_elements(r).size() == 16;
    return std::to_string(enumerate_elements(r).size()) + " elements";
  });
  s.run("f2-t1t2-units", [&](bool& ok) {
    std::vector<Element> us;
    for (const auto& x : all_elements(r)) {
      if (is_unit(x)) us.push_back(x);
    }
    const std::vector<std::string> listed = {"1",          "1 + t1*t2",      "1 + t1",          "1 + t2",
                                             "1 + t1 + t2", "1 + t1 + t1*t2", "1 + t2 + t1*t2", "1 + t1 + t2 + t1*t2"};
    std::vector<Element> expected;
    for (const auto& t : listed) expected.push_back(el(r, t));
    ok = names(us) == names(expected) && us.size() == 8;
    return std::to_string(us.size()) + " units";
  });
  s.run("f2-t1t2-irreducibles", [&](bool& ok) {
    std::size_t count = 0;
    ok = true;
    const Element t12 = el(r, "t1*t2");
    for (const auto& x : all_elements(r)) {
      if (x.is_zero() || is_unit(x) || x == t12) continue;
      ok = ok && is_irreducible(x);
      ++count;
    }
    ok = ok && count == 6 && !is_irreducible(t12);
    return std::to_string(count) + " non-units other than 0, t1*t2 irreducible; t1*t2 reducible";
  });
  s.run("f2-t1t2-two-factorizations", [&](bool& ok) {
    const Element t12 = el(r, "t1*t2");
    const Factorization a{t12, {el(r, "t1"), el(r, "t2")}};
    const Factorization b{t12, {el(r, "t1"), el(r, "t1 + t2")}};
    const auto fs = factorizations(t12);
    bool has_a = false, has_b = false;
    for (const auto& f : fs) {
      has_a = has_a || equivalent(f, a);
      has_b = has_b || equivalent(f, b);
    }
    ok = product(a.factors) == t12 && product(b.factors) == t12 && !equivalent(a, b) && has_a && has_b;
    for (const auto& f : {a, b}) {
      for (const auto& x : f.factors) ok = ok && is_normal(x) && is_irreducible(x);
    }
    return "t1*t2 = t1*t2 = t1*(t1 + t2), " + std::to_string(fs.size()) + " classes in total";
  });
  s.run("f2-t1t2-not-ufsr", [&](bool& ok) {
    const auto v = ufsr_check(r);
    ok = same_status(v, UfsrStatus::NotUfsr) && verify_witness(v).ok;
    return to_string(v.status) + (v.witness ? ", witness " + format_element(v.witness->subject) : std::string());
  });
  s.run("f2-t1t2-even-part-ufr", [&](bool& ok) {
    const auto v = even_ufsr_check(r);
    ok = same_status(v, UfsrStatus::Ufsr);
    return to_string(v.status);
  });
}

void dual_checks(Suite& s, std::mt19937_64& rng) {
  for (const std::string stem : {"dual_q", "dual_f3", "zero_products_f3", "zero_products_q5"}) {
    const auto r = s.algebra(stem);
    s.run(stem + "-ufsr", [&](bool& ok) {
      const auto st = structural_ufsr_check(r);
      ok = same_status(st, UfsrStatus::Ufsr);
      std::string d = "structural " + to_string(st.status);
      if (r->field().is_finite()) {
        const auto ex = ufsr_check(r);
        ok = ok && same_status(ex, UfsrStatus::Ufsr);
        d += ", exhaustive " + to_string(ex.status);
      }
      return d;
    });
    s.run(stem + "-inverse-formula", [&](bool& ok) {
      ok = true;
      for (int k = 0; k < 100; ++k) {
        const Element a = random_unit(r, rng);
        const Scalar inv0 = a.constant_term().inverse();
        Vector g(r->dim(), Scalar::zero(r->field()));
        g[0] = inv0;
        for (std::size_t i = 1; i < r->dim(); ++i) g[i] = -(a.coeff(i) * inv0 * inv0);
        ok = ok && Element(r, g) == invert(a);
      }
      return "100 random units";
    });
  }
}

void e12_e13_checks(Suite& s, std::mt19937_64& rng) {
  for (const std::string stem : {"e12_e13_q", "e12_e13_f3"}) {
    const auto r = s.algebra(stem);
    s.run(stem + "-superfield", [&](bool& ok) {
      ok = is_superfield(r);
      return ok ? "superfield" : "not a superfield";
    });
    s.run(stem + "-superideal-dims", [&](bool& ok) {
      const auto d = canonical_superideal(r).dims();
      ok = d.even == 2 && d.odd == 3;
      return std::to_string(d.even) + "|" + std::to_string(d.odd);
    });
    s.run(stem + "-relation", [&](bool& ok) {
      ok = el(r, "e1*e2") == el(r, "e1*e3") && !el(r, "e1*e2").is_zero();
      return "e1*e2 = e1*e3 != 0";
    });
    s.run(stem + "-inverse-formula", [&](bool& ok) {
      const std::size_t i1 = coord(r, "e1"), i2 = coord(r, "e2"), i3 = coord(r, "e3");
      const std::size_t i12 = coord(r, "e1*e2"), i23 = coord(r, "e2*e3");
      const Scalar two = Scalar::from_int(r->field(), 2);
      std::size_t agree = 0;
      for (int k = 0; k < 100; ++k) {
        const Element a = random_unit(r, rng);
        const Scalar a0 = a.constant_term().inverse();
        Vector g(r->dim(), Scalar::zero(r->field()));
        g[0] = a0;
        for (auto i : {i1, i2, i3}) g[i] = -(a0 * a0 * a.coeff(i));
        g[i12] = two * a0 * a0 * a0 * a.coeff(i1) * a.coeff(i2) - a0 * a0 * a.coeff(i12);
        g[i23] = two * a0 * a0 * a0 * a.coeff(i2) * a.coeff(i3) - a0 * a0 * a.coeff(i23);
        agree += Element(r, g) == invert(a);
      }
      ok = agree == 100;
      return std::to_string(agree) + "/100 random units match the closed form";
    });
  }
  const auto r = s.algebra("e12_e13_f3");
  s.run("e12_e13_f3-not-ufsr", [&](bool& ok) {
    const auto v = ufsr_check(r);
    ok = same_status(v, UfsrStatus::NotUfsr) && verify_witness(v).ok;
    return to_string(v.status) + (v.witness ? ", witness " + format_element(v.witness->subject) : std::string());
  });
}

void zeps_checks(Suite& s) {
  s.run("dual-integers-p-squared", [&](bool& ok) {
    ok = true;
    for (std::uint64_t p : {2, 3, 5, 7}) {
      const auto rep = zint_demo_p_squared(p);
      ok = ok && rep.products_ok && rep.factors_irreducible && rep.factors_regular;
      ok = ok && std::none_of(rep.cross_associate.begin(), rep.cross_associate.end(), [](bool b) { return b; });
    }
    return "p in {2, 3, 5, 7}";
  });
  s.run("dual-integers-units", [&](bool& ok) {
    const auto ctx = zeps_context();
    ok = true;
    for (int a = -6; a <= 6; ++a) {
      for (int b = -6; b <= 6; ++b) ok = ok && spoly_is_unit(zeps(ctx, a, b)) == (a == 1 || a == -1);
    }
    return "units are exactly +-1 + b*eps on |a|, |b| <= 6";
  });
}

void census_check(Suite& s, const Request& req) {
  s.run("census-ufsr-superdomains", [&](bool& ok) {
    const auto& rows = s.census(req.seed);
    std::size_t checked = 0, bad = 0;
    for (const auto& row : rows) {
      checked += row.theorems_apply;
      bad += !row.failures.empty();
    }
    ok = bad == 0 && checked > 0;
    return std::to_string(rows.size()) + " algebras, " + std::to_string(checked) + " UFSR superdomains, " +
           std::to_string(bad) + " counterexamples";
  });
}

void regularity_checks(Suite& s) {
  const auto q = s.algebra("q_t1t2");
  s.run("q_t1t2-regular", [&](bool& ok) {
    const auto k = ksdim(q);
    const auto c = cotangent_sdim(q);
    ok = is_regular_superring(q) && k == KsdimPair{0, 2} && c.sdim == GradedDims{0, 2};
    return "Ksdim " + std::to_string(k.even) + "|" + std::to_string(k.odd) + ", sdim " + std::to_string(c.sdim.even) +
           "|" + std::to_string(c.sdim.odd);
  });
  s.run("q_t1t2-not-ufsr", [&](bool& ok) {
    const auto v = structural_ufsr_check(q);
    ok = same_status(v, UfsrStatus::NotUfsr) && verify_witness(v).ok && v.witness &&
         v.witness->subject == el(q, "t1*t2");
    const Factorization a{el(q, "t1*t2"), {el(q, "t1"), el(q, "t2")}};
    const Factorization b{el(q, "t1*t2"), {el(q, "t1"), el(q, "t1 + t2")}};
    ok = ok && product(b.factors) == b.subject && are_associates_tri(el(q, "t2"), el(q, "t1 + t2")) == Tri::False &&
         are_associates_tri(el(q, "t1"), el(q, "t1 + t2")) == Tri::False;
    return to_string(v.status) + ", t1 + t2 not associate to t1 or t2";
  });
  const auto e = s.algebra("e12_e13_q");
  s.run("e12_e13_q-not-regular", [&](bool& ok) {
    const auto k = ksdim(e);
    const auto c = cotangent_sdim(e);
    ok = !is_regular_superring(e) && k == KsdimPair{0, 2} && c.sdim == GradedDims{0, 3};
    return "Ksdim " + std::to_string(k.even) + "|" + std::to_string(k.odd) + ", sdim " + std::to_string(c.sdim.even) +
           "|" + std::to_string(c.sdim.odd);
  });
}

void property_checks(Suite& s, const Request& req) {
  // Finite UFSRs among the shipped algebras and the census.
  std::vector<AlgebraPtr> ufsrs;
  for (const std::string stem : {"dual_f3", "zero_products_f3"}) ufsrs.push_back(s.algebra(stem));
  for (const auto& row : s.census(req.seed)) {
    if (row.ufsr == UfsrStatus::Ufsr) ufsrs.push_back(build_algebra(row.spec));
  }
  s.run("normal-irreducibles-prime", [&](bool& ok) {
    ok = true;
    std::string first;
    for (const auto& r : ufsrs) {
      ExhaustiveFactorizer engine(r);
      for (auto x : engine.normal_irreducibles()) {
        const Element p = engine.element(x);
        if (!is_prime_element(p)) {
          ok = false;
          if (first.empty()) first = format_element(p) + " over " + r->field().name() + " is not prime";
        }
      }
    }
    return ok ? std::string("every normal irreducible is prime") : first;
  });
  s.run("normal-irreducibles-zerodivisors", [&](bool& ok) {
    ok = true;
    bool exists = false;
    for (const auto& r : ufsrs) {
      ExhaustiveFactorizer engine(r);
      for (auto x : engine.normal_irreducibles()) {
        const bool zd = !is_regular(engine.element(x));
        ok = ok && zd;
        exists = exists || zd;
      }
    }
    ok = ok && exists;
    return "every normal irreducible is a zerodivisor";
  });
}

void axiom_checks(Suite& s, std::mt19937_64& rng) {
  s.run("algebra-axioms", [&](bool& ok) {
    ok = true;
    std::size_t cases = 0;
    for (const auto& [stem, text] : builtin_specs()) {
      const auto r = s.algebra(stem);
      auto rand_el = [&]() {
        Vector v;
        for (std::size_t i = 0; i < r->dim(); ++i) {
          const auto c = r->field().is_finite() ? static_cast<long long>(rng() % r->field().characteristic())
                                                : static_cast<long long>(rng() % 7) - 3;
          v.push_back(Scalar::from_int(r->field(), c));
        }
        return Element(r, v);
      };
      for (int k = 0; k < 100; ++k, ++cases) {
        const Element a = rand_el(), b = rand_el(), c = rand_el();
        ok = ok && (a * b) * c == a * (b * c);
        const auto [a0, a1] = parity_decompose(a);
        const auto [b0, b1] = parity_decompose(b);
        ok = ok && a0 * b0 == b0 * a0 && a0 * b1 == b1 * a0 && a1 * b1 == -(b1 * a1);
        ok = ok && (a1 * a1).is_zero();
        ok = ok && (a1 * b1).odd_part().is_zero() && (a0 * b1).even_part().is_zero();
      }
    }
    return std::to_string(cases) + " random cases";
  });
}

void weaker_definition_checks(Suite& s) {
  s.run("homogeneous-and-full-agree", [&](bool& ok) {
    ok = true;
    std::string d;
    for (const std::string stem : {"f2_t1t2", "dual_f3", "zero_products_f3", "e12_e13_f3"}) {
      const auto r = s.algebra(stem);
      const auto full = ufsr_check(r).status;
      const auto hom = homogeneous_ufsr_check(r).status;
      ok = ok && full == hom;
      d += (d.empty() ? "" : ", ") + stem + " " + to_string(full);
    }
    return d;
  });
}

}  // namespace

Report verify_paper_command(const Request& req) {
  Suite s(req.specs_dir);
  std::mt19937_64 rng(req.seed);
  f2_checks(s);
  dual_checks(s, rng);
  e12_e13_checks(s, rng);
  zeps_checks(s);
  census_check(s, req);
  regularity_checks(s);
  property_checks(s, req);
  axiom_checks(s, rng);
  weaker_definition_checks(s);

  Json list = Json::array();
  std::ostringstream text;
  std::size_t failed = 0;
  for (const auto& c : s.checks()) {
    list.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    text << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
    failed += !c.pass;
  }
  text << s.checks().size() - failed << "/" << s.checks().size() << " checks passed\n";
  Json j;
  j["checks"] = list;
  j["passed"] = s.checks().size() - failed;
  j["failed"] = failed;
  return {j, text.str(), failed == 0 ? kOk : kCheckFailed};
}

}  // namespace ufsr::app
