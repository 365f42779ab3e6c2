#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "support/fixtures.hpp"
#include "ufsr/error.hpp"
#include "ufsr/spec_io.hpp"

using namespace ufsr;
using namespace ufsr::test;

TEST_CASE("shipped specs load") {
  for (const auto& stem : shipped_stems()) {
    CAPTURE(stem);
    CHECK_NOTHROW(shipped(stem));
  }
  const AlgebraSpec s = load_spec_file(std::string(UFSR_SPECS_DIR) + "/e12_e13_f3.json");
  CHECK(s.field == Domain::prime_field(3));
  CHECK(s.odd_generators == std::vector<std::string>{"e1", "e2", "e3"});
  CHECK(s.relations == std::vector<std::string>{"e1*e2 - e1*e3"});
}

TEST_CASE("relations are optional") {
  const AlgebraSpec s = parse_spec_json(R"({"field": {"kind": "Q"}, "odd_generators": ["t1"]})");
  CHECK(s.field == Domain::rationals());
  CHECK(s.relations.empty());
}

TEST_CASE("round trip through JSON") {
  for (const auto& stem : shipped_stems()) {
    const AlgebraSpec s = shipped(stem)->spec();
    const AlgebraSpec back = parse_spec_json(spec_to_json(s));
    CHECK(back.field == s.field);
    CHECK(back.odd_generators == s.odd_generators);
    CHECK(back.relations == s.relations);
  }
}

TEST_CASE("malformed specs") {
  const char* bad[] = {
      "",
      "[]",
      "{",
      R"({"odd_generators": ["t1"]})",
      R"({"field": {"kind": "Q"}})",
      R"({"field": "Q", "odd_generators": ["t1"]})",
      R"({"field": {"kind": "R"}, "odd_generators": ["t1"]})",
      R"({"field": {"kind": "Fp"}, "odd_generators": ["t1"]})",
      R"({"field": {"kind": "Fp", "p": 4}, "odd_generators": ["t1"]})",
      R"({"field": {"kind": "Fp", "p": -3}, "odd_generators": ["t1"]})",
      R"({"field": {"kind": "Q"}, "odd_generators": "t1"})",
      R"({"field": {"kind": "Q"}, "odd_generators": [1]})",
      R"({"field": {"kind": "Q"}, "odd_generators": ["t1"], "relations": [3]})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_spec_json(text), SpecError);
  }
  CHECK_THROWS_AS(load_spec_file("/nonexistent/spec.json"), SpecError);
}

TEST_CASE("semantic errors surface at build time") {
  auto build = [](const char* text) { return build_algebra(parse_spec_json(text)); };
  CHECK_THROWS_AS(build(R"({"field": {"kind": "Q"}, "odd_generators": []})"), SpecError);
  CHECK_THROWS_AS(build(R"({"field": {"kind": "Q"}, "odd_generators": ["t1", "t1"]})"), SpecError);
  CHECK_THROWS_AS(build(R"({"field": {"kind": "Q"}, "odd_generators": ["t1", "t2"], "relations": ["1 + t1*t2"]})"),
                  SpecError);
  CHECK_THROWS_AS(build(R"({"field": {"kind": "Q"}, "odd_generators": ["t1"], "relations": ["t2"]})"), SpecError);
}

TEST_CASE("loading from disk") {
  const auto dir = std::filesystem::temp_directory_path() / "ufsr_spec_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "a.json";
  {
    std::ofstream out(path);
    out << R"({"field": {"kind": "Fp", "p": 5}, "odd_generators": ["a", "b"], "relations": ["a*b"]})";
  }
  const auto alg = build_algebra(load_spec_file(path));
  CHECK(alg->field() == Domain::prime_field(5));
  CHECK(alg->graded_dims() == GradedDims{1, 2});
  std::filesystem::remove_all(dir);
}
