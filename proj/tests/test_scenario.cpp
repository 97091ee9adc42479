#include "doctest.h"

#include "liepencil/scenario.hpp"

using namespace liepencil;

namespace {

std::string scn(const std::string& name) {
  return std::string(LIEPENCIL_SCENARIO_DIR) + "/" + name + ".scn";
}

const char* kBundled[] = {"sl2_inner_involution", "sl3_principal", "sl3_outer_order4",
                          "sl2sl2_swap", "sl4_principal", "sl3_chain_n2"};

}  // namespace

TEST_CASE("bundled scenarios parse and reference only catalog checks") {
  for (const char* name : kBundled) {
    auto s = load_scenario(scn(name));
    CHECK(s.format == 1);
    CHECK(s.name == name);
    CHECK(!s.checks.empty());
    CHECK(s.seed == 42);
    CHECK(s.samples == 20);
    CHECK(s.box == 10);
    for (const auto& req : s.checks) {
      bool known = false;
      for (const auto& info : check_catalog()) known = known || info.name == req.name;
      CHECK(known);
    }
  }
}

TEST_CASE("catalog names required by the harness contract") {
  auto has = [](const std::string& n) {
    for (const auto& info : check_catalog())
      if (info.name == n) return true;
    return false;
  };
  CHECK(has("ind_infty_formula"));
  CHECK(has("eq4_tilde_index"));
  CHECK(has("degj_check"));
  CHECK(has("pencil_identity"));
  CHECK(has("stabilizer_dim_gamma"));
}

TEST_CASE("parse-stage rejections") {
  auto base = [](const std::string& algebra, const std::string& extra = "") {
    return "{\"format\": 1, \"algebra\": " + algebra +
           ", \"checks\": [\"compatibility\"]" + extra + "}";
  };
  // Corrupted labels: gcd 2.
  CHECK_THROWS_WITH_AS(
      parse_scenario(base(R"({"kind":"kac_inner","series":"A","rank":1,"labels":[2,2]})")),
      doctest::Contains("gcd"), std::runtime_error);
  // All-zero labels.
  CHECK_THROWS_AS(
      parse_scenario(base(R"({"kind":"kac_inner","series":"A","rank":1,"labels":[0,0]})")),
      std::runtime_error);
  // Wrong label count.
  CHECK_THROWS_AS(
      parse_scenario(base(R"({"kind":"kac_inner","series":"A","rank":2,"labels":[1,1]})")),
      std::runtime_error);
  // Unsupported format version.
  CHECK_THROWS_WITH_AS(
      parse_scenario(
          R"({"format": 2, "algebra": {"kind":"kac_inner","series":"A","rank":1,"labels":[1,1]},
              "checks": ["compatibility"]})"),
      doctest::Contains("format"), std::runtime_error);
  // Unknown check name.
  CHECK_THROWS_WITH_AS(
      parse_scenario(
          R"({"format": 1, "algebra": {"kind":"kac_inner","series":"A","rank":1,"labels":[1,1]},
              "checks": ["frobnicate"]})"),
      doctest::Contains("unknown check"), std::runtime_error);
  // Empty check list.
  CHECK_THROWS_AS(
      parse_scenario(
          R"({"format": 1, "algebra": {"kind":"kac_inner","series":"A","rank":1,"labels":[1,1]},
              "checks": []})"),
      std::runtime_error);
  // Nested cyclic specs.
  CHECK_THROWS_AS(parse_scenario(base(
                      R"({"kind":"cyclic","copies":2,"inner":
                          {"kind":"cyclic","copies":2,
                           "inner":{"kind":"identity","series":"A","rank":1}}})")),
                  std::runtime_error);
  // Bad mode.
  CHECK_THROWS_AS(
      parse_scenario(base(R"({"kind":"kac_inner","series":"A","rank":1,"labels":[1,1]})",
                          ", \"mode\": \"psychic\"")),
      std::runtime_error);
}

TEST_CASE("run_scenario: sl2 involution suite passes and reports deterministically") {
  auto s = load_scenario(scn("sl2_inner_involution"));
  Report r1 = run_scenario(s);
  CHECK(r1.all_pass());
  CHECK(r1.scenario == "sl2_inner_involution");
  CHECK(r1.format == 1);
  CHECK(r1.checks.size() == s.checks.size());
  for (size_t i = 0; i < r1.checks.size(); ++i) {
    CHECK(r1.checks[i].name == s.checks[i].name);  // report order = check order
    CHECK(!r1.checks[i].claim.empty());
    CHECK(!r1.checks[i].computed.empty());
  }
  // Byte-identical reports for the same scenario + seed.
  Report r2 = run_scenario(s);
  CHECK(report_to_json(r1) == report_to_json(r2));
  auto text = report_to_json(r1);
  CHECK(text.find("\"format\": 1") != std::string::npos);
  CHECK(text.find("\"all_pass\": true") != std::string::npos);

  // A different seed still passes here but may change sampled artifacts;
  // the report must reflect the seed it ran with.
  Scenario s2 = s;
  s2.seed = 7;
  Report r3 = run_scenario(s2);
  CHECK(r3.seed == 7);
}

TEST_CASE("model classifies inner vs outer and rejects disagreements by construction") {
  ScenarioModel inner_model(load_scenario(scn("sl3_principal")));
  CHECK(inner_model.inner());
  CHECK(inner_model.rank_g() == 2);
  CHECK(inner_model.rank_g0() == 2);

  ScenarioModel outer_model(load_scenario(scn("sl3_outer_order4")));
  CHECK(!outer_model.inner());
  CHECK(outer_model.rank_g() == 2);
  CHECK(outer_model.rank_g0() == 1);
  CHECK(outer_model.grading().m == 4);

  ScenarioModel swap_model(load_scenario(scn("sl2sl2_swap")));
  CHECK(!swap_model.inner());
  CHECK(swap_model.rank_g() == 2);
  CHECK(swap_model.rank_g0() == 1);
}

TEST_CASE("unknown check at run time") {
  ScenarioModel m(load_scenario(scn("sl2_inner_involution")));
  CHECK_THROWS_AS(run_check(m, {"frobnicate", {}}), std::runtime_error);
}

TEST_CASE("a falsified expectation fails cleanly") {
  auto s = load_scenario(scn("sl2_inner_involution"));
  Scenario bad = s;
  bad.checks = {{"ind_infty_formula", {{"expect", 99}}}};
  Report r = run_scenario(bad);
  CHECK(!r.all_pass());
  CHECK(report_to_json(r).find("\"all_pass\": false") != std::string::npos);
}
