#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "liepencil/poisson.hpp"
#include "liepencil/scenario.hpp"
#include "liepencil/serialize.hpp"

#include "json.hpp"

using namespace liepencil;

namespace {

struct CommonOpts {
  std::string scenario_path;
  bool has_seed = false, has_samples = false, has_box = false, has_mode = false;
  std::uint64_t seed = 42;
  int samples = 20;
  int box = 10;
  std::string mode = "symbolic";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("scenario", o.scenario_path, "Scenario file (JSON, format 1)")->required();
  cmd->add_option("--seed", o.seed, "Sampling seed")->each([&](const std::string&) {
    o.has_seed = true;
  });
  cmd->add_option("--samples", o.samples, "Sample count")->each([&](const std::string&) {
    o.has_samples = true;
  });
  cmd->add_option("--box", o.box, "Coordinate box [-box, box]")->each([&](const std::string&) {
    o.has_box = true;
  });
  cmd->add_option("--mode", o.mode, "Commutation mode: symbolic|sampled")
      ->check(CLI::IsMember({"symbolic", "sampled"}))
      ->each([&](const std::string&) { o.has_mode = true; });
}

Scenario load_with_overrides(const CommonOpts& o) {
  Scenario s = load_scenario(o.scenario_path);
  if (o.has_seed) s.seed = o.seed;
  if (o.has_samples) s.samples = o.samples;
  if (o.has_box) s.box = o.box;
  if (o.has_mode) s.mode = o.mode;
  return s;
}

std::string poly_list_json(const std::vector<Poly>& polys,
                           const std::vector<std::string>& names) {
  nlohmann::json out;
  out["format"] = 1;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : polys) arr.push_back(p.str(names));
  out["polynomials"] = std::move(arr);
  return out.dump(2) + "\n";
}

void emit(const std::string& text, const std::string& json_path) {
  if (json_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(json_path);
    out << text;
  }
}

int cmd_run(const CommonOpts& o, const std::string& json_path) {
  Scenario s = load_with_overrides(o);
  Report r = run_scenario(s);
  for (const auto& c : r.checks)
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name
              << (c.probabilistic ? "  [probabilistic]" : "") << "\n      claimed:  "
              << c.claimed << "\n      computed: " << c.computed
              << (c.detail.empty() ? "" : "\n      detail:   " + c.detail) << "\n";
  std::cout << (r.all_pass() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  if (!json_path.empty()) emit(report_to_json(r), json_path);
  return r.all_pass() ? 0 : 1;
}

int cmd_contract(const CommonOpts& o, const std::string& at, const std::string& json_path) {
  Scenario s = load_with_overrides(o);
  ScenarioModel model(s);
  LieAlgebra result;
  if (at == "0") {
    result = model.q_zero().algebra;
  } else if (at == "inf") {
    result = model.q_infty().algebra;
  } else if (at.rfind("t=", 0) == 0) {
    auto t = parse_cyc(at.substr(2), 1);
    if (!t) {
      std::cerr << "bad value for --at: " << at << "\n";
      return 2;
    }
    result = pencil_member(model.grading(), *t).algebra;
  } else {
    std::cerr << "--at takes 0, inf or t=<rational>\n";
    return 2;
  }
  emit(serialize_algebra(result), json_path);
  return 0;
}

int cmd_index(const CommonOpts& o, const std::string& which, const std::string& json_path) {
  Scenario s = load_with_overrides(o);
  ScenarioModel model(s);
  const LieAlgebra* a = nullptr;
  if (which == "g") a = &model.grading().algebra;
  else if (which == "zero") a = &model.q_zero().algebra;
  else if (which == "inf") a = &model.q_infty().algebra;
  else if (which == "tilde") a = &model.tilde().algebra;
  else {
    std::cerr << "--which takes g, zero, inf or tilde\n";
    return 2;
  }
  IndexReport rep = index_estimate(*a, s.samples, s.seed, s.box);
  nlohmann::json out;
  out["format"] = 1;
  out["which"] = which;
  out["dim"] = a->dim;
  out["samples"] = rep.samples;
  out["seed"] = s.seed;
  out["box"] = s.box;
  out["generic_rank_observed"] = rep.generic_rank_observed;
  out["index_upper_bound"] = rep.index_upper_bound;
  out["note"] = "probabilistic equality, certified upper bound on the index";
  out["failure_bound"] = rep.failure_bound.get_str();
  nlohmann::json wp = nlohmann::json::array();
  for (const auto& c : rep.witness_point) wp.push_back(c.str());
  out["witness_point"] = std::move(wp);
  emit(out.dump(2) + "\n", json_path);
  return 0;
}

int cmd_invariants(const CommonOpts& o, const std::string& json_path) {
  Scenario s = load_with_overrides(o);
  ScenarioModel model(s);
  std::vector<Poly> polys;
  for (const auto& gen : model.invariants().generators) polys.push_back(gen.poly);
  emit(poly_list_json(polys, model.grading().algebra.labels), json_path);
  return 0;
}

int cmd_decompose(const CommonOpts& o, const std::string& weights,
                  const std::string& json_path) {
  Scenario s = load_with_overrides(o);
  ScenarioModel model(s);
  nlohmann::json out;
  out["format"] = 1;
  out["weights"] = weights;
  nlohmann::json gens = nlohmann::json::array();
  if (weights == "theta") {
    const auto& names = model.grading().algebra.labels;
    for (const auto& gen : model.invariants().generators) {
      nlohmann::json comps = nlohmann::json::object();
      for (const auto& [w, comp] : weight_components(gen.poly, model.grading().degree))
        comps[std::to_string(w)] = comp.str(names);
      gens.push_back(std::move(comps));
    }
  } else if (weights == "tilde") {
    const auto& sd = model.tilde();
    const auto& names = sd.algebra.labels;
    for (size_t j = 0; j < model.tilde_report().generators.size(); ++j) {
      nlohmann::json comps = nlohmann::json::object();
      for (const auto& [w, comp] :
           weight_components(model.tilde_report().generators[j], sd.tilde_phi_weight))
        comps[std::to_string(w)] = comp.str(names);
      gens.push_back(std::move(comps));
    }
  } else {
    std::cerr << "--weights takes theta or tilde\n";
    return 2;
  }
  out["generators"] = std::move(gens);
  emit(out.dump(2) + "\n", json_path);
  return 0;
}

int cmd_ggs(const CommonOpts& o, const std::string& json_path) {
  Scenario s = load_with_overrides(o);
  ScenarioModel model(s);
  auto rep = ggs_check(model.invariants(), model.grading().degree, s.samples, s.seed, s.box);
  nlohmann::json out;
  out["format"] = 1;
  out["sum_top_degrees"] = rep.sum_top_degrees;
  out["d_phi"] = rep.d;
  out["is_ggs"] = rep.is_ggs;
  out["independence_of_tops"] = rep.independence_of_tops;
  emit(out.dump(2) + "\n", json_path);
  return 0;
}

int cmd_zgen(const CommonOpts& o, const std::string& which, const std::string& json_path) {
  Scenario s = load_with_overrides(o);
  ScenarioModel model(s);
  if (which == "zx") {
    emit(poly_list_json(zx_generators(model.invariants(), model.grading()),
                        model.grading().algebra.labels),
         json_path);
  } else if (which == "zinf") {
    emit(poly_list_json(zinfty_generators(model.invariants(), model.grading(), model.inner()),
                        model.grading().algebra.labels),
         json_path);
  } else if (which == "zinf-g0") {
    emit(poly_list_json(zinfty_g0_generators(model.invariants(), model.grading(), model.f0()),
                        model.grading().algebra.labels),
         json_path);
  } else if (which == "tilde") {
    emit(poly_list_json(model.tilde_report().generators, model.tilde().algebra.labels),
         json_path);
  } else {
    std::cerr << "--which takes zx, zinf, zinf-g0 or tilde\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"liepencil: exact verification of graded contractions of classical Lie algebras"};
  app.require_subcommand(1);

  CommonOpts run_o, con_o, idx_o, inv_o, dec_o, ggs_o, zg_o;
  std::string run_json, con_json, idx_json, inv_json, dec_json, ggs_json, zg_json;
  std::string con_at = "0", idx_which = "g", dec_weights = "theta", zg_which = "zx";

  auto* run = app.add_subcommand("run", "Run every check in a scenario");
  add_common(run, run_o);
  run->add_option("--json", run_json, "Write the JSON report to this file");

  auto* list = app.add_subcommand("list-checks", "Print the check catalog");

  auto* con = app.add_subcommand("contract", "Emit a pencil member as serialized JSON");
  add_common(con, con_o);
  con->add_option("--at", con_at, "Pencil point: 0, inf or t=<rational>");
  con->add_option("--json", con_json, "Write to this file instead of stdout");

  auto* idx = app.add_subcommand("index", "Sampled index report with witness point");
  add_common(idx, idx_o);
  idx->add_option("--which", idx_which, "Algebra: g, zero, inf or tilde");
  idx->add_option("--json", idx_json, "Write to this file instead of stdout");

  auto* inv = app.add_subcommand("invariants", "Print the symmetric invariants");
  add_common(inv, inv_o);
  inv->add_option("--json", inv_json, "Write to this file instead of stdout");

  auto* dec = app.add_subcommand("decompose", "Bi-homogeneous components of the invariants");
  add_common(dec, dec_o);
  dec->add_option("--weights", dec_weights, "Weight system: theta or tilde");
  dec->add_option("--json", dec_json, "Write to this file instead of stdout");

  auto* ggs = app.add_subcommand("ggs-check", "Degree-sum and top-independence test");
  add_common(ggs, ggs_o);
  ggs->add_option("--json", ggs_json, "Write to this file instead of stdout");

  auto* zg = app.add_subcommand("z-generators", "Generators of the commutative subalgebras");
  add_common(zg, zg_o);
  zg->add_option("--which", zg_which, "Set: zx, zinf, zinf-g0 or tilde");
  zg->add_option("--json", zg_json, "Write to this file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_o, run_json);
    if (list->parsed()) {
      for (const auto& info : check_catalog())
        std::cout << info.name << (info.probabilistic ? "  [probabilistic]" : "") << "\n    "
                  << info.claim << "\n";
      return 0;
    }
    if (con->parsed()) return cmd_contract(con_o, con_at, con_json);
    if (idx->parsed()) return cmd_index(idx_o, idx_which, idx_json);
    if (inv->parsed()) return cmd_invariants(inv_o, inv_json);
    if (dec->parsed()) return cmd_decompose(dec_o, dec_weights, dec_json);
    if (ggs->parsed()) return cmd_ggs(ggs_o, ggs_json);
    if (zg->parsed()) return cmd_zgen(zg_o, zg_which, zg_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
