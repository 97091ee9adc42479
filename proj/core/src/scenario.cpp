#include "liepencil/scenario.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace liepencil {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("scenario parse: " + what);
}

Series parse_series_or_fail(const json& j, const std::string& where) {
  if (!j.is_string() || j.get<std::string>().size() != 1) fail(where + ": bad series");
  auto s = parse_series(j.get<std::string>()[0]);
  if (!s) fail(where + ": unknown series \"" + j.get<std::string>() + "\"");
  return *s;
}

Cyc parse_scalar_or_fail(const json& j, int order, const std::string& where) {
  if (j.is_number_integer()) return Cyc(j.get<long>());
  if (!j.is_string()) fail(where + ": scalars are integers or strings");
  auto c = parse_cyc(j.get<std::string>(), order);
  if (!c) fail(where + ": bad scalar \"" + j.get<std::string>() + "\"");
  return *c;
}

Mat parse_matrix(const json& j, int order, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where + ": expected a matrix (array of rows)");
  int n = static_cast<int>(j.size());
  Mat m(n, static_cast<int>(j[0].size()));
  for (int r = 0; r < n; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != m.cols())
      fail(where + ": ragged matrix");
    for (int c = 0; c < m.cols(); ++c) m(r, c) = parse_scalar_or_fail(j[r][c], order, where);
  }
  return m;
}

AlgebraSpec parse_algebra_spec(const json& j, bool nested) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    fail("algebra spec needs a \"kind\"");
  AlgebraSpec a;
  a.kind = j["kind"].get<std::string>();
  if (a.kind == "kac_inner") {
    a.series = parse_series_or_fail(j.at("series"), "kac_inner");
    a.rank = j.at("rank").get<int>();
    if (a.rank < 1) fail("kac_inner: rank must be positive");
    a.labels = j.at("labels").get<std::vector<int>>();
    if (static_cast<int>(a.labels.size()) != a.rank + 1)
      fail("kac_inner: need rank+1 labels");
    long g = 0;
    bool nonzero = false;
    for (int p : a.labels) {
      if (p < 0) fail("kac_inner: labels must be non-negative");
      if (p > 0) nonzero = true;
      g = std::gcd(g, static_cast<long>(p));
    }
    if (!nonzero) fail("kac_inner: labels must not all be zero");
    if (g != 1) fail("kac_inner: labels must have gcd 1");
  } else if (a.kind == "outer_sl") {
    a.n = j.at("n").get<int>();
    if (a.n < 2) fail("outer_sl: n must be >= 2");
    a.series = Series::A;
    a.rank = a.n - 1;
    int order = j.contains("scalar_order") ? j["scalar_order"].get<int>() : 1;
    if (order < 1) fail("outer_sl: scalar_order must be >= 1");
    a.K = parse_matrix(j.at("K"), order, "outer_sl K");
    if (a.K.rows() != a.n || a.K.cols() != a.n) fail("outer_sl: K must be n x n");
    if (j.contains("d")) {
      const auto& dj = j["d"];
      if (!dj.is_array() || static_cast<int>(dj.size()) != a.n)
        fail("outer_sl: d is a diagonal given as n entries");
      a.d = Mat(a.n, a.n);
      for (int i = 0; i < a.n; ++i)
        a.d(i, i) = parse_scalar_or_fail(dj[i], order, "outer_sl d");
    }
  } else if (a.kind == "identity") {
    a.series = parse_series_or_fail(j.at("series"), "identity");
    a.rank = j.at("rank").get<int>();
    if (a.rank < 1) fail("identity: rank must be positive");
  } else if (a.kind == "cyclic") {
    if (nested) fail("cyclic: cannot nest cyclic specs");
    a.copies = j.at("copies").get<int>();
    if (a.copies < 1) fail("cyclic: copies must be positive");
    a.inner = std::make_shared<AlgebraSpec>(parse_algebra_spec(j.at("inner"), true));
    if (a.inner->kind != "identity" && a.inner->kind != "outer_sl")
      fail("cyclic: inner must be \"identity\" or \"outer_sl\"");
    a.series = a.inner->series;
    a.rank = a.inner->rank;
  } else {
    fail("unknown algebra kind \"" + a.kind + "\"");
  }
  if (nested && a.kind == "kac_inner") fail("cyclic: inner must be \"identity\" or \"outer_sl\"");
  return a;
}

bool known_check(const std::string& name) {
  for (const auto& info : check_catalog())
    if (info.name == name) return true;
  return false;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception& e) {
    fail(e.what());
  }
  if (!in.is_object()) fail("top level must be an object");
  if (!in.contains("format") || !in["format"].is_number_integer() || in["format"].get<int>() != 1)
    fail("missing or unsupported \"format\" (expected 1)");

  Scenario s;
  if (in.contains("name")) s.name = in["name"].get<std::string>();
  if (!in.contains("algebra")) fail("missing \"algebra\"");
  s.algebra = parse_algebra_spec(in["algebra"], false);

  if (in.contains("seed")) s.seed = in["seed"].get<std::uint64_t>();
  if (in.contains("samples")) s.samples = in["samples"].get<int>();
  if (in.contains("box")) s.box = in["box"].get<int>();
  if (s.samples < 1 || s.box < 1) fail("samples and box must be positive");
  if (in.contains("mode")) {
    s.mode = in["mode"].get<std::string>();
    if (s.mode != "symbolic" && s.mode != "sampled") fail("mode is \"symbolic\" or \"sampled\"");
  }

  if (!in.contains("checks") || !in["checks"].is_array() || in["checks"].empty())
    fail("missing or empty \"checks\"");
  for (const auto& c : in["checks"]) {
    CheckRequest req;
    if (c.is_string()) {
      req.name = c.get<std::string>();
    } else if (c.is_object() && c.contains("name") && c["name"].is_string()) {
      req.name = c["name"].get<std::string>();
      for (const auto& [key, val] : c.items()) {
        if (key == "name") continue;
        if (!val.is_number_integer()) fail("check parameter \"" + key + "\" must be an integer");
        req.params[key] = val.get<long>();
      }
    } else {
      fail("checks are names or {\"name\": ..., params...} objects");
    }
    if (!known_check(req.name)) fail("unknown check \"" + req.name + "\"");
    s.checks.push_back(std::move(req));
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  Scenario s = parse_scenario(buf.str());
  if (s.name.empty()) {
    auto slash = path.find_last_of('/');
    auto base = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = base.find_last_of('.');
    s.name = dot == std::string::npos ? base : base.substr(0, dot);
  }
  return s;
}

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string report_to_json(const Report& r) {
  json out;
  out["format"] = r.format;
  out["scenario"] = r.scenario;
  out["seed"] = r.seed;
  out["samples"] = r.samples;
  out["box"] = r.box;
  out["mode"] = r.mode;
  out["all_pass"] = r.all_pass();
  json checks = json::array();
  for (const auto& c : r.checks) {
    json jc;
    jc["name"] = c.name;
    jc["claim"] = c.claim;
    jc["claimed"] = c.claimed;
    jc["computed"] = c.computed;
    jc["pass"] = c.pass;
    jc["probabilistic"] = c.probabilistic;
    jc["detail"] = c.detail;
    checks.push_back(std::move(jc));
  }
  out["checks"] = std::move(checks);
  return out.dump(2) + "\n";
}

Report run_scenario(const Scenario& s) {
  ScenarioModel model(s);
  Report r;
  r.scenario = s.name;
  r.seed = s.seed;
  r.samples = s.samples;
  r.box = s.box;
  r.mode = s.mode;
  for (const auto& req : s.checks) r.checks.push_back(run_check(model, req));
  return r;
}

}  // namespace liepencil
