#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liepencil/contraction.hpp"
#include "liepencil/invariants.hpp"

namespace liepencil {

/// How a scenario builds its graded algebra.
struct AlgebraSpec {
  std::string kind;  // "kac_inner" | "outer_sl" | "cyclic" | "identity"

  // kac_inner and identity (and the classical algebra under outer_sl).
  Series series = Series::A;
  int rank = 0;
  std::vector<int> labels;  // kac_inner

  // outer_sl: x -> Ad(d)(-K x^T K^{-1}) on sl_n.
  int n = 0;
  Mat K;
  Mat d;  // empty = identity twist

  // cyclic: order-(copies * ord(inner)) automorphism of h^copies.
  int copies = 1;
  std::shared_ptr<AlgebraSpec> inner;  // "identity" or "outer_sl"
};

struct CheckRequest {
  std::string name;
  std::map<std::string, long> params;  // e.g. {"expect": 3}
};

struct Scenario {
  int format = 1;
  std::string name;
  AlgebraSpec algebra;
  std::vector<CheckRequest> checks;
  std::uint64_t seed = 42;
  int samples = 20;
  int box = 10;
  std::string mode = "symbolic";  // or "sampled"
};

/// Parses the JSON scenario format ("format": 1). Validates labels
/// (non-negative, not all zero, gcd 1) and check names against the catalog
/// at parse time; throws std::runtime_error with a description.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

struct CheckResult {
  std::string name;
  std::string claim;     // the verified identity, stated mathematically
  std::string claimed;   // expected value(s)
  std::string computed;  // observed value(s)
  std::string detail;    // reproduction data on failure, "" otherwise
  bool pass = false;
  bool probabilistic = false;
};

struct Report {
  int format = 1;
  std::string scenario;
  std::uint64_t seed = 42;
  int samples = 20;
  int box = 10;
  std::string mode = "symbolic";
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

/// Deterministic JSON rendering; byte-identical for equal inputs.
std::string report_to_json(const Report& r);

struct CheckInfo {
  std::string name;
  std::string claim;
  bool probabilistic = false;
};
const std::vector<CheckInfo>& check_catalog();

/// Everything the checks and the CLI subcommands derive from a scenario.
/// Construction is cheap; the heavier invariant-theory objects are built
/// on first use and cached. Not safe for concurrent use of one instance.
class ScenarioModel {
 public:
  explicit ScenarioModel(Scenario s);

  const Scenario& scenario() const { return scn_; }
  const LieAlgebra& original() const { return original_; }
  const ZmGrading& grading() const { return grading_; }
  const PencilMember& q_zero() const;
  const PencilMember& q_infty() const;
  const SemidirectAlgebra& tilde() const;

  int rank_g() const { return rank_g_; }
  int rank_g0() const;
  int ind_g() const;
  int ind_g0() const;

  /// True when the automorphism acts trivially on the invariants
  /// (all r_j = 0); cross-checked against the restriction table, and the
  /// scenario is rejected if the two signals disagree.
  bool inner() const;

  /// Symmetric invariants in graded coordinates, eigen data attached.
  const InvariantSet& invariants() const;
  /// Generators of the invariants of the fixed subalgebra (heuristic).
  const std::vector<Poly>& f0() const;
  const TildeReport& tilde_report() const;

  /// Index upper bound with the scenario's sampling parameters.
  int ind(const LieAlgebra& a) const;
  /// Commutation test honouring the scenario's mode flag.
  bool commutes(const LieAlgebra& a, const Poly& f, const Poly& g) const;

 private:
  Scenario scn_;
  LieAlgebra original_;
  ZmGrading grading_;
  int rank_g_ = 0;
  mutable std::optional<PencilMember> q0_, qinf_;
  mutable std::optional<SemidirectAlgebra> sd_;
  mutable std::optional<int> rank_g0_, ind_g_, ind_g0_;
  mutable std::optional<InvariantSet> inv_;
  mutable std::optional<bool> inner_;
  mutable std::optional<std::vector<Poly>> f0_;
  mutable std::optional<TildeReport> tilde_report_;
};

CheckResult run_check(const ScenarioModel& m, const CheckRequest& req);
Report run_scenario(const Scenario& s);

}  // namespace liepencil
