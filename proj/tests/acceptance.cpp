// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion is evaluated from the bundled scenario reports, so the
// values printed here are exactly what `liepencil run` reproduces.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "liepencil/scenario.hpp"

using namespace liepencil;

namespace {

std::map<std::string, Report> g_reports;

const Report& report(const std::string& name) {
  auto it = g_reports.find(name);
  if (it == g_reports.end()) {
    auto path = std::string(LIEPENCIL_SCENARIO_DIR) + "/" + name + ".scn";
    it = g_reports.emplace(name, run_scenario(load_scenario(path))).first;
  }
  return it->second;
}

bool passed(const std::string& scenario, const std::string& check) {
  for (const auto& c : report(scenario).checks)
    if (c.name == check) return c.pass;
  return false;  // a required check missing from the scenario is a failure
}

int g_failures = 0;

void criterion(int n, bool ok, const std::string& what) {
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " - " << what << "\n";
  if (!ok) ++g_failures;
}

}  // namespace

int main() {
  criterion(1,
            passed("sl2_inner_involution", "pencil_identity") &&
                passed("sl3_principal", "pencil_identity") &&
                passed("sl3_outer_order4", "pencil_identity"),
            "pencil identity {,}0 + {,}inf = {,}, Jacobi at both limits, q_inf nilpotent "
            "with q0 central (sl2 (1,1), sl3 principal, sl3 outer order 4)");

  criterion(2,
            passed("sl2_inner_involution", "ind_infty_formula") &&
                passed("sl3_outer_order4", "ind_infty_formula") &&
                passed("sl2sl2_swap", "ind_infty_formula"),
            "ind q_inf = dim q0 + ind q - ind q0: 1 = 1+1-1, 4 = 3+2-1, 4 = 3+2-1");

  criterion(3,
            passed("sl3_outer_order4", "eq4_tilde_index") &&
                passed("sl3_outer_order4", "stabilizer_dim_gamma") &&
                passed("sl3_chain_n2", "eq4_tilde_index") &&
                passed("sl3_chain_n2", "stabilizer_dim_gamma"),
            "ind g~ = rk g + rk g0 with the explicit gamma = e + y regular: "
            "dim g~^gamma = 3 (order 4), = 5 (order 8 chain)");

  criterion(4,
            passed("sl3_outer_order4", "outer_inv_identities") &&
                passed("sl3_outer_order4", "restriction_table") &&
                passed("sl2sl2_swap", "outer_inv_identities") &&
                passed("sl2sl2_swap", "restriction_table") &&
                passed("sl3_principal", "outer_inv_identities") &&
                passed("sl3_principal", "restriction_table"),
            "sum r_j = m(rk g - rk g0)/2 and #fixed = rk g0 (sum r = 2, 1, 0), "
            "restriction tables match the eigen data");

  criterion(5,
            passed("sl2_inner_involution", "ggs_degree_sum") &&
                passed("sl3_principal", "ggs_degree_sum") &&
                passed("sl3_outer_order4", "tilde_generators"),
            "degree sums attain D_phi with independent tops: 2 = 2, 9 = 9, "
            "and 22 = 22 for the phi~ system");

  criterion(6, passed("sl3_outer_order4", "degj_check"),
            "top phi~-degree of the cubic generator is 4*3 - 2 = 10");

  criterion(7,
            passed("sl3_principal", "ind_zero_eq_rank") &&
                passed("sl4_principal", "ind_zero_eq_rank") &&
                passed("sl3_outer_order4", "ind_zero_eq_rank"),
            "ind q_(0) = rk g for principal sl3 and sl4 and for the order-4 grading");

  criterion(8,
            passed("sl2_inner_involution", "zx_commute") &&
                passed("sl3_principal", "zx_commute") &&
                passed("sl3_outer_order4", "zinf_g0_generators") &&
                passed("sl3_outer_order4", "union_commute"),
            "symbolic Poisson-commutativity of the pencil-centre generators, of "
            "Z_inf^{g0}, and of their union");

  criterion(9,
            passed("sl2_inner_involution", "zx_count") &&
                passed("sl3_principal", "zx_count") &&
                passed("sl2_inner_involution", "zinf_count") &&
                passed("sl3_outer_order4", "zinf_count") &&
                passed("sl3_outer_order4", "zinf_g0_generators") &&
                passed("sl3_outer_order4", "tilde_generators"),
            "generator counts: zx = b(g) - b(g0) + rk g0, Z_inf = ind q_inf, "
            "Z_inf^{g0} = rk g = 2, S(g~)^{g~} = rk g + rk g0 = 3");

  bool c10 = true;
  for (const char* name : {"sl2_inner_involution", "sl3_principal", "sl3_outer_order4",
                           "sl2sl2_swap", "sl4_principal", "sl3_chain_n2"})
    c10 = c10 && passed(name, "compatibility");
  for (const char* name : {"sl2_inner_involution", "sl3_principal", "sl3_outer_order4",
                           "sl2sl2_swap"})
    c10 = c10 && passed(name, "bullet_tops_central") && passed(name, "incl_gradients") &&
          passed(name, "inclz_g0_invariance");
  criterion(10, c10,
            "property suites: tops central at t = 0, gradients in the tensor kernels, "
            "finite-t centres g0-invariant, compatibility for every grading");

  if (g_failures == 0) {
    std::cout << "all 10 acceptance criteria passed\n";
    return 0;
  }
  std::cout << g_failures << " acceptance criteria FAILED\n";
  return 1;
}
