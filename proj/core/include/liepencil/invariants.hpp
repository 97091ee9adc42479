#pragma once

#include "liepencil/contraction.hpp"
#include "liepencil/poisson.hpp"

namespace liepencil {

/// One generator of S(g)^g, as a polynomial in the coordinates of the basis
/// the set was built (or transported) in.
struct InvariantGenerator {
  Poly poly;
  int degree = 0;           // d_j
  int theta_exponent = -1;  // r_j; -1 until theta_eigen_data has run
};

struct InvariantSet {
  std::vector<InvariantGenerator> generators;
  int declared_rank = 0;  // l = rk g
};

/// Pfaffian of an antisymmetric polynomial matrix, by expansion along the
/// first remaining row.
Poly pfaffian(const std::vector<std::vector<Poly>>& a);

/// Free generators of S(g)^g for classical g (or direct sums): trace powers
/// of X(xi) = sum xi_b Y^b in the trace-form-dual basis, plus the Pfaffian
/// for the D series. Verifies invariance ({H, x_i} = 0 for all i) and the
/// degree sum = b(g); throws on failure.
InvariantSet classical_generators(const LieAlgebra& a);

/// Rewrites a set built on one basis in terms of another: columns of p are
/// the new basis in the old coordinates.
InvariantSet transport(const InvariantSet& s, const Mat& p);

/// Records r_j for each generator under the zeta^deg action on graded
/// variables. Throws if some generator is not an eigenvector; use
/// eigen_generating_set then.
InvariantSet theta_eigen_data(const InvariantSet& s, const ZmGrading& g);

/// Replaces the generators by eigen components of their group averages:
/// splits each H by theta-weight mod m and keeps an algebraically
/// independent subset of the same size. All outputs are eigenvectors.
InvariantSet eigen_generating_set(const InvariantSet& s, const ZmGrading& g, int samples,
                                  std::uint64_t seed, int box);

/// Bi-homogeneous decomposition of one polynomial.
struct PhiData {
  std::map<int, Poly> components;
  int top_weight = 0;     // d^bullet
  int bottom_weight = 0;  // weight of H_{j,bullet}
};
PhiData phi_decompose(const Poly& h, const std::vector<int>& weights);

/// Weight of a volume form: sum of all variable weights.
int D_phi(const std::vector<int>& weights);

struct GgsReport {
  int sum_top_degrees = 0;
  int d = 0;
  bool is_ggs = false;             // sum_top_degrees == d
  bool independence_of_tops = false;
};
GgsReport ggs_check(const InvariantSet& s, const std::vector<int>& weights, int samples,
                    std::uint64_t seed, int box);

/// All nonzero bi-homogeneous components of all generators (the free
/// generators of the pencil-centre algebra Z when the hypotheses hold).
std::vector<Poly> zx_generators(const InvariantSet& s, const ZmGrading& g);

/// Generators of the centre at t = infinity: a basis of g0, plus (outer
/// case) the lowest phi-components of the non-fixed H_j.
std::vector<Poly> zinfty_generators(const InvariantSet& s, const ZmGrading& g, bool inner);

/// g0-invariants via restriction of the ambient generators to g0
/// coordinates: polynomials in dim g0 variables. Returns an independent
/// subset of the requested size, or fewer if the heuristic fails (caller
/// must then supply its own).
std::vector<Poly> g0_invariants_heuristic(const InvariantSet& s, const ZmGrading& g, int want,
                                          int samples, std::uint64_t seed, int box);

/// Generators of Z_infty^{g0}: the f0 (polynomials in the g0 coordinates)
/// rewritten in full coordinates, plus the bottoms of the non-fixed H_j.
std::vector<Poly> zinfty_g0_generators(const InvariantSet& s, const ZmGrading& g,
                                       const std::vector<Poly>& f0);

/// Generators of S(g-tilde)^{g-tilde} with their verification data.
struct TildeReport {
  std::vector<Poly> generators;  // variables = sd basis
  std::vector<int> phi_degrees;  // phi-tilde degree of each generator
  int degree_sum = 0;
  int d_phi = 0;
  bool central = false;      // each generator commutes with all linears on g-tilde
  bool degj_ok = false;      // non-fixed tops have degree m*d_j - r_j
  bool independent = false;  // sampled Jacobian
};
TildeReport tilde_invariants(const SemidirectAlgebra& sd, const ZmGrading& g,
                             const InvariantSet& s, const std::vector<Poly>& f0, int samples,
                             std::uint64_t seed, int box);

/// Lemma-style restriction table: H_j|_{g0*} is nonzero iff r_j = 0.
struct RestrictionRow {
  bool restriction_nonzero = false;
  bool fixed = false;  // r_j == 0
  bool ok = false;     // the two agree
};
std::vector<RestrictionRow> restriction_check(const InvariantSet& s, const ZmGrading& g);

struct OuterInvReport {
  int sum_r = 0;
  int expected_sum_r = 0;  // m (rk g - rk g0) / 2
  int fixed_count = 0;
  int rank_g0 = 0;
  bool sum_ok = false;
  bool count_ok = false;
  bool top_degree_ok = false;  // r_j = 0 iff top phi-degree in mZ
};
OuterInvReport outer_inv_checks(const InvariantSet& s, const ZmGrading& g, int rank_g0);

}  // namespace liepencil
