#pragma once

#include "liepencil/grading.hpp"

namespace liepencil {

/// One member of the bracket pencil {,}_t = {,}_0 + t {,}_inf, on the same
/// graded basis as the grading it came from. t = infinity is a tag, never a
/// scalar. For the infinity member, `weights` records the N_0-grading
/// (degree-d vectors get weight m-d, degree-0 vectors weight m).
struct PencilMember {
  bool at_infinity = false;
  Cyc t;
  LieAlgebra algebra;
  std::vector<int> weights;
};

/// t = 0: keeps [x,y] when deg x + deg y <= m-1.
PencilMember contract_zero(const ZmGrading& g);

/// t = infinity: keeps [x,y] when deg x + deg y >= m. Nilpotent; q_0 central.
PencilMember contract_infty(const ZmGrading& g);

/// Finite t: structure constants b_0 + t * b_inf.
PencilMember pencil_member(const ZmGrading& g, const Cyc& t);

/// True iff both brackets satisfy Jacobi and every mixed Jacobiator
/// [[x,y]_0,z]_inf + cyclic + [[x,y]_inf,z]_0 + cyclic vanishes, i.e. all
/// linear combinations a b_0 + b b_inf are Lie brackets.
bool compatibility_check(const LieAlgebra& b0, const LieAlgebra& binf);

/// Limit of the bracket under the scaling x -> s^{w(x)} x as the term of
/// weight exactly w(x)+w(y). `exists` is false (with a violating pair) when
/// some bracket has a component of larger weight, so no limit exists.
struct PhiContraction {
  LieAlgebra algebra;
  bool exists = true;
  int i = -1, j = -1;
};
PhiContraction phi_contraction(const LieAlgebra& a, const std::vector<int>& weights);

/// g-tilde = g_0 semidirect g_(inf) on the basis
/// g_0^d + g_{m-1} + ... + g_1 + g_0^ab, with phi-tilde weights
/// 0 / j on g_{m-j} / m respectively.
struct SemidirectAlgebra {
  int m = 1;
  LieAlgebra algebra;
  std::vector<int> tilde_phi_weight;
  std::vector<int> g0d;                 // basis indices of the acting copy
  std::vector<int> g0ab;                // basis indices of the central copy
  std::vector<std::vector<int>> parts;  // parts[d] = indices of g_d, d=1..m-1
};

SemidirectAlgebra semidirect_tilde(const ZmGrading& g);

/// g-tilde for h^n with the cyclic-permutation twist; basis labels carry the
/// identification of g_d with (h-component, power of t-bar).
SemidirectAlgebra tilde_g_for_chain(const LieAlgebra& h, int copies, const Automorphism& inner);

}  // namespace liepencil
