#pragma once

#include "liepencil/liealg.hpp"

namespace liepencil {

/// Finite-order automorphism, stored as its matrix on basis coordinates.
struct Automorphism {
  Mat matrix;
  int order = 1;
};

/// Wraps a matrix after verifying it preserves all brackets and has finite
/// order <= order_bound. Throws std::invalid_argument otherwise.
Automorphism make_automorphism(const LieAlgebra& a, Mat theta, int order_bound = 24);

/// Periodic Z_m-grading. `algebra` is rewritten in a homogeneous basis;
/// degree[i] in {0,...,m-1} is the degree of graded basis vector i; the
/// columns of change_of_basis express the graded basis in the original one.
struct ZmGrading {
  int m = 1;
  LieAlgebra algebra;
  std::vector<int> degree;
  Mat change_of_basis;

  std::vector<int> component_dims() const;
  /// Graded-basis indices of degree d.
  std::vector<int> component(int d) const;
};

/// Splits into eigenspaces of t: degree i is the zeta_m^i eigenspace.
ZmGrading eigenspace_grading(const LieAlgebra& a, const Automorphism& t);

ZmGrading trivial_grading(const LieAlgebra& a);

/// Inner grading data: non-negative labels p_0, p_1, ..., p_l on the affine
/// Dynkin diagram of the given classical algebra, gcd 1.
struct KacDiagramInner {
  Series series;
  int rank = 0;
  std::vector<int> labels;
};

/// Grading of order m = p_0 + sum n_i p_i where the n_i are the marks
/// (coefficients of the highest root). A root vector for sum c_i alpha_i
/// gets degree sum c_i p_i mod m; the Cartan gets degree 0.
ZmGrading grading_from_kac_inner(const KacDiagramInner& d);

/// x -> Ad(d)(-K x^T K^{-1}) on sl_n, with d = identity when omitted.
Automorphism outer_sl_automorphism(int n, const Mat& k, int order_bound = 24);
Automorphism outer_sl_automorphism(int n, const Mat& k, const Mat& d, int order_bound = 24);

/// On h^n: (x_1,...,x_n) -> (x_n, inner(x_1), x_2, ..., x_{n-1}).
/// `hpow` must be nth_power(h, copies) with `inner` acting on h.
Automorphism cyclic_permutation_automorphism(const LieAlgebra& hpow, int copies,
                                             const Automorphism& inner);

struct GradingViolation {
  bool ok = true;
  int i = -1, j = -1;  // first basis pair whose bracket is inhomogeneous
};
GradingViolation validate_grading(const ZmGrading& g);

/// A subalgebra spanned by part of the graded basis; `indices` records the
/// embedding into g.algebra.
struct Subalgebra {
  LieAlgebra algebra;
  std::vector<int> indices;
};

/// Subalgebra spanned by the given basis indices; throws if not closed.
Subalgebra basis_subalgebra(const LieAlgebra& a, const std::vector<int>& indices);

/// The degree-0 component q_0 = q^theta.
Subalgebra fixed_subalgebra(const ZmGrading& g);

/// zeta^deg rebuilt as a matrix on the *original* basis; recovering the
/// automorphism a grading came from.
Mat grading_automorphism_matrix(const ZmGrading& g);

}  // namespace liepencil
