#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liepencil/matrix.hpp"

namespace liepencil {

/// Sparse coefficient vector: (basis index, coefficient), sorted by index.
using SparseVec = std::vector<std::pair<int, Cyc>>;

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D' };

/// One classical block of a (possibly direct-sum) algebra. `offset`/`dim`
/// locate its basis vectors, `mat_offset`/`mat_size` its diagonal block in
/// the defining representation.
struct SummandInfo {
  Series series;
  int rank = 0;
  int offset = 0;
  int dim = 0;
  int mat_offset = 0;
  int mat_size = 0;
};

/// Finite-dimensional Lie algebra given by a sparse structure-constant
/// tensor, keyed by (i, j) with i < j and extended by antisymmetry.
/// Immutable after construction by convention: the builders below fill it
/// in, everything else only reads.
struct LieAlgebra {
  int dim = 0;
  std::map<std::pair<int, int>, SparseVec> structure;
  std::vector<std::string> labels;
  std::optional<std::vector<Mat>> realization;
  std::vector<SummandInfo> summands;  // empty for hand-built algebras

  /// [e_i, e_j] for basis vectors, any i, j.
  SparseVec bracket_basis(int i, int j) const;

  /// [x, y] for coefficient vectors of length dim.
  std::vector<Cyc> bracket(const std::vector<Cyc>& x, const std::vector<Cyc>& y) const;

  void set_constant(int i, int j, int k, const Cyc& c);

  bool has_realization() const { return realization.has_value(); }
};

LieAlgebra build_classical(Series series, int rank);
std::optional<Series> parse_series(char c);

struct JacobiResult {
  bool ok = true;
  int i = -1, j = -1, k = -1;  // first violating triple when !ok
};
JacobiResult jacobi_check(const LieAlgebra& a);

/// Gram matrix of the trace form of the defining representation.
/// Requires a realization.
Mat trace_form(const LieAlgebra& a);

/// Invariance defect gram([x,y],z) + gram(y,[x,z]) on all basis triples.
bool form_is_invariant(const LieAlgebra& a, const Mat& gram);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
LieAlgebra nth_power(const LieAlgebra& h, int n);

/// Dimensions of a >= [a,a] >= [a,[a,a]] >= ... until stabilization.
std::vector<int> lower_central_series(const LieAlgebra& a);

/// Rewrites the algebra in the basis given by the columns of p
/// (new basis vectors in old coordinates). Carries the realization along.
LieAlgebra change_basis(const LieAlgebra& a, const Mat& p, std::vector<std::string> labels = {});

/// Expresses an element of the defining representation in the basis matrices.
/// Throws if the matrix is not in the span.
std::vector<Cyc> matrix_coordinates(const LieAlgebra& a, const Mat& x);

/// Declared rank: sum of summand ranks, if known.
std::optional<int> declared_rank(const LieAlgebra& a);

}  // namespace liepencil
