#pragma once

#include <cstdint>

#include "liepencil/liealg.hpp"
#include "liepencil/polynomial.hpp"

namespace liepencil {

/// Lie-Poisson bracket on S(q): {x_i, x_j} = [e_i, e_j], extended by the
/// Leibniz rule. Variables are coordinates in the dual of a's basis.
Poly poisson_bracket(const LieAlgebra& a, const Poly& f, const Poly& g);

/// Poisson tensor pi(xi)_{ij} = sum_k c_{ij}^k xi_k. Skew; rank is even.
Mat tensor_at(const LieAlgebra& a, const std::vector<Cyc>& xi);

/// Basis of the stabilizer q^xi = ker pi(xi).
std::vector<std::vector<Cyc>> stabilizer(const LieAlgebra& a, const std::vector<Cyc>& xi);

struct IndexReport {
  int generic_rank_observed = 0;
  int index_upper_bound = 0;  // dim - generic_rank_observed
  int samples = 0;
  std::vector<Cyc> witness_point;  // first point attaining the max rank
  /// Schwartz-Zippel style bound on the probability that the true generic
  /// rank was missed by every sample.
  Rational failure_bound;
};

/// Samples integer points from [-box, box]^dim with the seeded generator and
/// reports dim minus the maximal observed tensor rank: a certified upper
/// bound on ind q, equal to it with probability >= 1 - failure_bound.
IndexReport index_estimate(const LieAlgebra& a, int samples, std::uint64_t seed, int box);

/// b(q) = (dim + ind)/2; throws on parity violation.
int b_value(int dim, int index);

bool commutes_symbolic(const LieAlgebra& a, const Poly& f, const Poly& g);
bool commutes_sampled(const LieAlgebra& a, const Poly& f, const Poly& g, int samples,
                      std::uint64_t seed, int box);

/// Rank of the N x dim matrix of gradients at xi.
int jacobian_rank(const std::vector<Poly>& polys, const std::vector<Cyc>& xi);

/// True iff some sampled point has full Jacobian rank.
bool algebraic_independence(const std::vector<Poly>& polys, int samples, std::uint64_t seed,
                            int box);

}  // namespace liepencil
