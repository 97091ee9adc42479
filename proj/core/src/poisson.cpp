#include "liepencil/poisson.hpp"

#include <stdexcept>

#include "liepencil/rng.hpp"

namespace liepencil {

Poly poisson_bracket(const LieAlgebra& a, const Poly& f, const Poly& g) {
  if (f.nvars() != a.dim || g.nvars() != a.dim)
    throw std::invalid_argument("poisson_bracket: variable count != dim");
  // {f, g} = sum_{i<j} (df_i dg_j - df_j dg_i) * sum_k c_{ij}^k x_k.
  std::vector<Poly> df(a.dim, Poly(a.dim)), dg(a.dim, Poly(a.dim));
  for (int i = 0; i < a.dim; ++i) {
    df[i] = f.derivative(i);
    dg[i] = g.derivative(i);
  }
  Poly out(a.dim);
  for (const auto& [key, sv] : a.structure) {
    auto [i, j] = key;
    Poly factor = df[i] * dg[j] - df[j] * dg[i];
    if (factor.is_zero()) continue;
    Poly lin(a.dim);
    for (const auto& [k, c] : sv) {
      Monomial m(a.dim, 0);
      m[k] = 1;
      lin.add_term(m, c);
    }
    out += factor * lin;
  }
  return out;
}

Mat tensor_at(const LieAlgebra& a, const std::vector<Cyc>& xi) {
  if (static_cast<int>(xi.size()) != a.dim) throw std::invalid_argument("tensor_at: point size");
  Mat pi(a.dim, a.dim);
  for (const auto& [key, sv] : a.structure) {
    auto [i, j] = key;
    Cyc v(0);
    for (const auto& [k, c] : sv) v += c * xi[k];
    pi(i, j) = v;
    pi(j, i) = -v;
  }
  return pi;
}

std::vector<std::vector<Cyc>> stabilizer(const LieAlgebra& a, const std::vector<Cyc>& xi) {
  return kernel_basis(tensor_at(a, xi));
}

IndexReport index_estimate(const LieAlgebra& a, int samples, std::uint64_t seed, int box) {
  if (samples < 1) throw std::invalid_argument("index_estimate: samples >= 1");
  Rng rng(seed);
  IndexReport rep;
  rep.samples = samples;
  int best = -1;
  for (int s = 0; s < samples; ++s) {
    std::vector<Cyc> xi = rng.point(a.dim, box);
    int r = rank(tensor_at(a, xi));
    if (r > best) {
      best = r;
      rep.witness_point = xi;
    }
  }
  rep.generic_rank_observed = best;
  rep.index_upper_bound = a.dim - best;
  // The generic rank is witnessed by a nonzero minor of degree <= dim; a
  // sample misses it with probability <= deg/(2*box+1).
  Rational per(a.dim, 2L * box + 1);
  if (per > 1) per = 1;
  Rational bound(1);
  for (int s = 0; s < samples; ++s) bound *= per;
  rep.failure_bound = bound;
  return rep;
}

int b_value(int dim, int index) {
  if ((dim + index) % 2 != 0) throw std::invalid_argument("b_value: dim + ind must be even");
  return (dim + index) / 2;
}

bool commutes_symbolic(const LieAlgebra& a, const Poly& f, const Poly& g) {
  return poisson_bracket(a, f, g).is_zero();
}

bool commutes_sampled(const LieAlgebra& a, const Poly& f, const Poly& g, int samples,
                      std::uint64_t seed, int box) {
  Poly br = poisson_bracket(a, f, g);
  Rng rng(seed);
  for (int s = 0; s < samples; ++s)
    if (!br.evaluate(rng.point(a.dim, box)).is_zero()) return false;
  return true;
}

int jacobian_rank(const std::vector<Poly>& polys, const std::vector<Cyc>& xi) {
  if (polys.empty()) return 0;
  int dim = polys[0].nvars();
  Mat jac(static_cast<int>(polys.size()), dim);
  for (size_t r = 0; r < polys.size(); ++r)
    for (int c = 0; c < dim; ++c) jac(static_cast<int>(r), c) = polys[r].derivative(c).evaluate(xi);
  return rank(jac);
}

bool algebraic_independence(const std::vector<Poly>& polys, int samples, std::uint64_t seed,
                            int box) {
  if (polys.empty()) return true;
  int dim = polys[0].nvars();
  Rng rng(seed);
  for (int s = 0; s < samples; ++s)
    if (jacobian_rank(polys, rng.point(dim, box)) == static_cast<int>(polys.size())) return true;
  return false;
}

}  // namespace liepencil
