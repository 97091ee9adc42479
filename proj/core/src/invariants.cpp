#include "liepencil/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace liepencil {

namespace {

using PolyMat = std::vector<std::vector<Poly>>;

PolyMat poly_mat_mul(const PolyMat& a, const PolyMat& b) {
  size_t n = a.size(), m = b[0].size(), k = b.size();
  PolyMat r(n, std::vector<Poly>(m, Poly(a[0][0].nvars())));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (size_t j = 0; j < m; ++j)
        if (!b[t][j].is_zero()) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

Poly poly_mat_trace(const PolyMat& a) {
  Poly t(a[0][0].nvars());
  for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

Poly pfaffian_impl(const PolyMat& a, std::vector<int> idx) {
  int nv = a[0][0].nvars();
  if (idx.empty()) return Poly::constant(nv, Cyc(1));
  Poly out(nv);
  int s0 = idx[0];
  for (size_t t = 1; t < idx.size(); ++t) {
    const Poly& entry = a[s0][idx[t]];
    if (entry.is_zero()) continue;
    std::vector<int> rest;
    for (size_t u = 1; u < idx.size(); ++u)
      if (u != t) rest.push_back(idx[u]);
    Poly sub = pfaffian_impl(a, rest);
    Poly term = entry * sub;
    if (t % 2 == 0) term = -term;
    out += term;
  }
  return out;
}

// X(xi) = sum_b xi_b Y^b restricted to one realization block, with Y^b the
// trace-form dual basis.
PolyMat dual_block(const LieAlgebra& a, const Mat& graminv, const SummandInfo& s) {
  int nv = a.dim;
  PolyMat x(s.mat_size, std::vector<Poly>(s.mat_size, Poly(nv)));
  for (int b = s.offset; b < s.offset + s.dim; ++b) {
    // Y^b = sum_c graminv(c, b) Y_c; only c inside the summand contributes.
    for (int c = s.offset; c < s.offset + s.dim; ++c) {
      const Cyc& w = graminv(c, b);
      if (w.is_zero()) continue;
      const Mat& yc = (*a.realization)[c];
      Monomial mono(nv, 0);
      mono[b] = 1;
      for (int i = 0; i < s.mat_size; ++i)
        for (int j = 0; j < s.mat_size; ++j) {
          const Cyc& e = yc(s.mat_offset + i, s.mat_offset + j);
          if (!e.is_zero()) x[i][j].add_term(mono, w * e);
        }
    }
  }
  return x;
}

int min_weight(const Poly& p, const std::vector<int>& weights) {
  return weight_components(p, weights).begin()->first;
}

int max_weight(const Poly& p, const std::vector<int>& weights) {
  return weight_components(p, weights).rbegin()->first;
}

Poly top_component(const Poly& p, const std::vector<int>& weights) {
  auto comps = weight_components(p, weights);
  return comps.rbegin()->second;
}

Poly bottom_component(const Poly& p, const std::vector<int>& weights) {
  auto comps = weight_components(p, weights);
  return comps.begin()->second;
}

// Restriction to g0 coordinates: g0 basis vector a keeps variable index a,
// everything else goes to zero. Result has dim g0 variables.
Mat restriction_matrix(const ZmGrading& g) {
  auto comp0 = g.component(0);
  Mat r(g.algebra.dim, static_cast<int>(comp0.size()));
  for (size_t a = 0; a < comp0.size(); ++a) r(comp0[a], static_cast<int>(a)) = Cyc(1);
  return r;
}

bool is_central(const LieAlgebra& a, const Poly& p) {
  for (int i = 0; i < a.dim; ++i)
    if (!commutes_symbolic(a, p, Poly::variable(a.dim, i))) return false;
  return true;
}

// Greedy independent subset of the given size; empty result on failure.
std::vector<Poly> greedy_independent(const std::vector<Poly>& cands, int want, int samples,
                                     std::uint64_t seed, int box) {
  std::vector<Poly> chosen;
  for (const Poly& c : cands) {
    if (static_cast<int>(chosen.size()) == want) break;
    auto trial = chosen;
    trial.push_back(c);
    if (algebraic_independence(trial, samples, seed, box)) chosen = std::move(trial);
  }
  if (static_cast<int>(chosen.size()) != want) return {};
  return chosen;
}

}  // namespace

Poly pfaffian(const PolyMat& a) {
  if (a.empty() || a.size() % 2 != 0) throw std::invalid_argument("pfaffian: even size required");
  std::vector<int> idx(a.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  return pfaffian_impl(a, idx);
}

InvariantSet classical_generators(const LieAlgebra& a) {
  if (!a.has_realization() || a.summands.empty())
    throw std::invalid_argument("classical_generators: need a classical realization");
  Mat graminv = inverse(trace_form(a));
  InvariantSet out;
  for (const SummandInfo& s : a.summands) {
    PolyMat x = dual_block(a, graminv, s);
    out.declared_rank += s.rank;
    auto add_trace_powers = [&](const std::vector<int>& degrees) {
      PolyMat p = x;
      int cur = 1;
      for (int d : degrees) {
        while (cur < d) {
          p = poly_mat_mul(p, x);
          ++cur;
        }
        out.generators.push_back({poly_mat_trace(p), d, -1});
      }
    };
    switch (s.series) {
      case Series::A: {
        std::vector<int> degs;
        for (int k = 2; k <= s.rank + 1; ++k) degs.push_back(k);
        add_trace_powers(degs);
        break;
      }
      case Series::B:
      case Series::C: {
        std::vector<int> degs;
        for (int k = 1; k <= s.rank; ++k) degs.push_back(2 * k);
        add_trace_powers(degs);
        break;
      }
      case Series::D: {
        std::vector<int> degs;
        for (int k = 1; k + 1 <= s.rank; ++k) degs.push_back(2 * k);
        add_trace_powers(degs);
        // Pfaffian of S X, S the anti-diagonal form.
        int n2 = s.mat_size;
        PolyMat sx(n2, std::vector<Poly>(n2, Poly(a.dim)));
        for (int i = 0; i < n2; ++i)
          for (int j = 0; j < n2; ++j) sx[i][j] = x[n2 - 1 - i][j];
        out.generators.push_back({pfaffian(sx), s.rank, -1});
        break;
      }
    }
  }
  int degree_sum = 0;
  for (const auto& gen : out.generators) degree_sum += gen.degree;
  if (degree_sum != b_value(a.dim, out.declared_rank))
    throw std::domain_error("classical_generators: degree sum != b(g)");
  for (const auto& gen : out.generators)
    if (!is_central(a, gen.poly))
      throw std::domain_error("classical_generators: generator is not invariant");
  return out;
}

InvariantSet transport(const InvariantSet& s, const Mat& p) {
  // Basis vectors are the coordinate functions on the dual, so they
  // transform by the inverse transpose of the change of basis.
  Mat sub = inverse(p).transpose();
  InvariantSet out;
  out.declared_rank = s.declared_rank;
  for (const auto& gen : s.generators)
    out.generators.push_back({gen.poly.substitute_linear(sub), gen.degree, gen.theta_exponent});
  return out;
}

InvariantSet theta_eigen_data(const InvariantSet& s, const ZmGrading& g) {
  InvariantSet out = s;
  for (auto& gen : out.generators) {
    auto comps = weight_components(gen.poly, g.degree);
    if (comps.empty()) throw std::domain_error("theta_eigen_data: zero generator");
    int r = comps.begin()->first % g.m;
    for (const auto& [w, part] : comps)
      if (w % g.m != r)
        throw std::domain_error(
            "theta_eigen_data: generator is not a theta eigenvector; "
            "use eigen_generating_set");
    gen.theta_exponent = r;
  }
  return out;
}

InvariantSet eigen_generating_set(const InvariantSet& s, const ZmGrading& g, int samples,
                                  std::uint64_t seed, int box) {
  // Split every generator into theta-eigencomponents (weight classes mod m);
  // each piece is still invariant because the projector commutes with the
  // coadjoint action.
  std::vector<InvariantGenerator> cands;
  for (const auto& gen : s.generators) {
    std::map<int, Poly> classes;
    for (const auto& [w, part] : weight_components(gen.poly, g.degree)) {
      auto it = classes.find(w % g.m);
      if (it == classes.end())
        classes.emplace(w % g.m, part);
      else
        it->second += part;
    }
    for (auto& [r, piece] : classes) cands.push_back({piece, gen.degree, r});
  }
  int want = static_cast<int>(s.generators.size());
  InvariantSet out;
  out.declared_rank = s.declared_rank;
  for (const auto& cand : cands) {
    if (static_cast<int>(out.generators.size()) == want) break;
    std::vector<Poly> trial;
    for (const auto& gsel : out.generators) trial.push_back(gsel.poly);
    trial.push_back(cand.poly);
    if (algebraic_independence(trial, samples, seed, box)) out.generators.push_back(cand);
  }
  if (static_cast<int>(out.generators.size()) != want)
    throw std::domain_error("eigen_generating_set: could not rebuild an independent set");
  return out;
}

PhiData phi_decompose(const Poly& h, const std::vector<int>& weights) {
  if (h.is_zero()) throw std::invalid_argument("phi_decompose: zero polynomial");
  PhiData d;
  d.components = weight_components(h, weights);
  d.top_weight = d.components.rbegin()->first;
  d.bottom_weight = d.components.begin()->first;
  return d;
}

int D_phi(const std::vector<int>& weights) {
  int s = 0;
  for (int w : weights) s += w;
  return s;
}

GgsReport ggs_check(const InvariantSet& s, const std::vector<int>& weights, int samples,
                    std::uint64_t seed, int box) {
  GgsReport rep;
  rep.d = D_phi(weights);
  std::vector<Poly> tops;
  for (const auto& gen : s.generators) {
    rep.sum_top_degrees += max_weight(gen.poly, weights);
    tops.push_back(top_component(gen.poly, weights));
  }
  rep.is_ggs = rep.sum_top_degrees == rep.d;
  rep.independence_of_tops = algebraic_independence(tops, samples, seed, box);
  return rep;
}

std::vector<Poly> zx_generators(const InvariantSet& s, const ZmGrading& g) {
  std::vector<Poly> out;
  for (const auto& gen : s.generators)
    for (const auto& [w, part] : weight_components(gen.poly, g.degree)) out.push_back(part);
  return out;
}

std::vector<Poly> zinfty_generators(const InvariantSet& s, const ZmGrading& g, bool inner) {
  std::vector<Poly> out;
  for (int b : g.component(0)) out.push_back(Poly::variable(g.algebra.dim, b));
  if (!inner)
    for (const auto& gen : s.generators) {
      if (gen.theta_exponent < 0)
        throw std::invalid_argument("zinfty_generators: run theta_eigen_data first");
      if (gen.theta_exponent != 0)
        out.push_back(bottom_component(gen.poly, g.degree));
    }
  return out;
}

std::vector<Poly> g0_invariants_heuristic(const InvariantSet& s, const ZmGrading& g, int want,
                                          int samples, std::uint64_t seed, int box) {
  Mat r = restriction_matrix(g);
  std::vector<Poly> cands;
  for (const auto& gen : s.generators) {
    Poly restricted = gen.poly.substitute_linear(r);
    if (!restricted.is_zero()) cands.push_back(restricted);
  }
  return greedy_independent(cands, want, samples, seed, box);
}

std::vector<Poly> zinfty_g0_generators(const InvariantSet& s, const ZmGrading& g,
                                       const std::vector<Poly>& f0) {
  Mat emb = restriction_matrix(g).transpose();
  std::vector<Poly> out;
  for (const Poly& f : f0) out.push_back(f.substitute_linear(emb));
  for (const auto& gen : s.generators) {
    if (gen.theta_exponent < 0)
      throw std::invalid_argument("zinfty_g0_generators: run theta_eigen_data first");
    if (gen.theta_exponent != 0) out.push_back(bottom_component(gen.poly, g.degree));
  }
  return out;
}

TildeReport tilde_invariants(const SemidirectAlgebra& sd, const ZmGrading& g,
                             const InvariantSet& s, const std::vector<Poly>& f0, int samples,
                             std::uint64_t seed, int box) {
  const int n = g.algebra.dim;
  const int bign = sd.algebra.dim;
  auto comp0 = g.component(0);
  const int r = static_cast<int>(comp0.size());

  // g embeds into g-tilde as the second summand: a positive-degree vector
  // keeps its copy, a degree-0 vector y becomes d_y/2 + ab_y.
  Mat emb_g(n, bign);
  for (int a = 0; a < r; ++a) {
    emb_g(comp0[a], sd.g0d[a]) = Cyc(Rational(1, 2));
    emb_g(comp0[a], sd.g0ab[a]) = Cyc(1);
  }
  {
    size_t pos = 0;
    std::vector<int> flat;
    for (int d = g.m - 1; d >= 1; --d)
      for (int ni : sd.parts[d]) flat.push_back(ni);
    for (int d = g.m - 1; d >= 1; --d)
      for (int b : g.component(d)) emb_g(b, flat[pos++]) = Cyc(1);
  }
  // The g0 summand embeds as y -> d_y/2 - ab_y.
  Mat emb_0(r, bign);
  for (int a = 0; a < r; ++a) {
    emb_0(a, sd.g0d[a]) = Cyc(Rational(1, 2));
    emb_0(a, sd.g0ab[a]) = Cyc(-1);
  }

  Mat restr = restriction_matrix(g);
  TildeReport rep;
  rep.d_phi = D_phi(sd.tilde_phi_weight);
  rep.degj_ok = true;
  for (const Poly& f : f0) rep.generators.push_back(top_component(f.substitute_linear(emb_0),
                                                                 sd.tilde_phi_weight));
  for (const auto& gen : s.generators) {
    if (gen.theta_exponent < 0)
      throw std::invalid_argument("tilde_invariants: run theta_eigen_data first");
    Poly h_emb = gen.poly.substitute_linear(emb_g);
    if (gen.theta_exponent == 0) {
      // Correct by the g0-summand pullback of the restriction so the
      // weight-(m d_j) part cancels and the top drops.
      Poly pj = gen.poly.substitute_linear(restr);
      Poly corr = pj.substitute_linear(emb_0);
      Poly h_tilde = gen.degree % 2 == 0 ? h_emb - corr : h_emb + corr;
      if (h_tilde.is_zero()) throw std::domain_error("tilde_invariants: correction cancelled H");
      if (max_weight(h_tilde, sd.tilde_phi_weight) >= sd.m * gen.degree)
        throw std::domain_error("tilde_invariants: top did not drop");
      rep.generators.push_back(top_component(h_tilde, sd.tilde_phi_weight));
    } else {
      int top = max_weight(h_emb, sd.tilde_phi_weight);
      if (top != sd.m * gen.degree - gen.theta_exponent) rep.degj_ok = false;
      rep.generators.push_back(top_component(h_emb, sd.tilde_phi_weight));
    }
  }
  for (const Poly& p : rep.generators) {
    int w = max_weight(p, sd.tilde_phi_weight);
    rep.phi_degrees.push_back(w);
    rep.degree_sum += w;
  }
  rep.central = true;
  for (const Poly& p : rep.generators)
    if (!is_central(sd.algebra, p)) rep.central = false;
  rep.independent = algebraic_independence(rep.generators, samples, seed, box);
  return rep;
}

std::vector<RestrictionRow> restriction_check(const InvariantSet& s, const ZmGrading& g) {
  Mat r = restriction_matrix(g);
  std::vector<RestrictionRow> rows;
  for (const auto& gen : s.generators) {
    if (gen.theta_exponent < 0)
      throw std::invalid_argument("restriction_check: run theta_eigen_data first");
    RestrictionRow row;
    row.restriction_nonzero = !gen.poly.substitute_linear(r).is_zero();
    row.fixed = gen.theta_exponent == 0;
    row.ok = row.restriction_nonzero == row.fixed;
    rows.push_back(row);
  }
  return rows;
}

OuterInvReport outer_inv_checks(const InvariantSet& s, const ZmGrading& g, int rank_g0) {
  OuterInvReport rep;
  rep.rank_g0 = rank_g0;
  rep.top_degree_ok = true;
  for (const auto& gen : s.generators) {
    if (gen.theta_exponent < 0)
      throw std::invalid_argument("outer_inv_checks: run theta_eigen_data first");
    rep.sum_r += gen.theta_exponent;
    if (gen.theta_exponent == 0) ++rep.fixed_count;
    int top = max_weight(gen.poly, g.degree);
    if ((gen.theta_exponent == 0) != (top % g.m == 0)) rep.top_degree_ok = false;
  }
  int l = static_cast<int>(s.generators.size());
  rep.expected_sum_r = g.m * (l - rank_g0) / 2;
  rep.sum_ok = rep.sum_r == rep.expected_sum_r;
  rep.count_ok = rep.fixed_count == rank_g0;
  return rep;
}

}  // namespace liepencil
