#include "liepencil/contraction.hpp"

#include <sstream>
#include <stdexcept>

namespace liepencil {

namespace {

// Shared filter for the t=0 / t=inf limits: keep? decides from the degree sum.
template <typename Keep>
LieAlgebra filter_bracket(const ZmGrading& g, Keep keep) {
  LieAlgebra out;
  out.dim = g.algebra.dim;
  out.labels = g.algebra.labels;
  out.realization = g.algebra.realization;
  out.summands = g.algebra.summands;
  for (const auto& [key, sv] : g.algebra.structure) {
    auto [i, j] = key;
    if (keep(g.degree[i] + g.degree[j]))
      for (const auto& [k, c] : sv) out.set_constant(i, j, k, c);
  }
  return out;
}

}  // namespace

PencilMember contract_zero(const ZmGrading& g) {
  PencilMember p;
  p.t = Cyc(0);
  p.algebra = filter_bracket(g, [&](int s) { return s <= g.m - 1; });
  return p;
}

PencilMember contract_infty(const ZmGrading& g) {
  PencilMember p;
  p.at_infinity = true;
  p.algebra = filter_bracket(g, [&](int s) { return s >= g.m; });
  p.weights.resize(g.algebra.dim);
  for (int i = 0; i < g.algebra.dim; ++i)
    p.weights[i] = g.degree[i] == 0 ? g.m : g.m - g.degree[i];
  return p;
}

PencilMember pencilmember_impl(const ZmGrading& g, const Cyc& t) {
  PencilMember p;
  p.t = t;
  p.algebra = filter_bracket(g, [&](int s) { return s <= g.m - 1; });
  for (const auto& [key, sv] : g.algebra.structure) {
    auto [i, j] = key;
    if (g.degree[i] + g.degree[j] >= g.m)
      for (const auto& [k, c] : sv) p.algebra.set_constant(i, j, k, t * c);
  }
  return p;
}

PencilMember pencil_member(const ZmGrading& g, const Cyc& t) { return pencilmember_impl(g, t); }

bool compatibility_check(const LieAlgebra& b0, const LieAlgebra& binf) {
  if (b0.dim != binf.dim) throw std::invalid_argument("compatibility_check: dimension mismatch");
  if (!jacobi_check(b0).ok || !jacobi_check(binf).ok) return false;
  int n = b0.dim;
  auto basis_vec = [n](int i) {
    std::vector<Cyc> v(n, Cyc(0));
    v[i] = Cyc(1);
    return v;
  };
  std::vector<Cyc> zero(n, Cyc(0));
  auto add = [n](std::vector<Cyc>& acc, const std::vector<Cyc>& v) {
    for (int i = 0; i < n; ++i) acc[i] += v[i];
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        auto x = basis_vec(i), y = basis_vec(j), z = basis_vec(k);
        std::vector<Cyc> acc(n, Cyc(0));
        // Mixed Jacobiator of a*b0 + b*binf, coefficient of ab.
        add(acc, binf.bracket(b0.bracket(x, y), z));
        add(acc, binf.bracket(b0.bracket(y, z), x));
        add(acc, binf.bracket(b0.bracket(z, x), y));
        add(acc, b0.bracket(binf.bracket(x, y), z));
        add(acc, b0.bracket(binf.bracket(y, z), x));
        add(acc, b0.bracket(binf.bracket(z, x), y));
        if (acc != zero) return false;
      }
  return true;
}

PhiContraction phi_contraction(const LieAlgebra& a, const std::vector<int>& weights) {
  if (static_cast<int>(weights.size()) != a.dim)
    throw std::invalid_argument("phi_contraction: weight count");
  PhiContraction out;
  out.algebra.dim = a.dim;
  out.algebra.labels = a.labels;
  for (const auto& [key, sv] : a.structure) {
    auto [i, j] = key;
    int target = weights[i] + weights[j];
    for (const auto& [k, c] : sv) {
      if (weights[k] > target) {
        out.exists = false;
        out.i = i;
        out.j = j;
        return out;
      }
      if (weights[k] == target) out.algebra.set_constant(i, j, k, c);
    }
  }
  return out;
}

SemidirectAlgebra semidirect_tilde(const ZmGrading& g) {
  const LieAlgebra& q = g.algebra;
  std::vector<int> comp0 = g.component(0);
  int r = static_cast<int>(comp0.size());
  int m = g.m;

  SemidirectAlgebra sd;
  sd.m = m;
  sd.parts.assign(m, {});

  // Layout: g0^d, then g_{m-1}, ..., g_1, then g0^ab.
  std::vector<int> from;  // new index -> grading index
  LieAlgebra& t = sd.algebra;
  for (int a = 0; a < r; ++a) {
    sd.g0d.push_back(static_cast<int>(from.size()));
    sd.tilde_phi_weight.push_back(0);
    t.labels.push_back(q.labels[comp0[a]] + "~d");
    from.push_back(comp0[a]);
  }
  std::vector<int> part_of(q.dim, -1);  // grading index -> new index (nonzero degrees)
  for (int d = m - 1; d >= 1; --d)
    for (int b : g.component(d)) {
      int ni = static_cast<int>(from.size());
      sd.parts[d].push_back(ni);
      part_of[b] = ni;
      sd.tilde_phi_weight.push_back(m - d);
      t.labels.push_back(q.labels[b]);
      from.push_back(b);
    }
  std::vector<int> ab_of(q.dim, -1);  // grading index (degree 0) -> ab index
  for (int a = 0; a < r; ++a) {
    int ni = static_cast<int>(from.size());
    sd.g0ab.push_back(ni);
    ab_of[comp0[a]] = ni;
    sd.tilde_phi_weight.push_back(m);
    t.labels.push_back(q.labels[comp0[a]] + "~ab");
    from.push_back(comp0[a]);
  }
  std::vector<int> d_of(q.dim, -1);
  for (int a = 0; a < r; ++a) d_of[comp0[a]] = a;
  t.dim = static_cast<int>(from.size());

  auto kind = [&](int ni) {
    if (ni < r) return 0;              // g0^d
    if (ni >= t.dim - r) return 2;     // g0^ab
    return 1;                          // g_d, d >= 1
  };

  for (int i = 0; i < t.dim; ++i)
    for (int j = i + 1; j < t.dim; ++j) {
      int ki = kind(i), kj = kind(j);
      if (ki == 2 || (ki == 1 && kj == 2)) continue;  // g0^ab is central in g_(inf)
      SparseVec orig = q.bracket_basis(from[i], from[j]);
      if (ki == 0 && kj == 0) {
        for (const auto& [k, c] : orig) t.set_constant(i, j, d_of[k], c);
      } else if (ki == 0 && kj == 1) {
        for (const auto& [k, c] : orig) t.set_constant(i, j, part_of[k], c);
      } else if (ki == 0 && kj == 2) {
        for (const auto& [k, c] : orig) t.set_constant(i, j, ab_of[k], c);
      } else {  // both inside the g_(inf) nilpotent part
        int ds = g.degree[from[i]] + g.degree[from[j]];
        if (ds < m) continue;
        for (const auto& [k, c] : orig)
          t.set_constant(i, j, g.degree[k] == 0 ? ab_of[k] : part_of[k], c);
      }
    }
  return sd;
}

SemidirectAlgebra tilde_g_for_chain(const LieAlgebra& h, int copies, const Automorphism& inner) {
  LieAlgebra hpow = nth_power(h, copies);
  Automorphism au = cyclic_permutation_automorphism(hpow, copies, inner);
  ZmGrading g = eigenspace_grading(hpow, au);
  SemidirectAlgebra sd = semidirect_tilde(g);
  // Identify g_d with h_{d mod inner.order} tbar^{m-d}.
  int mt = inner.order;
  int m = sd.m;
  auto relabel = [&](int ni, int d, int count) {
    std::ostringstream os;
    if (sd.tilde_phi_weight[ni] == 0)
      os << "h" << 0 << "~d_" << count;
    else
      os << "h" << (d % mt) << ".t" << (m - d) << "_" << count;
    sd.algebra.labels[ni] = os.str();
  };
  for (size_t a = 0; a < sd.g0d.size(); ++a) relabel(sd.g0d[a], 0, static_cast<int>(a));
  for (int d = 1; d < m; ++d)
    for (size_t a = 0; a < sd.parts[d].size(); ++a)
      relabel(sd.parts[d][a], d, static_cast<int>(a));
  for (size_t a = 0; a < sd.g0ab.size(); ++a) relabel(sd.g0ab[a], 0, static_cast<int>(a));
  return sd;
}

}  // namespace liepencil
