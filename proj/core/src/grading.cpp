#include "liepencil/grading.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace liepencil {

namespace {

std::vector<Cyc> matrix_column(const Mat& m, int j) {
  std::vector<Cyc> c(m.rows());
  for (int i = 0; i < m.rows(); ++i) c[i] = m(i, j);
  return c;
}

// Minimal k <= bound with m^k = id, or 0 if none.
int matrix_order(const Mat& m, int bound) {
  Mat id = Mat::identity(m.rows());
  Mat p = m;
  for (int k = 1; k <= bound; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  return 0;
}

}  // namespace

Automorphism make_automorphism(const LieAlgebra& a, Mat theta, int order_bound) {
  if (theta.rows() != a.dim || theta.cols() != a.dim)
    throw std::invalid_argument("make_automorphism: shape mismatch");
  for (int i = 0; i < a.dim; ++i)
    for (int j = i + 1; j < a.dim; ++j) {
      std::vector<Cyc> br(a.dim, Cyc(0));
      for (const auto& [k, c] : a.bracket_basis(i, j)) br[k] = c;
      std::vector<Cyc> lhs = mat_vec(theta, br);
      std::vector<Cyc> rhs = a.bracket(matrix_column(theta, i), matrix_column(theta, j));
      if (lhs != rhs) throw std::invalid_argument("make_automorphism: bracket not preserved");
    }
  int ord = matrix_order(theta, order_bound);
  if (ord == 0) throw std::invalid_argument("make_automorphism: order exceeds bound");
  return Automorphism{std::move(theta), ord};
}

std::vector<int> ZmGrading::component_dims() const {
  std::vector<int> dims(m, 0);
  for (int d : degree) ++dims[d];
  return dims;
}

std::vector<int> ZmGrading::component(int d) const {
  std::vector<int> idx;
  for (int i = 0; i < algebra.dim; ++i)
    if (degree[i] == d) idx.push_back(i);
  return idx;
}

ZmGrading eigenspace_grading(const LieAlgebra& a, const Automorphism& t) {
  int m = t.order;
  Cyc zeta = Cyc::zeta(m);
  std::vector<std::vector<Cyc>> columns;
  std::vector<int> degree;
  std::vector<std::string> labels;
  for (int d = 0; d < m; ++d) {
    Mat shifted = t.matrix - zeta.pow(d) * Mat::identity(a.dim);
    auto ker = kernel_basis(shifted);
    for (size_t k = 0; k < ker.size(); ++k) {
      columns.push_back(ker[k]);
      degree.push_back(d);
      std::ostringstream os;
      os << "q" << d << "_" << k;
      labels.push_back(os.str());
    }
  }
  if (static_cast<int>(columns.size()) != a.dim)
    throw std::domain_error("eigenspace_grading: eigenspaces do not fill the algebra");
  Mat p(a.dim, a.dim);
  for (int j = 0; j < a.dim; ++j)
    for (int i = 0; i < a.dim; ++i) p(i, j) = columns[j][i];
  ZmGrading g;
  g.m = m;
  g.degree = std::move(degree);
  g.change_of_basis = p;
  g.algebra = change_basis(a, p, labels);
  return g;
}

ZmGrading trivial_grading(const LieAlgebra& a) {
  ZmGrading g;
  g.m = 1;
  g.algebra = a;
  g.degree.assign(a.dim, 0);
  g.change_of_basis = Mat::identity(a.dim);
  return g;
}

ZmGrading grading_from_kac_inner(const KacDiagramInner& d) {
  LieAlgebra a = build_classical(d.series, d.rank);
  const auto& labels = d.labels;
  if (static_cast<int>(labels.size()) != d.rank + 1)
    throw std::invalid_argument("kac labels: need rank+1 entries");
  int g = 0;
  bool any = false;
  for (int p : labels) {
    if (p < 0) throw std::invalid_argument("kac labels: negative entry");
    if (p > 0) any = true;
    g = std::gcd(g, p);
  }
  if (!any) throw std::invalid_argument("kac labels: all zero");
  if (g != 1) throw std::invalid_argument("kac labels: gcd must be 1");

  const auto& mats = *a.realization;
  auto is_diagonal = [](const Mat& m) {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (i != j && !m(i, j).is_zero()) return false;
    return true;
  };
  auto is_strictly_upper = [](const Mat& m) {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j <= i && j < m.cols(); ++j)
        if (!m(i, j).is_zero()) return false;
    return true;
  };

  std::vector<int> cartan;
  for (int b = 0; b < a.dim; ++b)
    if (is_diagonal(mats[b])) cartan.push_back(b);
  int l = static_cast<int>(cartan.size());
  if (l != d.rank) throw std::domain_error("kac grading: Cartan detection failed");

  // Root of each non-Cartan basis vector, as the tuple of eigenvalues of
  // ad(cartan[0..l-1]).
  std::map<int, std::vector<Rational>> root;
  for (int b = 0; b < a.dim; ++b) {
    if (std::find(cartan.begin(), cartan.end(), b) != cartan.end()) continue;
    std::vector<Rational> alpha(l, Rational(0));
    for (int k = 0; k < l; ++k) {
      SparseVec sv = a.bracket_basis(cartan[k], b);
      if (sv.empty()) continue;
      if (sv.size() != 1 || sv[0].first != b)
        throw std::domain_error("kac grading: basis vector is not a root vector");
      alpha[k] = sv[0].second.rational_value();
    }
    root[b] = std::move(alpha);
  }

  std::map<std::vector<Rational>, int> positive;  // root -> basis index
  for (const auto& [b, alpha] : root)
    if (is_strictly_upper(mats[b])) positive[alpha] = b;

  // Simple roots: positive roots that are not the sum of two positive roots.
  std::vector<int> simple;
  for (const auto& [alpha, b] : positive) {
    bool decomposable = false;
    for (const auto& [beta, b2] : positive) {
      std::vector<Rational> rest(l);
      for (int k = 0; k < l; ++k) rest[k] = alpha[k] - beta[k];
      if (positive.count(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(b);
  }
  if (static_cast<int>(simple.size()) != l)
    throw std::domain_error("kac grading: simple root detection failed");

  // Canonical node order: sort by the position of the first nonzero entry of
  // the root vector's matrix. Matches the usual numbering for all four series.
  auto first_entry = [&](int b) {
    const Mat& m = mats[b];
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero()) return std::pair<int, int>{i, j};
    return std::pair<int, int>{m.rows(), m.cols()};
  };
  std::sort(simple.begin(), simple.end(),
            [&](int x, int y) { return first_entry(x) < first_entry(y); });

  Mat s(l, l);
  for (int j = 0; j < l; ++j)
    for (int i = 0; i < l; ++i) s(i, j) = Cyc(root[simple[j]][i]);
  Mat sinv = inverse(s);

  auto coords = [&](const std::vector<Rational>& alpha) {
    std::vector<Cyc> v(l);
    for (int i = 0; i < l; ++i) v[i] = Cyc(alpha[i]);
    std::vector<Cyc> c = mat_vec(sinv, v);
    std::vector<long> out(l);
    for (int i = 0; i < l; ++i) {
      Rational r = c[i].rational_value();
      if (r.get_den() != 1) throw std::domain_error("kac grading: non-integral root coordinate");
      out[i] = r.get_num().get_si();
    }
    return out;
  };

  // Highest root = the positive root with maximal coefficient sum; its
  // coefficients are the marks.
  std::vector<long> marks;
  long best = -1;
  for (const auto& [alpha, b] : positive) {
    auto c = coords(alpha);
    long h = std::accumulate(c.begin(), c.end(), 0L);
    if (h > best) {
      best = h;
      marks = c;
    }
  }

  long m = labels[0];
  for (int i = 0; i < l; ++i) m += marks[i] * labels[i + 1];
  if (m < 2) throw std::domain_error("kac grading: order m must be at least 2");

  std::vector<int> degree(a.dim, 0);
  for (const auto& [b, alpha] : root) {
    auto c = coords(alpha);
    long deg = 0;
    for (int i = 0; i < l; ++i) deg += c[i] * labels[i + 1];
    degree[b] = static_cast<int>(((deg % m) + m) % m);
  }

  // Permute the basis so the components come out contiguous and ordered.
  std::vector<int> perm(a.dim);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int x, int y) { return degree[x] < degree[y]; });
  Mat p(a.dim, a.dim);
  std::vector<std::string> new_labels(a.dim);
  std::vector<int> new_degree(a.dim);
  for (int j = 0; j < a.dim; ++j) {
    p(perm[j], j) = Cyc(1);
    new_labels[j] = a.labels[perm[j]];
    new_degree[j] = degree[perm[j]];
  }

  ZmGrading out;
  out.m = static_cast<int>(m);
  out.degree = std::move(new_degree);
  out.change_of_basis = p;
  out.algebra = change_basis(a, p, new_labels);
  return out;
}

Automorphism outer_sl_automorphism(int n, const Mat& k, int order_bound) {
  return outer_sl_automorphism(n, k, Mat::identity(n), order_bound);
}

Automorphism outer_sl_automorphism(int n, const Mat& k, const Mat& d, int order_bound) {
  LieAlgebra a = build_classical(Series::A, n - 1);
  Mat kinv = inverse(k);
  Mat dinv = inverse(d);
  const auto& mats = *a.realization;
  Mat theta(a.dim, a.dim);
  for (int j = 0; j < a.dim; ++j) {
    Mat img = d * (Cyc(-1) * (k * mats[j].transpose() * kinv)) * dinv;
    std::vector<Cyc> c = matrix_coordinates(a, img);
    for (int i = 0; i < a.dim; ++i) theta(i, j) = c[i];
  }
  return make_automorphism(a, theta, order_bound);
}

Automorphism cyclic_permutation_automorphism(const LieAlgebra& hpow, int copies,
                                             const Automorphism& inner) {
  if (copies < 1 || hpow.dim % copies != 0)
    throw std::invalid_argument("cyclic automorphism: dimension not divisible by copies");
  int hd = hpow.dim / copies;
  if (inner.matrix.rows() != hd)
    throw std::invalid_argument("cyclic automorphism: inner automorphism has wrong size");
  if (copies == 1) return make_automorphism(hpow, inner.matrix, inner.order);
  Mat theta(hpow.dim, hpow.dim);
  // Component 1 receives x_n, component 2 receives inner(x_1), component
  // k > 2 receives x_{k-1}.
  for (int i = 0; i < hd; ++i) {
    theta(i, (copies - 1) * hd + i) = Cyc(1);
    for (int j = 0; j < hd; ++j) theta(hd + i, j) = inner.matrix(i, j);
  }
  for (int c = 2; c < copies; ++c)
    for (int i = 0; i < hd; ++i) theta(c * hd + i, (c - 1) * hd + i) = Cyc(1);
  return make_automorphism(hpow, theta, copies * inner.order);
}

GradingViolation validate_grading(const ZmGrading& g) {
  const LieAlgebra& a = g.algebra;
  for (int i = 0; i < a.dim; ++i)
    for (int j = i + 1; j < a.dim; ++j) {
      int want = (g.degree[i] + g.degree[j]) % g.m;
      for (const auto& [k, c] : a.bracket_basis(i, j))
        if (g.degree[k] != want) return GradingViolation{false, i, j};
    }
  return GradingViolation{};
}

Subalgebra basis_subalgebra(const LieAlgebra& a, const std::vector<int>& indices) {
  std::vector<int> inv(a.dim, -1);
  for (size_t s = 0; s < indices.size(); ++s) inv[indices[s]] = static_cast<int>(s);
  Subalgebra sub;
  sub.indices = indices;
  sub.algebra.dim = static_cast<int>(indices.size());
  for (int i : indices) sub.algebra.labels.push_back(a.labels.empty() ? "" : a.labels[i]);
  if (a.has_realization()) {
    sub.algebra.realization.emplace();
    for (int i : indices) sub.algebra.realization->push_back((*a.realization)[i]);
  }
  for (size_t si = 0; si < indices.size(); ++si)
    for (size_t sj = si + 1; sj < indices.size(); ++sj)
      for (const auto& [k, c] : a.bracket_basis(indices[si], indices[sj])) {
        if (inv[k] < 0)
          throw std::domain_error("basis_subalgebra: span not closed under bracket");
        sub.algebra.set_constant(static_cast<int>(si), static_cast<int>(sj), inv[k], c);
      }
  return sub;
}

Subalgebra fixed_subalgebra(const ZmGrading& g) {
  return basis_subalgebra(g.algebra, g.component(0));
}

Mat grading_automorphism_matrix(const ZmGrading& g) {
  int n = g.algebra.dim;
  Cyc zeta = Cyc::zeta(g.m);
  Mat d(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = zeta.pow(g.degree[i]);
  return g.change_of_basis * d * inverse(g.change_of_basis);
}

}  // namespace liepencil
