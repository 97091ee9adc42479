#include "liepencil/liealg.hpp"

#include <sstream>
#include <stdexcept>

namespace liepencil {

namespace {

SparseVec to_sparse(const std::vector<Cyc>& v) {
  SparseVec s;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i].simplified());
  return s;
}

void add_scaled(std::vector<Cyc>& acc, const SparseVec& s, const Cyc& f) {
  for (const auto& [k, c] : s) acc[k] += f * c;
}

}  // namespace

SparseVec LieAlgebra::bracket_basis(int i, int j) const {
  if (i == j) return {};
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = structure.find({i, j});
  if (it == structure.end()) return {};
  if (!flip) return it->second;
  SparseVec neg = it->second;
  for (auto& [k, c] : neg) c = -c;
  return neg;
}

std::vector<Cyc> LieAlgebra::bracket(const std::vector<Cyc>& x, const std::vector<Cyc>& y) const {
  if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
    throw std::invalid_argument("bracket: dimension mismatch");
  std::vector<Cyc> r(dim, Cyc(0));
  for (const auto& [key, vec] : structure) {
    auto [i, j] = key;
    Cyc f = x[i] * y[j] - x[j] * y[i];
    if (!f.is_zero()) add_scaled(r, vec, f);
  }
  return r;
}

void LieAlgebra::set_constant(int i, int j, int k, const Cyc& c) {
  if (i == j) throw std::invalid_argument("set_constant: i == j");
  Cyc v = c;
  if (i > j) {
    std::swap(i, j);
    v = -v;
  }
  if (v.is_zero()) return;
  auto& vec = structure[{i, j}];
  for (auto it = vec.begin(); it != vec.end(); ++it)
    if (it->first == k) {
      it->second += v;
      if (it->second.is_zero()) {
        vec.erase(it);
        if (vec.empty()) structure.erase({i, j});
      }
      return;
    }
  vec.emplace_back(k, v);
}

namespace {

// Coordinates of vec(x) in the column space of [vec(M_0) ... vec(M_{d-1})].
std::vector<Cyc> coords_in_span(const std::vector<Mat>& basis, const Mat& x) {
  int n = basis[0].rows(), d = static_cast<int>(basis.size());
  Mat sys(n * n, d);
  std::vector<Cyc> rhs(n * n, Cyc(0));
  for (int b = 0; b < d; ++b)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) sys(r * n + c, b) = basis[b](r, c);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) rhs[r * n + c] = x(r, c);
  auto sol = solve(std::move(sys), std::move(rhs));
  if (!sol) throw std::domain_error("matrix not in the span of the basis");
  return *sol;
}

// Fills structure constants from matrix commutators of the realization.
void structure_from_realization(LieAlgebra& a) {
  const auto& mats = *a.realization;
  for (int i = 0; i < a.dim; ++i)
    for (int j = i + 1; j < a.dim; ++j) {
      Mat comm = mats[i] * mats[j] - mats[j] * mats[i];
      if (comm.is_zero()) continue;
      auto coords = coords_in_span(mats, comm);
      for (int k = 0; k < a.dim; ++k)
        if (!coords[k].is_zero()) a.set_constant(i, j, k, coords[k].simplified());
    }
}

std::string idx_label(const char* stem, int i, int j) {
  std::ostringstream os;
  os << stem << i << "," << j;
  return os.str();
}

LieAlgebra build_sl(int n) {
  LieAlgebra a;
  a.dim = n * n - 1;
  std::vector<Mat> mats;
  for (int i = 1; i < n; ++i) {
    Mat h(n, n);
    h(i - 1, i - 1) = Cyc(1);
    h(i, i) = Cyc(-1);
    mats.push_back(std::move(h));
    a.labels.push_back("h" + std::to_string(i));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      Mat e(n, n);
      e(i - 1, j - 1) = Cyc(1);
      mats.push_back(std::move(e));
      a.labels.push_back(idx_label("E", i, j));
    }
  a.realization = std::move(mats);
  a.summands = {{Series::A, n - 1, 0, a.dim, 0, n}};
  structure_from_realization(a);
  return a;
}

// so_N for the symmetric anti-diagonal form: X = -J X^T J, J = antidiag(1..1).
LieAlgebra build_so(int N, Series tag, int rank) {
  int n = N / 2;  // number of Cartan generators (N = 2n or 2n+1)
  LieAlgebra a;
  std::vector<Mat> mats;
  auto conj = [N](int i) { return N + 1 - i; };
  for (int k = 1; k <= n; ++k) {
    Mat h(N, N);
    h(k - 1, k - 1) = Cyc(1);
    h(conj(k) - 1, conj(k) - 1) = Cyc(-1);
    mats.push_back(std::move(h));
    a.labels.push_back("h" + std::to_string(k));
  }
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (i == j || i + j == N + 1) continue;
      int ri = conj(j), rj = conj(i);  // F_{ri,rj} = -F_{ij}
      if (std::make_pair(ri, rj) < std::make_pair(i, j)) continue;
      Mat f(N, N);
      f(i - 1, j - 1) = Cyc(1);
      f(ri - 1, rj - 1) = Cyc(-1);
      mats.push_back(std::move(f));
      a.labels.push_back(idx_label("F", i, j));
    }
  a.dim = static_cast<int>(mats.size());
  a.realization = std::move(mats);
  a.summands = {{tag, rank, 0, a.dim, 0, N}};
  structure_from_realization(a);
  return a;
}

// sp_2n for the anti-diagonal symplectic form J with J(i, 2n+1-i) = +-1.
LieAlgebra build_sp(int n) {
  int N = 2 * n;
  LieAlgebra a;
  std::vector<Mat> mats;
  auto conj = [N](int i) { return N + 1 - i; };
  auto sgn = [n](int i) { return i <= n ? 1 : -1; };
  for (int k = 1; k <= n; ++k) {
    Mat h(N, N);
    h(k - 1, k - 1) = Cyc(1);
    h(conj(k) - 1, conj(k) - 1) = Cyc(-1);
    mats.push_back(std::move(h));
    a.labels.push_back("h" + std::to_string(k));
  }
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (i == j) continue;
      int ri = conj(j), rj = conj(i);
      int sign = sgn(conj(i)) * sgn(j);  // X_{ij} = sign * X_{ri,rj}
      if (std::make_pair(i, j) == std::make_pair(ri, rj)) {
        Mat g(N, N);
        g(i - 1, j - 1) = Cyc(1);
        mats.push_back(std::move(g));
        a.labels.push_back(idx_label("G", i, j));
        continue;
      }
      if (std::make_pair(ri, rj) < std::make_pair(i, j)) continue;
      Mat g(N, N);
      g(i - 1, j - 1) = Cyc(1);
      g(ri - 1, rj - 1) = Cyc(sign);
      mats.push_back(std::move(g));
      a.labels.push_back(idx_label("G", i, j));
    }
  a.dim = static_cast<int>(mats.size());
  a.realization = std::move(mats);
  a.summands = {{Series::C, n, 0, a.dim, 0, N}};
  structure_from_realization(a);
  return a;
}

}  // namespace

LieAlgebra build_classical(Series series, int rank) {
  if (rank < 1) throw std::invalid_argument("build_classical: rank must be >= 1");
  switch (series) {
    case Series::A:
      return build_sl(rank + 1);
    case Series::B:
      return build_so(2 * rank + 1, Series::B, rank);
    case Series::C:
      return build_sp(rank);
    case Series::D:
      if (rank < 2) throw std::invalid_argument("build_classical: D requires rank >= 2");
      return build_so(2 * rank, Series::D, rank);
  }
  throw std::invalid_argument("build_classical: unknown series");
}

std::optional<Series> parse_series(char c) {
  switch (c) {
    case 'A':
      return Series::A;
    case 'B':
      return Series::B;
    case 'C':
      return Series::C;
    case 'D':
      return Series::D;
    default:
      return std::nullopt;
  }
}

JacobiResult jacobi_check(const LieAlgebra& a) {
  for (int i = 0; i < a.dim; ++i)
    for (int j = i + 1; j < a.dim; ++j)
      for (int k = j + 1; k < a.dim; ++k) {
        std::vector<Cyc> acc(a.dim, Cyc(0));
        auto term = [&](int x, int y, int z) {
          for (const auto& [m, c] : a.bracket_basis(y, z))
            add_scaled(acc, a.bracket_basis(x, m), c);
        };
        term(i, j, k);
        term(j, k, i);
        term(k, i, j);
        for (const auto& v : acc)
          if (!v.is_zero()) return {false, i, j, k};
      }
  return {};
}

Mat trace_form(const LieAlgebra& a) {
  if (!a.realization) throw std::domain_error("trace_form: no realization");
  const auto& mats = *a.realization;
  Mat g(a.dim, a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = i; j < a.dim; ++j) {
      Cyc t = (mats[i] * mats[j]).trace();
      g(i, j) = t;
      g(j, i) = t;
    }
  return g;
}

bool form_is_invariant(const LieAlgebra& a, const Mat& gram) {
  for (int x = 0; x < a.dim; ++x)
    for (int y = 0; y < a.dim; ++y)
      for (int z = y; z < a.dim; ++z) {
        Cyc acc(0);
        for (const auto& [k, c] : a.bracket_basis(x, y)) acc += c * gram(k, z);
        for (const auto& [k, c] : a.bracket_basis(x, z)) acc += c * gram(y, k);
        if (!acc.is_zero()) return false;
      }
  return true;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  LieAlgebra r;
  r.dim = a.dim + b.dim;
  r.structure = a.structure;
  for (const auto& [key, vec] : b.structure) {
    SparseVec shifted = vec;
    for (auto& [k, c] : shifted) k += a.dim;
    r.structure[{key.first + a.dim, key.second + a.dim}] = std::move(shifted);
  }
  for (const auto& l : a.labels) r.labels.push_back(l + "#1");
  for (const auto& l : b.labels) r.labels.push_back(l + "#2");
  if (a.realization && b.realization) {
    int na = (*a.realization)[0].rows(), nb = (*b.realization)[0].rows();
    std::vector<Mat> mats;
    for (const auto& m : *a.realization) {
      Mat big(na + nb, na + nb);
      for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) big(i, j) = m(i, j);
      mats.push_back(std::move(big));
    }
    for (const auto& m : *b.realization) {
      Mat big(na + nb, na + nb);
      for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) big(na + i, na + j) = m(i, j);
      mats.push_back(std::move(big));
    }
    r.realization = std::move(mats);
    r.summands = a.summands;
    for (auto s : b.summands) {
      s.offset += a.dim;
      s.mat_offset += na;
      r.summands.push_back(s);
    }
  }
  return r;
}

LieAlgebra nth_power(const LieAlgebra& h, int n) {
  if (n < 1) throw std::invalid_argument("nth_power: n must be >= 1");
  LieAlgebra r = h;
  for (int i = 1; i < n; ++i) r = direct_sum(r, h);
  return r;
}

namespace {

// Dimension of the span of the given vectors.
int span_dim(const std::vector<std::vector<Cyc>>& vecs, int dim) {
  if (vecs.empty()) return 0;
  Mat m(static_cast<int>(vecs.size()), dim);
  for (int i = 0; i < static_cast<int>(vecs.size()); ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = vecs[i][j];
  return rank(std::move(m));
}

// Reduces a spanning set to a basis (rows of the echelon form).
std::vector<std::vector<Cyc>> span_basis(const std::vector<std::vector<Cyc>>& vecs, int dim) {
  std::vector<std::vector<Cyc>> basis;
  std::vector<std::vector<Cyc>> rows;  // echelonized so far
  for (const auto& v : vecs) {
    auto probe = rows;
    probe.push_back(v);
    if (span_dim(probe, dim) > static_cast<int>(rows.size())) {
      rows.push_back(v);
      basis.push_back(v);
    }
  }
  return basis;
}

}  // namespace

std::vector<int> lower_central_series(const LieAlgebra& a) {
  std::vector<int> dims{a.dim};
  std::vector<std::vector<Cyc>> current;
  for (int i = 0; i < a.dim; ++i) {
    std::vector<Cyc> e(a.dim, Cyc(0));
    e[i] = Cyc(1);
    current.push_back(std::move(e));
  }
  while (true) {
    std::vector<std::vector<Cyc>> next;
    for (int i = 0; i < a.dim; ++i) {
      std::vector<Cyc> e(a.dim, Cyc(0));
      e[i] = Cyc(1);
      for (const auto& v : current) {
        auto w = a.bracket(e, v);
        bool nz = false;
        for (const auto& c : w)
          if (!c.is_zero()) {
            nz = true;
            break;
          }
        if (nz) next.push_back(std::move(w));
      }
    }
    int d = span_dim(next, a.dim);
    if (d == dims.back()) break;
    dims.push_back(d);
    if (d == 0) break;
    current = span_basis(next, a.dim);
  }
  return dims;
}

LieAlgebra change_basis(const LieAlgebra& a, const Mat& p, std::vector<std::string> labels) {
  if (p.rows() != a.dim || p.cols() != a.dim) throw std::invalid_argument("change_basis: shape");
  Mat pinv = inverse(p);
  LieAlgebra r;
  r.dim = a.dim;
  r.summands = a.summands;
  r.labels = labels.empty() ? a.labels : std::move(labels);
  std::vector<std::vector<Cyc>> cols(a.dim, std::vector<Cyc>(a.dim));
  for (int j = 0; j < a.dim; ++j)
    for (int i = 0; i < a.dim; ++i) cols[j][i] = p(i, j);
  for (int i = 0; i < a.dim; ++i)
    for (int j = i + 1; j < a.dim; ++j) {
      auto old = a.bracket(cols[i], cols[j]);
      auto coords = mat_vec(pinv, old);
      for (int k = 0; k < a.dim; ++k)
        if (!coords[k].is_zero()) r.set_constant(i, j, k, coords[k].simplified());
    }
  if (a.realization) {
    std::vector<Mat> mats;
    int n = (*a.realization)[0].rows();
    for (int j = 0; j < a.dim; ++j) {
      Mat m(n, n);
      for (int k = 0; k < a.dim; ++k)
        if (!p(k, j).is_zero()) m = m + p(k, j) * (*a.realization)[k];
      mats.push_back(std::move(m));
    }
    r.realization = std::move(mats);
  }
  return r;
}

std::vector<Cyc> matrix_coordinates(const LieAlgebra& a, const Mat& x) {
  if (!a.realization) throw std::domain_error("matrix_coordinates: no realization");
  return coords_in_span(*a.realization, x);
}

std::optional<int> declared_rank(const LieAlgebra& a) {
  if (a.summands.empty()) return std::nullopt;
  int r = 0;
  for (const auto& s : a.summands) r += s.rank;
  return r;
}

}  // namespace liepencil
