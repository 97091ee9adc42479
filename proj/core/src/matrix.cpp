#include "liepencil/matrix.hpp"

#include <stdexcept>

namespace liepencil {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Cyc(1);
  return m;
}

Mat Mat::from_rows(std::initializer_list<std::initializer_list<Cyc>> rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  Mat m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw std::invalid_argument("ragged rows");
    int j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Mat +: shape");
  Mat r = a;
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Mat -: shape");
  Mat r = a;
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Mat *: shape");
  Mat r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Cyc& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b(k, j).is_zero()) continue;
        r(i, j) += aik * b(k, j);
      }
    }
  return r;
}

Mat operator*(const Cyc& s, const Mat& a) {
  Mat r = a;
  for (auto& x : r.a_) x *= s;
  return r;
}

bool operator==(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (size_t i = 0; i < a.a_.size(); ++i)
    if (a.a_[i] != b.a_[i]) return false;
  return true;
}

Mat Mat::pow(long e) const {
  if (rows_ != cols_) throw std::invalid_argument("Mat::pow: square only");
  Mat r = identity(rows_), base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Cyc Mat::trace() const {
  Cyc t(0);
  for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
  return t;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<int> echelon(Mat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!m(r, col).is_zero()) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    Cyc inv = m(row, col).inverse();
    for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Cyc f = m(r, col);
      for (int c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(Mat m) { return static_cast<int>(echelon(m).size()); }

std::vector<std::vector<Cyc>> kernel_basis(Mat m) {
  int n = m.cols();
  std::vector<int> pivots = echelon(m);
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Cyc>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Cyc> v(n, Cyc(0));
    v[free] = Cyc(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: square only");
  int n = m.rows();
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Cyc(1);
  }
  auto pivots = echelon(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
    throw std::domain_error("inverse: singular matrix");
  Mat r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
  return r;
}

std::optional<std::vector<Cyc>> solve(Mat m, std::vector<Cyc> b) {
  if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve: shape");
  int n = m.cols();
  Mat aug(m.rows(), n + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  auto pivots = echelon(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;  // inconsistent
  std::vector<Cyc> x(n, Cyc(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(static_cast<int>(r), n);
  return x;
}

std::vector<Cyc> mat_vec(const Mat& m, const std::vector<Cyc>& v) {
  if (static_cast<int>(v.size()) != m.cols()) throw std::invalid_argument("mat_vec: shape");
  std::vector<Cyc> r(m.rows(), Cyc(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) r[i] += m(i, j) * v[j];
  return r;
}

}  // namespace liepencil
