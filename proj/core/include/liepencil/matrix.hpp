#pragma once

#include <initializer_list>
#include <vector>

#include "liepencil/cyclotomic.hpp"

namespace liepencil {

/// Dense matrix over Q(zeta). Everything here is exact; rank, kernel and
/// inverse go through Gaussian elimination in the field.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Mat identity(int n);
  static Mat from_rows(std::initializer_list<std::initializer_list<Cyc>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Cyc& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Cyc& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  Mat transpose() const;
  bool is_zero() const;

  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(const Cyc& s, const Mat& a);
  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  Mat pow(long e) const;
  Cyc trace() const;

 private:
  int rows_, cols_;
  std::vector<Cyc> a_;
};

int rank(Mat m);

/// Basis of the right kernel {x : m x = 0}, as columns.
std::vector<std::vector<Cyc>> kernel_basis(Mat m);

/// Inverse; throws std::domain_error if singular.
Mat inverse(const Mat& m);

/// One solution of m x = b; nullopt if inconsistent.
std::optional<std::vector<Cyc>> solve(Mat m, std::vector<Cyc> b);

std::vector<Cyc> mat_vec(const Mat& m, const std::vector<Cyc>& v);

}  // namespace liepencil
