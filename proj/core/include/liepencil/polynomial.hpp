#pragma once

#include <map>
#include <string>
#include <vector>

#include "liepencil/matrix.hpp"

namespace liepencil {

/// Exponent vector; length = number of variables.
using Monomial = std::vector<int>;

/// Sparse multivariate polynomial over Q(zeta). Terms are kept in lexicographic
/// monomial order (std::map), which doubles as the canonical serialization
/// order. Zero coefficients are never stored.
class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly variable(int nvars, int i);
  static Poly constant(int nvars, const Cyc& c);

  int nvars() const { return nvars_; }
  const std::map<Monomial, Cyc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * x^mono, dropping the term if the total cancels.
  void add_term(const Monomial& mono, const Cyc& c);

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Cyc& s, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }

  Poly pow(int e) const;
  Poly derivative(int var) const;
  Cyc evaluate(const std::vector<Cyc>& point) const;

  /// Substitutes x_i -> sum_j a(i, j) y_j; a is nvars x new_nvars.
  Poly substitute_linear(const Mat& a) const;

  int total_degree() const;  // -1 for the zero polynomial

  /// Canonical rendering, e.g. "(2) x0^2 x1 + (-1/3) x2". Optional variable
  /// names replace the default x<i>.
  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_ = 0;
  std::map<Monomial, Cyc> terms_;
};

/// Splits into weight-homogeneous components; the weight of a monomial is
/// sum over variables of weight * exponent. Components reassemble to the input.
std::map<int, Poly> weight_components(const Poly& p, const std::vector<int>& weights);

}  // namespace liepencil
