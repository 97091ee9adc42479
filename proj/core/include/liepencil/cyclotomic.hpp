#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liepencil/rational.hpp"

namespace liepencil {

/// Coefficients of the m-th cyclotomic polynomial Phi_m, constant term first,
/// monic. Computed by dividing x^m - 1 by the Phi_d of all proper divisors d.
std::vector<Rational> cyclotomic_polynomial(int m);

/// Euler phi, which is also deg Phi_m.
int euler_phi(int m);

/// Element of the cyclotomic field Q(zeta_m), represented by a coefficient
/// vector of length deg Phi_m (the class of sum c_i z^i modulo Phi_m).
/// Order 1 elements are plain rationals. Mixed-order arithmetic promotes both
/// operands into Q(zeta_lcm) via z_m = z_lcm^(lcm/m).
///
/// Values are immutable in spirit: every operation returns a fresh value and
/// there is no shared mutable state, so Cyc is safe to use across threads.
class Cyc {
 public:
  Cyc() : order_(1), coeffs_(1) {}
  Cyc(const Rational& r) : order_(1), coeffs_{r} {}
  Cyc(long n) : order_(1), coeffs_{Rational(n)} {}
  Cyc(int n) : Cyc(static_cast<long>(n)) {}

  /// Class of the given coefficient vector (any length) in Q(zeta_m).
  Cyc(int order, std::vector<Rational> coeffs);

  /// zeta(m): the class of z in Q(zeta_m); a primitive m-th root of unity.
  static Cyc zeta(int m);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The rational value; throws if not rational.
  Rational rational_value() const;

  /// Same element viewed in Q(zeta_M); requires order() | M.
  Cyc to_order(int M) const;
  /// Drops to the smallest representation we track: order 1 when the element
  /// happens to be rational. (No general subfield descent.)
  Cyc simplified() const;

  Cyc operator-() const;
  Cyc inverse() const;  // throws std::domain_error on zero
  Cyc pow(long e) const;

  friend Cyc operator+(const Cyc& a, const Cyc& b);
  friend Cyc operator-(const Cyc& a, const Cyc& b);
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  friend Cyc operator/(const Cyc& a, const Cyc& b);
  friend bool operator==(const Cyc& a, const Cyc& b);
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  Cyc& operator+=(const Cyc& b) { return *this = *this + b; }
  Cyc& operator-=(const Cyc& b) { return *this = *this - b; }
  Cyc& operator*=(const Cyc& b) { return *this = *this * b; }
  Cyc& operator/=(const Cyc& b) { return *this = *this / b; }

  /// Multiplicative order, or nullopt if not a root of unity of order <= bound.
  std::optional<int> multiplicative_order(int bound = 64) const;

  /// "a0 + a1*z + a2*z^2" with rational coefficients rendered as "p/q".
  std::string str() const;

 private:
  int order_;
  std::vector<Rational> coeffs_;  // length euler_phi(order_)
};

/// Parses the rendering produced by Cyc::str(). `order` supplies the field
/// the symbol z lives in; a plain rational parses at any order.
std::optional<Cyc> parse_cyc(std::string_view s, int order);

}  // namespace liepencil
