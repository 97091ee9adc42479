#include "liepencil/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace liepencil {

namespace {

// Dense polynomials over Q, constant term first, no trailing zeros.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Division with remainder; divisor must be nonzero.
void divmod(QPoly a, const QPoly& b, QPoly& quot, QPoly& rem) {
  quot.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    quot[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
    if (a.size() >= b.size() && !a.empty() && a.back() == 0) trim(a);
    if (a.empty()) break;
    if (a.size() < b.size()) break;
  }
  trim(quot);
  rem = std::move(a);
}

QPoly mod(QPoly a, const QPoly& b) {
  QPoly q, r;
  divmod(std::move(a), b, q, r);
  return r;
}

// Extended gcd over Q[x]: returns (g, u, v) with u*a + v*b = g, g monic.
void xgcd(QPoly a, QPoly b, QPoly& g, QPoly& u, QPoly& v) {
  QPoly u0{Rational(1)}, v0, u1, v1{Rational(1)};
  while (!b.empty()) {
    QPoly q, r;
    divmod(a, b, q, r);
    QPoly u2 = sub(u0, mul(q, u1));
    QPoly v2 = sub(v0, mul(q, v1));
    a = std::move(b);
    b = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (a.empty()) throw std::domain_error("xgcd of zero polynomials");
  Rational lead = a.back();
  for (auto& c : a) c /= lead;
  for (auto& c : u0) c /= lead;
  for (auto& c : v0) c /= lead;
  g = std::move(a);
  u = std::move(u0);
  v = std::move(v0);
}

const QPoly& cyclotomic_cached(int m) {
  static std::mutex mtx;
  static std::map<int, QPoly> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  // x^m - 1 divided by the product of Phi_d over proper divisors d of m.
  std::function<const QPoly&(int)> get = [&](int k) -> const QPoly& {
    auto found = cache.find(k);
    if (found != cache.end()) return found->second;
    QPoly num(k + 1);
    num[0] = -1;
    num[k] = 1;
    for (int d = 1; d < k; ++d) {
      if (k % d != 0) continue;
      QPoly q, r;
      divmod(std::move(num), get(d), q, r);
      if (!r.empty()) throw std::logic_error("cyclotomic division not exact");
      num = std::move(q);
    }
    return cache.emplace(k, std::move(num)).first->second;
  };
  return get(m);
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be >= 1");
  return cyclotomic_cached(m);
}

int euler_phi(int m) {
  int result = m, n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Cyc::Cyc(int order, std::vector<Rational> coeffs) : order_(order) {
  if (order < 1) throw std::invalid_argument("Cyc: order must be >= 1");
  const QPoly& phi = cyclotomic_cached(order);
  trim(coeffs);
  QPoly r = coeffs.size() >= phi.size() ? mod(std::move(coeffs), phi) : std::move(coeffs);
  r.resize(phi.size() - 1);
  coeffs_ = std::move(r);
}

Cyc Cyc::zeta(int m) {
  if (m < 1) throw std::invalid_argument("zeta: m must be >= 1");
  std::vector<Rational> c(2);
  c[1] = 1;
  return Cyc(m, std::move(c));
}

bool Cyc::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

bool Cyc::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational Cyc::rational_value() const {
  if (!is_rational()) throw std::domain_error("Cyc: not a rational value");
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

Cyc Cyc::to_order(int M) const {
  if (M == order_) return *this;
  if (M % order_ != 0) throw std::invalid_argument("Cyc::to_order: order must divide target");
  int stride = M / order_;
  std::vector<Rational> big(static_cast<size_t>(coeffs_.size()) * stride);
  for (size_t i = 0; i < coeffs_.size(); ++i) big[i * stride] = coeffs_[i];
  return Cyc(M, std::move(big));
}

Cyc Cyc::simplified() const {
  if (order_ > 1 && is_rational()) return Cyc(coeffs_[0]);
  return *this;
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {
int promote(const Cyc& a, const Cyc& b, Cyc& pa, Cyc& pb) {
  int M = std::lcm(a.order(), b.order());
  pa = a.to_order(M);
  pb = b.to_order(M);
  return M;
}
}  // namespace

Cyc operator+(const Cyc& a, const Cyc& b) {
  Cyc pa, pb;
  int M = promote(a, b, pa, pb);
  std::vector<Rational> c = pa.coeffs_;
  for (size_t i = 0; i < c.size(); ++i) c[i] += pb.coeffs_[i];
  return Cyc(M, std::move(c));
}

Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }

Cyc operator*(const Cyc& a, const Cyc& b) {
  Cyc pa, pb;
  int M = promote(a, b, pa, pb);
  QPoly x = pa.coeffs_, y = pb.coeffs_;
  trim(x);
  trim(y);
  return Cyc(M, mul(x, y));
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw std::domain_error("Cyc: division by zero");
  if (is_rational()) return Cyc(Rational(1) / coeffs_[0]).to_order(order_);
  QPoly a = coeffs_;
  trim(a);
  QPoly g, u, v;
  xgcd(a, cyclotomic_cached(order_), g, u, v);
  if (g.size() != 1) throw std::logic_error("Cyc: element not invertible mod Phi_m");
  // g == 1 after normalization, so u * this == 1.
  return Cyc(order_, std::move(u));
}

Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }

bool operator==(const Cyc& a, const Cyc& b) {
  Cyc pa, pb;
  promote(a, b, pa, pb);
  return pa.coeffs_ == pb.coeffs_;
}

Cyc Cyc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyc r(1), base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r.to_order(order_);
}

std::optional<int> Cyc::multiplicative_order(int bound) const {
  Cyc p = *this;
  for (int k = 1; k <= bound; ++k) {
    if (p == Cyc(1)) return k;
    p *= *this;
  }
  return std::nullopt;
}

std::string Cyc::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    Rational c = coeffs_[i];
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (i == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::optional<Rational> parse_rational(std::string_view s) {
  std::string t(s);
  std::erase_if(t, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (t.empty()) return std::nullopt;
  size_t pos = t.find('/');
  try {
    if (pos == std::string::npos) {
      return Rational(mpz_class(t), 1);
    }
    mpz_class num(t.substr(0, pos)), den(t.substr(pos + 1));
    if (den == 0) return std::nullopt;
    Rational r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::optional<Cyc> parse_cyc(std::string_view s, int order) {
  std::string t(s);
  std::erase_if(t, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (t.empty()) return std::nullopt;
  std::vector<Rational> coeffs;
  size_t i = 0;
  bool any = false;
  while (i < t.size()) {
    int sign = 1;
    if (t[i] == '+') {
      ++i;
    } else if (t[i] == '-') {
      sign = -1;
      ++i;
    }
    size_t j = i;
    while (j < t.size() && t[j] != '+' && t[j] != '-') ++j;
    std::string term = t.substr(i, j - i);
    if (term.empty()) return std::nullopt;
    size_t zpos = term.find('z');
    Rational coeff(1);
    long power = 0;
    if (zpos == std::string::npos) {
      auto r = parse_rational(term);
      if (!r) return std::nullopt;
      coeff = *r;
    } else {
      power = 1;
      std::string pre = term.substr(0, zpos);
      if (!pre.empty()) {
        if (pre.back() != '*') return std::nullopt;
        auto r = parse_rational(pre.substr(0, pre.size() - 1));
        if (!r) return std::nullopt;
        coeff = *r;
      }
      std::string post = term.substr(zpos + 1);
      if (!post.empty()) {
        if (post[0] != '^') return std::nullopt;
        try {
          power = std::stol(post.substr(1));
        } catch (...) {
          return std::nullopt;
        }
        if (power < 0) return std::nullopt;
      }
    }
    if (power >= static_cast<long>(coeffs.size())) coeffs.resize(power + 1);
    coeffs[power] += sign * coeff;
    any = true;
    i = j;
  }
  if (!any) return std::nullopt;
  return Cyc(order, std::move(coeffs));
}

}  // namespace liepencil
