#include "liepencil/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace liepencil {

Poly Poly::variable(int nvars, int i) {
  Poly p(nvars);
  Monomial m(nvars, 0);
  m[i] = 1;
  p.terms_[m] = Cyc(1);
  return p;
}

Poly Poly::constant(int nvars, const Cyc& c) {
  Poly p(nvars);
  if (!c.is_zero()) p.terms_[Monomial(nvars, 0)] = c;
  return p;
}

void Poly::add_term(const Monomial& mono, const Cyc& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("Poly +: variable count");
  Poly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("Poly -: variable count");
  Poly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("Poly *: variable count");
  Poly r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(a.nvars_);
      for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

Poly operator*(const Cyc& s, const Poly& a) {
  Poly r(a.nvars_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : a.terms_) r.add_term(m, s * c);
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
  Poly r = constant(nvars_, Cyc(1));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Poly Poly::derivative(int var) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    --d[var];
    r.add_term(d, Cyc(static_cast<long>(m[var])) * c);
  }
  return r;
}

Cyc Poly::evaluate(const std::vector<Cyc>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("Poly::evaluate: point size");
  Cyc total(0);
  for (const auto& [m, c] : terms_) {
    Cyc v = c;
    for (int i = 0; i < nvars_; ++i)
      if (m[i] > 0) v *= point[i].pow(m[i]);
    total += v;
  }
  return total;
}

Poly Poly::substitute_linear(const Mat& a) const {
  if (a.rows() != nvars_) throw std::invalid_argument("substitute_linear: shape");
  int nv = a.cols();
  std::vector<Poly> image(nvars_, Poly(nv));
  for (int i = 0; i < nvars_; ++i) {
    Poly li(nv);
    for (int j = 0; j < nv; ++j) {
      Monomial m(nv, 0);
      m[j] = 1;
      li.add_term(m, a(i, j));
    }
    image[i] = li;
  }
  Poly r(nv);
  for (const auto& [m, c] : terms_) {
    Poly t = Poly::constant(nv, c);
    for (int i = 0; i < nvars_; ++i)
      if (m[i] > 0) t = t * image[i].pow(m[i]);
    r += t;
  }
  return r;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int t = 0;
    for (int e : m) t += e;
    if (t > d) d = t;
  }
  return d;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      os << " ";
      if (static_cast<int>(names.size()) > i)
        os << names[i];
      else
        os << "x" << i;
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

std::map<int, Poly> weight_components(const Poly& p, const std::vector<int>& weights) {
  if (static_cast<int>(weights.size()) != p.nvars())
    throw std::invalid_argument("weight_components: weight count");
  std::map<int, Poly> comps;
  for (const auto& [m, c] : p.terms()) {
    int w = 0;
    for (int i = 0; i < p.nvars(); ++i) w += weights[i] * m[i];
    auto it = comps.find(w);
    if (it == comps.end()) it = comps.emplace(w, Poly(p.nvars())).first;
    it->second.add_term(m, c);
  }
  return comps;
}

}  // namespace liepencil
