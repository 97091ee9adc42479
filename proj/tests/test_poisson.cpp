#include "doctest.h"

#include "liepencil/poisson.hpp"
#include "liepencil/rng.hpp"

using namespace liepencil;

namespace {

LieAlgebra heisenberg() {
  LieAlgebra h;
  h.dim = 3;
  h.labels = {"x", "y", "z"};
  h.set_constant(0, 1, 2, Cyc(1));
  return h;
}

// sl2 Casimir h^2 + 4ef in the (h, e, f) coordinates.
Poly sl2_casimir() {
  Poly h = Poly::variable(3, 0), e = Poly::variable(3, 1), f = Poly::variable(3, 2);
  return h * h + Cyc(4) * (e * f);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  Poly p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.total_degree() == 2);
  CHECK((p - p).is_zero());
  CHECK(p.pow(2) == p * p);
  CHECK(p.evaluate({Cyc(3), Cyc(2)}) == Cyc(5));
  CHECK(p.derivative(0) == Cyc(2) * x);
  CHECK(p.derivative(1) == Cyc(-2) * y);
}

TEST_CASE("linear substitution") {
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  // x -> u + v, y -> u - v  maps x*y to u^2 - v^2.
  Mat a = Mat::from_rows({{Cyc(1), Cyc(1)}, {Cyc(1), Cyc(-1)}});
  Poly sub = (x * y).substitute_linear(a);
  Poly u = Poly::variable(2, 0), v = Poly::variable(2, 1);
  CHECK(sub == u * u - v * v);
}

TEST_CASE("weight components reassemble") {
  Poly c = sl2_casimir();
  auto comps = weight_components(c, {0, 1, 1});
  REQUIRE(comps.size() == 2);
  CHECK(comps.count(0) == 1);
  CHECK(comps.count(2) == 1);
  Poly sum(3);
  for (const auto& [w, part] : comps) sum += part;
  CHECK(sum == c);
  Poly h = Poly::variable(3, 0);
  CHECK(comps.at(0) == h * h);
}

TEST_CASE("canonical string") {
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  Poly p = Cyc(2) * (x * x) - y;
  CHECK(p.str({"a", "b"}) == "(-1) b + (2) a^2");
  CHECK(Poly(2).str() == "0");
}

TEST_CASE("poisson bracket on sl2") {
  auto a = build_classical(Series::A, 1);
  Poly h = Poly::variable(3, 0), e = Poly::variable(3, 1), f = Poly::variable(3, 2);
  CHECK(poisson_bracket(a, e, f) == h);
  CHECK(poisson_bracket(a, h * h, e * f).is_zero());
  CHECK(poisson_bracket(a, e * f, h).is_zero());
  CHECK(poisson_bracket(a, e, e).is_zero());
  // The Casimir is central.
  Poly c = sl2_casimir();
  for (int i = 0; i < 3; ++i)
    CHECK(poisson_bracket(a, c, Poly::variable(3, i)).is_zero());
}

TEST_CASE("poisson bracket satisfies Leibniz and Jacobi on samples") {
  auto a = build_classical(Series::A, 1);
  Rng rng(7);
  auto rand_poly = [&](int deg) {
    Poly p(3);
    for (int t = 0; t < 4; ++t) {
      Monomial m(3, 0);
      for (int d = 0; d < deg; ++d) ++m[rng.next() % 3];
      p.add_term(m, Cyc(rng.uniform_box(5)));
    }
    return p;
  };
  for (int trial = 0; trial < 3; ++trial) {
    Poly f = rand_poly(2), g = rand_poly(1), h = rand_poly(2);
    CHECK(poisson_bracket(a, f, g * h) ==
          poisson_bracket(a, f, g) * h + g * poisson_bracket(a, f, h));
    Poly jac = poisson_bracket(a, f, poisson_bracket(a, g, h)) +
               poisson_bracket(a, g, poisson_bracket(a, h, f)) +
               poisson_bracket(a, h, poisson_bracket(a, f, g));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("poisson tensor") {
  auto a = build_classical(Series::A, 1);
  CHECK(tensor_at(a, {Cyc(0), Cyc(0), Cyc(0)}).is_zero());
  Mat pi = tensor_at(a, {Cyc(1), Cyc(0), Cyc(0)});  // xi = h*
  CHECK(pi == Cyc(-1) * pi.transpose());
  CHECK(rank(pi) == 2);

  Mat piz = tensor_at(heisenberg(), {Cyc(0), Cyc(0), Cyc(1)});
  CHECK(rank(piz) == 2);
}

TEST_CASE("stabilizers") {
  auto a = build_classical(Series::A, 1);
  auto st = stabilizer(a, {Cyc(1), Cyc(2), Cyc(3)});
  CHECK(st.size() == 1);
}

TEST_CASE("index estimates") {
  CHECK(index_estimate(build_classical(Series::A, 1), 20, 42, 10).index_upper_bound == 1);
  CHECK(index_estimate(build_classical(Series::A, 2), 20, 42, 10).index_upper_bound == 2);
  CHECK(index_estimate(heisenberg(), 20, 42, 10).index_upper_bound == 1);
  auto rep = index_estimate(build_classical(Series::A, 2), 20, 42, 10);
  CHECK(rep.generic_rank_observed == 6);
  // The witness reproduces the reported rank.
  CHECK(rank(tensor_at(build_classical(Series::A, 2), rep.witness_point)) == 6);
  CHECK(rep.failure_bound < Rational(1));
}

TEST_CASE("index is additive over direct sums") {
  auto a = build_classical(Series::A, 1);
  auto s = direct_sum(a, build_classical(Series::A, 2));
  CHECK(index_estimate(s, 20, 42, 10).index_upper_bound == 3);
}

TEST_CASE("b_value") {
  CHECK(b_value(8, 2) == 5);
  CHECK(b_value(3, 1) == 2);
  CHECK_THROWS(b_value(8, 1));
}

TEST_CASE("commutes modes agree") {
  auto a = build_classical(Series::A, 1);
  Poly h = Poly::variable(3, 0), e = Poly::variable(3, 1), f = Poly::variable(3, 2);
  CHECK(commutes_symbolic(a, h * h, e * f));
  CHECK(commutes_sampled(a, h * h, e * f, 10, 42, 10));
  CHECK(!commutes_symbolic(a, e, f));
  CHECK(!commutes_sampled(a, e, f, 10, 42, 10));
}

TEST_CASE("jacobian rank and independence") {
  Poly h = Poly::variable(3, 0), e = Poly::variable(3, 1), f = Poly::variable(3, 2);
  Poly c = sl2_casimir();
  CHECK(jacobian_rank({c}, {Cyc(1), Cyc(1), Cyc(1)}) == 1);
  CHECK(jacobian_rank({c}, {Cyc(0), Cyc(0), Cyc(0)}) == 0);
  CHECK(algebraic_independence({h * h, e * f}, 20, 42, 10));
  CHECK(!algebraic_independence({h * h, (h * h) * (h * h)}, 20, 42, 10));
}

TEST_CASE("invariant gradients live in the tensor kernel") {
  auto a = build_classical(Series::A, 1);
  Poly c = sl2_casimir();
  Rng rng(42);
  for (int s = 0; s < 20; ++s) {
    auto xi = rng.point(3, 10);
    Mat pi = tensor_at(a, xi);
    std::vector<Cyc> grad(3);
    for (int i = 0; i < 3; ++i) grad[i] = c.derivative(i).evaluate(xi);
    std::vector<Cyc> zero(3, Cyc(0));
    CHECK(mat_vec(pi, grad) == zero);
  }
}
