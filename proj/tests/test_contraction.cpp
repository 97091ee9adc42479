#include "doctest.h"

#include "liepencil/contraction.hpp"

using namespace liepencil;

namespace {

Automorphism frozen_sl3_theta() {
  Mat k(3, 3), d(3, 3);
  k(0, 2) = Cyc(1);
  k(1, 1) = Cyc(-1);
  k(2, 0) = Cyc(1);
  d(0, 0) = Cyc(1);
  d(1, 1) = Cyc::zeta(4);
  d(2, 2) = Cyc(-1);
  return outer_sl_automorphism(3, k, d);
}

ZmGrading sl2_kac11() { return grading_from_kac_inner({Series::A, 1, {1, 1}}); }

ZmGrading lemma_sl3_grading() {
  auto a = build_classical(Series::A, 2);
  return eigenspace_grading(a, frozen_sl3_theta());
}

bool structures_equal(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.dim != b.dim) return false;
  for (int i = 0; i < a.dim; ++i)
    for (int j = i + 1; j < a.dim; ++j) {
      auto sa = a.bracket_basis(i, j), sb = b.bracket_basis(i, j);
      std::sort(sa.begin(), sa.end(), [](auto& x, auto& y) { return x.first < y.first; });
      std::sort(sb.begin(), sb.end(), [](auto& x, auto& y) { return x.first < y.first; });
      if (sa.size() != sb.size()) return false;
      for (size_t t = 0; t < sa.size(); ++t)
        if (sa[t].first != sb[t].first || sa[t].second != sb[t].second) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("sl2 limits") {
  auto g = sl2_kac11();
  // Graded basis: h (deg 0), then e, f (deg 1).
  auto q0 = contract_zero(g);
  CHECK(q0.algebra.bracket_basis(1, 2).empty());              // [e,f]_0 = 0
  CHECK(q0.algebra.bracket_basis(0, 1) == SparseVec{{1, Cyc(2)}});  // [h,e]_0 = 2e
  CHECK(jacobi_check(q0.algebra).ok);

  auto qi = contract_infty(g);
  CHECK(qi.at_infinity);
  CHECK(qi.algebra.bracket_basis(1, 2) == SparseVec{{0, Cyc(1)}});  // [e,f]_inf = h
  CHECK(qi.algebra.bracket_basis(0, 1).empty());              // h central
  CHECK(qi.algebra.bracket_basis(0, 2).empty());
  CHECK(jacobi_check(qi.algebra).ok);
  CHECK(qi.weights == std::vector<int>{2, 1, 1});
  auto lcs = lower_central_series(qi.algebra);
  CHECK(lcs.back() == 0);
}

TEST_CASE("trivial grading contracts to itself") {
  auto a = build_classical(Series::A, 2);
  auto g = trivial_grading(a);
  CHECK(structures_equal(contract_zero(g).algebra, a));
}

TEST_CASE("pencil identity and members") {
  for (const ZmGrading& g : {sl2_kac11(), lemma_sl3_grading(),
                             grading_from_kac_inner({Series::A, 2, {1, 1, 1}})}) {
    auto q0 = contract_zero(g);
    auto qi = contract_infty(g);
    // {,}_0 + {,}_inf = {,} exactly.
    LieAlgebra sum;
    sum.dim = g.algebra.dim;
    for (const auto& [key, sv] : q0.algebra.structure)
      for (const auto& [k, c] : sv) sum.set_constant(key.first, key.second, k, c);
    for (const auto& [key, sv] : qi.algebra.structure)
      for (const auto& [k, c] : sv) sum.set_constant(key.first, key.second, k, c);
    CHECK(structures_equal(sum, g.algebra));
    CHECK(structures_equal(pencil_member(g, Cyc(1)).algebra, g.algebra));
    CHECK(structures_equal(pencil_member(g, Cyc(0)).algebra, q0.algebra));
    CHECK(compatibility_check(q0.algebra, qi.algebra));
  }
}

TEST_CASE("lemma-sl3 limits") {
  auto g = lemma_sl3_grading();
  auto q0 = contract_zero(g);
  auto qi = contract_infty(g);
  CHECK(jacobi_check(q0.algebra).ok);
  CHECK(jacobi_check(qi.algebra).ok);
  CHECK(lower_central_series(qi.algebra).back() == 0);
  // Two degree-3 vectors bracket to zero at t=0 (3+3 >= 4).
  auto deg3 = g.component(3);
  REQUIRE(deg3.size() == 2);
  CHECK(q0.algebra.bracket_basis(deg3[0], deg3[1]).empty());
  // q_0 is central in q_(inf).
  for (int i : g.component(0))
    for (int j = 0; j < g.algebra.dim; ++j)
      if (i != j) CHECK(qi.algebra.bracket_basis(i, j).empty());
}

TEST_CASE("finite t member is isomorphic to q via phi_s") {
  auto g = sl2_kac11();
  auto qt = pencil_member(g, Cyc(4));  // t = s^m with s = 2, m = 2
  CHECK(qt.algebra.bracket_basis(1, 2) == SparseVec{{0, Cyc(4)}});
  Mat phi(3, 3);
  for (int i = 0; i < 3; ++i) phi(i, i) = Cyc(Rational(1, 2)).pow(g.degree[i]);
  auto back = change_basis(qt.algebra, phi);
  CHECK(structures_equal(back, g.algebra));
}

TEST_CASE("compatibility detects a genuine mismatch") {
  auto sl2 = build_classical(Series::A, 1);
  CHECK(compatibility_check(sl2, sl2));
  LieAlgebra bad;
  bad.dim = 3;
  bad.set_constant(0, 1, 0, Cyc(1));  // [h,e] = h; fine alone, mixes badly
  CHECK(jacobi_check(bad).ok);
  CHECK(!compatibility_check(sl2, bad));
}

TEST_CASE("phi_contraction existence") {
  auto sl2 = build_classical(Series::A, 1);
  auto ok = phi_contraction(sl2, {0, 0, 1});
  CHECK(ok.exists);
  CHECK(ok.algebra.bracket_basis(1, 2).empty());  // [e,f] dropped
  CHECK(ok.algebra.bracket_basis(0, 2) == SparseVec{{2, Cyc(-2)}});

  auto nope = phi_contraction(sl2, {1, 0, 0});
  CHECK(!nope.exists);
  CHECK(nope.i >= 0);
}

TEST_CASE("semidirect of sl2 (1,1)") {
  auto sd = semidirect_tilde(sl2_kac11());
  CHECK(sd.algebra.dim == 4);
  CHECK(jacobi_check(sd.algebra).ok);
  CHECK(sd.tilde_phi_weight == std::vector<int>{0, 1, 1, 2});
  // The abelian copy is central here (g0 is abelian and q0 central in
  // g_(inf)); the bracket of the two degree-1 vectors lands in it.
  int ab = sd.g0ab[0];
  for (int j = 0; j < 4; ++j)
    if (j != ab) CHECK(sd.algebra.bracket_basis(ab, j).empty());
  CHECK(sd.algebra.bracket_basis(1, 2) == SparseVec{{ab, Cyc(1)}});
}

TEST_CASE("semidirect of the lemma-sl3 grading") {
  auto g = lemma_sl3_grading();
  auto sd = semidirect_tilde(g);
  CHECK(sd.algebra.dim == 11);
  CHECK(jacobi_check(sd.algebra).ok);
  // g0^d acts nontrivially on g0^ab (g0 is an sl2).
  bool acts = false;
  for (int i : sd.g0d)
    for (int j : sd.g0ab)
      if (!sd.algebra.bracket_basis(i, j).empty()) acts = true;
  CHECK(acts);
  // tilde-phi weights make the algebra graded: the contraction is a no-op.
  auto pc = phi_contraction(sd.algebra, sd.tilde_phi_weight);
  CHECK(pc.exists);
  CHECK(structures_equal(pc.algebra, sd.algebra));
}

TEST_CASE("semidirect equals the phi-tilde limit of g0 + g") {
  for (const ZmGrading& g : {sl2_kac11(), lemma_sl3_grading()}) {
    auto sd = semidirect_tilde(g);
    auto g0 = fixed_subalgebra(g);
    int r = g0.algebra.dim, n = g.algebra.dim;
    auto big = direct_sum(g0.algebra, g.algebra);
    // Columns: diagonal copies (y, y), then the positive-degree vectors,
    // then the antidiagonal copies -(y, -y)/2, matching the tilde layout.
    Mat p(r + n, r + n);
    auto comp0 = g.component(0);
    for (int a = 0; a < r; ++a) {
      p(a, a) = Cyc(1);
      p(r + comp0[a], a) = Cyc(1);
      p(a, n + a) = Cyc(Rational(-1, 2));
      p(r + comp0[a], n + a) = Cyc(Rational(1, 2));
    }
    int col = r;
    for (int d = g.m - 1; d >= 1; --d)
      for (int b : g.component(d)) p(r + b, col++) = Cyc(1);
    auto rebased = change_basis(big, p);
    auto lim = phi_contraction(rebased, sd.tilde_phi_weight);
    CHECK(lim.exists);
    CHECK(structures_equal(lim.algebra, sd.algebra));
  }
}

TEST_CASE("chain construction") {
  auto h = build_classical(Series::A, 2);
  auto sd1 = tilde_g_for_chain(h, 1, frozen_sl3_theta());
  CHECK(sd1.algebra.dim == 11);
  CHECK(jacobi_check(sd1.algebra).ok);
  CHECK(structures_equal(sd1.algebra, semidirect_tilde(lemma_sl3_grading()).algebra));

  auto sd2 = tilde_g_for_chain(h, 2, frozen_sl3_theta());
  CHECK(sd2.algebra.dim == 19);
  CHECK(sd2.m == 8);
  CHECK(jacobi_check(sd2.algebra).ok);
  // Graded in tbar powers: [x tbar^j, y tbar^u] = [x,y] tbar^{j+u}.
  auto pc = phi_contraction(sd2.algebra, sd2.tilde_phi_weight);
  CHECK(pc.exists);
  CHECK(structures_equal(pc.algebra, sd2.algebra));
}
