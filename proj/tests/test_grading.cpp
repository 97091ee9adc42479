#include "doctest.h"

#include "liepencil/grading.hpp"

using namespace liepencil;

namespace {

Mat antidiag3(int s1, int s2, int s3) {
  Mat k(3, 3);
  k(0, 2) = Cyc(s1);
  k(1, 1) = Cyc(s2);
  k(2, 0) = Cyc(s3);
  return k;
}

Mat diag3(const Cyc& a, const Cyc& b, const Cyc& c) {
  Mat d(3, 3);
  d(0, 0) = a;
  d(1, 1) = b;
  d(2, 2) = c;
  return d;
}

// The order-4 outer automorphism of sl3 used throughout: x -> Ad(d)(-K x^T K^{-1})
// with K = antidiag(1,-1,1) and d = diag(1, zeta_4, -1).
Automorphism frozen_sl3_theta() {
  return outer_sl_automorphism(3, antidiag3(1, -1, 1),
                               diag3(Cyc(1), Cyc::zeta(4), Cyc(-1)));
}

// Rank of the span of a list of 3x3 matrices, flattened.
int span_rank(const std::vector<Mat>& mats) {
  Mat m(static_cast<int>(mats.size()), 9);
  for (size_t r = 0; r < mats.size(); ++r)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(static_cast<int>(r), 3 * i + j) = mats[r](i, j);
  return rank(m);
}

}  // namespace

TEST_CASE("make_automorphism validates") {
  auto a = build_classical(Series::A, 1);
  // Ad(diag(1,-1)) on (h, e, f): fixes h, negates e and f.
  Mat t = Mat::identity(3);
  t(1, 1) = Cyc(-1);
  t(2, 2) = Cyc(-1);
  auto au = make_automorphism(a, t);
  CHECK(au.order == 2);

  Mat bad = Mat::identity(3);
  bad(1, 1) = Cyc(2);
  CHECK_THROWS(make_automorphism(a, bad));  // scaling e breaks [e,f] = h
}

TEST_CASE("eigenspace grading of sl2 involution") {
  auto a = build_classical(Series::A, 1);
  Mat t = Mat::identity(3);
  t(1, 1) = Cyc(-1);
  t(2, 2) = Cyc(-1);
  auto g = eigenspace_grading(a, make_automorphism(a, t));
  CHECK(g.m == 2);
  CHECK(g.component_dims() == std::vector<int>{1, 2});
  CHECK(validate_grading(g).ok);
  CHECK(grading_automorphism_matrix(g) == t);
}

TEST_CASE("trivial grading") {
  auto a = build_classical(Series::A, 2);
  auto g = trivial_grading(a);
  CHECK(g.component_dims() == std::vector<int>{8});
  CHECK(validate_grading(g).ok);
}

TEST_CASE("kac inner gradings of sl2 and sl3") {
  auto g2 = grading_from_kac_inner({Series::A, 1, {1, 1}});
  CHECK(g2.m == 2);
  CHECK(g2.component_dims() == std::vector<int>{1, 2});
  CHECK(validate_grading(g2).ok);

  auto g3 = grading_from_kac_inner({Series::A, 2, {1, 1, 0}});
  CHECK(g3.m == 2);
  CHECK(g3.component_dims() == std::vector<int>{4, 4});
  CHECK(validate_grading(g3).ok);

  // Principal: all labels 1. Degrees count root height mod 3.
  auto gp = grading_from_kac_inner({Series::A, 2, {1, 1, 1}});
  CHECK(gp.m == 3);
  CHECK(gp.component_dims() == std::vector<int>{2, 3, 3});
  CHECK(validate_grading(gp).ok);
  auto g0 = fixed_subalgebra(gp);
  CHECK(g0.algebra.dim == 2);
  for (int i = 0; i < 2; ++i)
    for (int j = i + 1; j < 2; ++j) CHECK(g0.algebra.bracket_basis(i, j).empty());
}

TEST_CASE("kac gradings on B2 and C2") {
  // Labels (1,1,1) on so5 / sp4: m = 1 + marks . (1,1).
  auto gb = grading_from_kac_inner({Series::B, 2, {1, 1, 1}});
  CHECK(validate_grading(gb).ok);
  int total = 0;
  for (int d : gb.component_dims()) total += d;
  CHECK(total == 10);

  auto gc = grading_from_kac_inner({Series::C, 2, {1, 1, 1}});
  CHECK(validate_grading(gc).ok);
  CHECK(gc.component_dims()[0] == 2);  // principal: Cartan only in degree 0
}

TEST_CASE("kac label rejection") {
  CHECK_THROWS(grading_from_kac_inner({Series::A, 2, {0, 0, 0}}));
  CHECK_THROWS(grading_from_kac_inner({Series::A, 2, {2, 2, 0}}));
  CHECK_THROWS(grading_from_kac_inner({Series::A, 2, {0, 1, 0}}));  // m = 1
  CHECK_THROWS(grading_from_kac_inner({Series::A, 2, {1, 1}}));     // wrong length
}

TEST_CASE("order-2 outer automorphism of sl3 fixes so3") {
  auto au = outer_sl_automorphism(3, antidiag3(1, -1, 1));
  CHECK(au.order == 2);
  auto a = build_classical(Series::A, 2);
  auto g = eigenspace_grading(a, au);
  CHECK(g.component_dims() == std::vector<int>{3, 5});
}

TEST_CASE("n=2 transpose twist by the symplectic form is inner") {
  Mat k(2, 2);
  k(0, 1) = Cyc(1);
  k(1, 0) = Cyc(-1);
  auto au = outer_sl_automorphism(2, k);
  CHECK(au.order == 1);
  CHECK(au.matrix == Mat::identity(3));
}

TEST_CASE("frozen order-4 outer automorphism of sl3") {
  auto au = frozen_sl3_theta();
  CHECK(au.order == 4);
  auto a = build_classical(Series::A, 2);
  auto g = eigenspace_grading(a, au);
  CHECK(g.component_dims() == std::vector<int>{3, 2, 1, 2});
  CHECK(validate_grading(g).ok);

  // Fixed algebra is the sl2 spanned by E11-E33, E13, E31.
  auto g0 = fixed_subalgebra(g);
  REQUIRE(g0.algebra.dim == 3);
  std::vector<Mat> span;
  for (const auto& m : *g0.algebra.realization) span.push_back(m);
  REQUIRE(span_rank(span) == 3);
  Mat e11_33(3, 3), e13(3, 3), e31(3, 3);
  e11_33(0, 0) = Cyc(1);
  e11_33(2, 2) = Cyc(-1);
  e13(0, 2) = Cyc(1);
  e31(2, 0) = Cyc(1);
  for (const Mat& x : {e11_33, e13, e31}) {
    auto with = span;
    with.push_back(x);
    CHECK(span_rank(with) == 3);
  }
  // Nonabelian (it is an sl2, not a torus).
  bool nonabelian = false;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!g0.algebra.bracket_basis(i, j).empty()) nonabelian = true;
  CHECK(nonabelian);
}

TEST_CASE("search over twists rediscovers the frozen (K,d) pair") {
  // Independent derivation: scan sign patterns for K and fourth-root twists
  // for d, keep those giving order 4 with the expected fixed algebra.
  Mat e11_33(3, 3), e13(3, 3), e31(3, 3);
  e11_33(0, 0) = Cyc(1);
  e11_33(2, 2) = Cyc(-1);
  e13(0, 2) = Cyc(1);
  e31(2, 0) = Cyc(1);
  auto a = build_classical(Series::A, 2);
  Cyc i4 = Cyc::zeta(4);

  auto matches = [&](const Automorphism& au) {
    if (au.order != 4) return false;
    auto ker = kernel_basis(au.matrix - Mat::identity(8));
    if (ker.size() != 3) return false;
    std::vector<Mat> span;
    for (const auto& v : ker) {
      Mat m(3, 3);
      for (int b = 0; b < 8; ++b) m = m + v[b] * (*a.realization)[b];
      span.push_back(m);
    }
    for (const Mat& x : {e11_33, e13, e31}) {
      auto with = span;
      with.push_back(x);
      if (span_rank(with) != 3) return false;
    }
    return true;
  };

  auto frozen = frozen_sl3_theta();
  REQUIRE(matches(frozen));

  bool found = false;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      for (int s3 : {1, -1})
        for (int p = 0; p < 4 && !found; ++p)
          for (int q = 0; q < 4 && !found; ++q) {
            Automorphism au;
            try {
              au = outer_sl_automorphism(3, antidiag3(s1, s2, s3),
                                         diag3(Cyc(1), i4.pow(p), i4.pow(q)));
            } catch (const std::invalid_argument&) {
              continue;
            }
            if (matches(au) && au.matrix == frozen.matrix) found = true;
          }
  CHECK(found);
}

TEST_CASE("cyclic permutation automorphism on sl2 + sl2") {
  auto h = build_classical(Series::A, 1);
  auto hh = nth_power(h, 2);
  auto au = cyclic_permutation_automorphism(hh, 2, Automorphism{Mat::identity(3), 1});
  CHECK(au.order == 2);
  auto g = eigenspace_grading(hh, au);
  CHECK(g.component_dims() == std::vector<int>{3, 3});
  // g0 is a diagonal sl2: nonabelian, perfect.
  auto g0 = fixed_subalgebra(g);
  CHECK(g0.algebra.dim == 3);
  CHECK(lower_central_series(g0.algebra).back() == 3);
}

TEST_CASE("cyclic permutation over the order-4 twist of sl3") {
  auto h = build_classical(Series::A, 2);
  auto hh = nth_power(h, 2);
  auto au = cyclic_permutation_automorphism(hh, 2, frozen_sl3_theta());
  CHECK(au.order == 8);
  auto ker = kernel_basis(au.matrix - Mat::identity(16));
  CHECK(ker.size() == 3);
}

TEST_CASE("validate_grading flags a wrong degree") {
  auto g = grading_from_kac_inner({Series::A, 1, {1, 1}});
  g.degree[2] = 0;  // move a root vector into the wrong component
  auto v = validate_grading(g);
  CHECK(!v.ok);
  CHECK(v.i >= 0);
}

TEST_CASE("component dims stable under inner conjugation") {
  // Conjugating theta by Ad(g), g unipotent, must not change the dims.
  auto a = build_classical(Series::A, 2);
  auto au = frozen_sl3_theta();
  Mat g = Mat::identity(3);
  g(0, 2) = Cyc(1);  // I + E13
  Mat ginv = inverse(g);
  Mat ad(8, 8);
  for (int j = 0; j < 8; ++j) {
    auto c = matrix_coordinates(a, g * (*a.realization)[j] * ginv);
    for (int i = 0; i < 8; ++i) ad(i, j) = c[i];
  }
  Mat conj = ad * au.matrix * inverse(ad);
  auto au2 = make_automorphism(a, conj);
  CHECK(au2.order == 4);
  auto gr = eigenspace_grading(a, au2);
  CHECK(gr.component_dims() == std::vector<int>{3, 2, 1, 2});
}
