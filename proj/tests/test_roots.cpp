#include <doctest.h>

#include "minkq/iwasawa.hpp"
#include "minkq/root_system.hpp"
#include "minkq/structure.hpp"

using namespace minkq;

TEST_CASE("iwasawa dimensions") {
  for (int n = 2; n <= 6; ++n) {
    auto data = so_data(1, n);
    CHECK(data->iw.a_basis.size() == 1);
    CHECK(static_cast<int>(data->iw.n_basis.size()) == n - 1);
    CHECK(static_cast<int>(data->iw.m_basis.size()) == (n - 1) * (n - 2) / 2);
  }
  for (int n = 3; n <= 6; ++n) {
    auto data = so_data(2, n);
    CHECK(data->iw.a_basis.size() == 2);
    CHECK(static_cast<int>(data->iw.n_basis.size()) == 2 * n - 2);
    CHECK(static_cast<int>(data->iw.m_basis.size()) == (n - 2) * (n - 3) / 2);
  }
  CHECK(so_data(2, 3)->iw.m_basis.empty());
  CHECK_THROWS_AS(iwasawa(make_so(0, 3)), std::invalid_argument);
}

TEST_CASE("so(1,n) has a single positive root of multiplicity n-1") {
  for (int n = 2; n <= 6; ++n) {
    auto data = so_data(1, n);
    auto pos = data->roots.positive_roots();
    REQUIRE(pos.size() == 1);
    CHECK(data->roots.multiplicity(pos[0]) == n - 1);
    CHECK(data->roots.roots().size() == 2);
  }
}

TEST_CASE("so(2,n) restricted roots form the expected system") {
  for (int n : {3, 5}) {
    auto data = so_data(2, n);
    const RootDecomp& rd = data->roots;
    RootVec a = rd.alpha(), b = rd.beta();
    CHECK(rd.multiplicity(a) == 1);
    CHECK(rd.multiplicity(b) == n - 2);
    RootVec ab = {a[0] + b[0], a[1] + b[1]};
    RootVec a2b = {a[0] + 2 * b[0], a[1] + 2 * b[1]};
    CHECK(rd.multiplicity(ab) == n - 2);
    CHECK(rd.multiplicity(a2b) == 1);
    CHECK(rd.roots().size() == 8);
    auto pos = rd.positive_roots();
    CHECK(pos.size() == 4);
  }
}

TEST_CASE("root space eigen-equations hold exactly") {
  auto data = so_data(2, 4);
  const LieAlg& g = *data->g;
  const RootDecomp& rd = data->roots;
  for (const auto& root : rd.roots()) {
    const Mat& sp = rd.space(root);
    for (int j = 0; j < sp.cols(); ++j)
      for (int i = 0; i < rd.rank(); ++i) {
        Mat lhs = g.bracket_coords(g.coords(rd.a_basis()[i]), sp.col(j));
        CHECK(lhs == sp.col(j) * Rat(root[i]));
      }
  }
}

TEST_CASE("bracket law between root spaces") {
  auto data = so_data(2, 3);
  const LieAlg& g = *data->g;
  const RootDecomp& rd = data->roots;
  for (const auto& r1 : rd.roots())
    for (const auto& r2 : rd.roots()) {
      RootVec s = {r1[0] + r2[0], r1[1] + r2[1]};
      for (int i = 0; i < rd.space(r1).cols(); ++i)
        for (int j = 0; j < rd.space(r2).cols(); ++j) {
          Mat br = g.bracket_coords(rd.space(r1).col(i), rd.space(r2).col(j));
          if (br.is_zero()) continue;
          if (rd.is_root(s)) {
            CHECK(Subspace::span(rd.space(s)).contains(br));
          } else if (s[0] == 0 && s[1] == 0) {
            CHECK(Subspace::span(rd.zero_space()).contains(br));
          } else {
            FAIL("bracket lands outside the grading");
          }
        }
    }
}

TEST_CASE("projections recover components in the adapted basis") {
  auto data = so_data(2, 3);
  const RootDecomp& rd = data->roots;
  Mat x(data->g->dim(), 1);
  for (int i = 0; i < x.rows(); ++i) x.at(i, 0) = Rat(i + 1, 2);
  Mat acc = rd.project_zero(x);
  for (const auto& r : rd.roots()) acc += rd.project(r, x);
  CHECK(acc == x);
}

TEST_CASE("weyl reflections act on root spaces as expected") {
  auto data = so_data(2, 4);
  const LieAlg& g = *data->g;
  const RootDecomp& rd = data->roots;
  RootVec a = rd.alpha(), b = rd.beta();
  RootVec ab = {a[0] + b[0], a[1] + b[1]};
  RootVec a2b = {a[0] + 2 * b[0], a[1] + 2 * b[1]};

  Mat ra = weyl_reflection(g, SimpleRoot::alpha);
  Mat rb = weyl_reflection(g, SimpleRoot::beta);
  CHECK(ra.transpose() * g.J() * ra == g.J());
  CHECK(rb.transpose() * g.J() * rb == g.J());
  CHECK(ra * ra == Mat::identity(g.ambient_dim()));
  CHECK(rb * rb == Mat::identity(g.ambient_dim()));

  auto conjugate_space = [&](const Mat& refl, const RootVec& root) {
    const Mat& sp = rd.space(root);
    Mat out;
    for (int j = 0; j < sp.cols(); ++j) {
      Mat x = g.from_coords(sp.col(j));
      out = hcat(out, g.coords(refl * x * refl));  // refl is an involution
    }
    return Subspace::span(out);
  };

  // s_alpha: beta -> alpha + beta (and back)
  CHECK(conjugate_space(ra, b) == Subspace::span(rd.space(ab)));
  CHECK(conjugate_space(ra, ab) == Subspace::span(rd.space(b)));
  // s_alpha fixes alpha + 2 beta up to sign of the root: the space maps to itself
  CHECK(conjugate_space(ra, a2b) == Subspace::span(rd.space(a2b)));
  // s_beta: alpha -> alpha + 2 beta
  CHECK(conjugate_space(rb, a) == Subspace::span(rd.space(a2b)));
  CHECK(conjugate_space(rb, a2b) == Subspace::span(rd.space(a)));

  CHECK_THROWS_AS(weyl_reflection(make_so(1, 4), SimpleRoot::alpha), std::invalid_argument);
}

TEST_CASE("root decomposition rejects a bad Cartan basis") {
  auto data = so_data(1, 3);
  // a compact generator is not ad-diagonalizable over the rationals
  std::vector<Mat> bad = {data->iw.k_basis[0]};
  CHECK_THROWS_AS(root_decomposition(*data->g, bad), std::invalid_argument);
}
