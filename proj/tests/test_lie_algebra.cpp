#include <doctest.h>

#include "minkq/lie_algebra.hpp"
#include "minkq/polynomial.hpp"
#include "minkq/rng.hpp"
#include "minkq/structure.hpp"

using namespace minkq;

TEST_CASE("make_so dimensions and membership") {
  CHECK(make_so(1, 2).dim() == 3);
  CHECK(make_so(2, 3).dim() == 10);
  CHECK(make_so(2, 8).dim() == 45);
  CHECK_THROWS_AS(make_so(1, 0), std::invalid_argument);

  LieAlg g = make_so(1, 3);
  for (const auto& b : g.basis()) {
    CHECK(g.contains(b));
    CHECK((b.transpose() * g.J() + g.J() * b).is_zero());
  }
  CHECK(!g.contains(Mat::identity(4)));
}

TEST_CASE("coordinates round trip and brackets") {
  LieAlg g = make_so(2, 3);
  RatSampler sampler(11);
  for (int t = 0; t < 20; ++t) {
    Mat c = sampler.next_matrix(g.dim(), 1, 4, 3);
    Mat x = g.from_coords(c);
    CHECK(g.coords(x) == c);
  }
  // structure constants reproduce the commutator
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) {
      Mat ci(g.dim(), 1), cj(g.dim(), 1);
      ci.at(i, 0) = 1;
      cj.at(j, 0) = 1;
      CHECK(g.from_coords(g.bracket_coords(ci, cj)) ==
            g.bracket(g.basis_element(i), g.basis_element(j)));
    }
}

TEST_CASE("Jacobi identity on random basis triples") {
  for (auto [p, q] : {std::pair{1, 2}, {1, 4}, {2, 3}, {2, 5}}) {
    LieAlg g = make_so(p, q);
    RatSampler sampler(200 + p * 10 + q);
    for (int t = 0; t < 200; ++t) {
      const Mat& x = g.basis_element(sampler.next_int(0, g.dim() - 1));
      const Mat& y = g.basis_element(sampler.next_int(0, g.dim() - 1));
      const Mat& z = g.basis_element(sampler.next_int(0, g.dim() - 1));
      Mat res = g.bracket(g.bracket(x, y), z) + g.bracket(g.bracket(y, z), x) +
                g.bracket(g.bracket(z, x), y);
      CHECK(res.is_zero());
    }
  }
}

TEST_CASE("Killing form of so(1,2) is Minkowski up to sign") {
  LieAlg g = make_so(1, 2);
  Mat k = killing_form(g);
  CHECK(k.is_symmetric());
  CHECK(signature(k) == SignatureTriple{2, 1, 0});
  // Sturm-based oracle agrees
  CHECK(eigen_sign_count(char_poly(k)) == SignatureTriple{2, 1, 0});
  // diagonalization exposes signs (+, +, -) in some order
  auto [d, p] = congruent_diagonalize(k);
  int pos = 0, neg = 0;
  for (int i = 0; i < 3; ++i) (d.at(i, i).sign() > 0 ? pos : neg)++;
  CHECK(pos == 2);
  CHECK(neg == 1);
}

TEST_CASE("Killing form matches the trace-form multiple") {
  // independent oracle: for so(p,q) on R^m, B(X,Y) = (m-2) tr(XY)
  for (auto [p, q] : {std::pair{0, 3}, {1, 2}, {1, 4}, {2, 3}}) {
    LieAlg g = make_so(p, q);
    Mat k = killing_form(g);
    int m = g.ambient_dim();
    for (int i = 0; i < g.dim(); ++i)
      for (int j = 0; j < g.dim(); ++j) {
        Mat prod = g.basis_element(i) * g.basis_element(j);
        Rat tr(0);
        for (int t = 0; t < m; ++t) tr += prod.at(t, t);
        CHECK(k.at(i, j) == tr * Rat(m - 2));
      }
  }
}

TEST_CASE("Killing form of so(3) is negative definite") {
  LieAlg g = make_so(0, 3);
  CHECK(signature(killing_form(g)) == SignatureTriple{0, 3, 0});
}

TEST_CASE("Killing form ad-invariance on random triples") {
  LieAlg g = make_so(2, 3);
  Mat k = killing_form(g);
  RatSampler sampler(57);
  for (int t = 0; t < 50; ++t) {
    Mat x = sampler.next_matrix(g.dim(), 1, 3, 2);
    Mat y = sampler.next_matrix(g.dim(), 1, 3, 2);
    Mat z = sampler.next_matrix(g.dim(), 1, 3, 2);
    Rat lhs = killing_eval(k, g.bracket_coords(z, x), y) + killing_eval(k, x, g.bracket_coords(z, y));
    CHECK(lhs.is_zero());
  }
}

TEST_CASE("is_subalgebra certificates and witnesses") {
  auto data = so_data(1, 3);
  auto g = data->g;

  // the nilradical is closed by construction
  ClosureCheck nc = is_subalgebra(*g, data->iw.n_basis);
  CHECK(nc.ok);

  // a single Cartan generator spans a 1-dimensional abelian subalgebra
  ClosureCheck ac = is_subalgebra(*g, {data->iw.a_basis[0]});
  CHECK(ac.ok);

  // a rotation plus one boost is not closed in so(3) terms: exhibit a witness
  LieAlg so3 = make_so(0, 3);
  auto sg = std::make_shared<const LieAlg>(so3);
  ClosureCheck bad = is_subalgebra(*sg, {so3.basis_element(0), so3.basis_element(1)});
  CHECK(!bad.ok);
  CHECK(bad.bad_i == 0);
  CHECK(bad.bad_j == 1);

  // element outside g is reported with its index
  ClosureCheck outside = is_subalgebra(*g, {Mat::identity(4)});
  CHECK(!outside.ok);
  CHECK(outside.bad_i == 0);

  CHECK_THROWS_AS(make_subalgebra(sg, "bad", {so3.basis_element(0), so3.basis_element(1)}),
                  std::invalid_argument);
}

TEST_CASE("closure certificate expands brackets exactly") {
  auto data = so_data(2, 3);
  auto g = data->g;
  Subalg n = make_subalgebra(g, "n", data->iw.n_basis);
  for (int i = 0; i < n.dim(); ++i)
    for (int j = 0; j < n.dim(); ++j) {
      Mat expected = g->bracket(n.basis[i], n.basis[j]);
      Mat acc(g->ambient_dim(), g->ambient_dim());
      for (int t = 0; t < n.dim(); ++t)
        if (!n.closure[i][j][t].is_zero()) acc += n.basis[t] * n.closure[i][j][t];
      CHECK(acc == expected);
    }
}
