#include <doctest.h>

#include "minkq/polynomial.hpp"
#include "minkq/rng.hpp"

using namespace minkq;

namespace {
Poly from_roots(const std::vector<Rat>& roots) {
  Poly p = Poly::constant(Rat(1));
  for (const auto& r : roots) p = p * Poly({-r, Rat(1)});
  return p;
}
}  // namespace

TEST_CASE("sturm root counting") {
  Poly p = from_roots({Rat(1), Rat(2), Rat(3)});
  CHECK(count_real_roots(p) == 3);
  CHECK(count_real_roots_in(p, Rat(1), Rat(3)) == 2);  // (1, 3] excludes the root at 1
  CHECK(count_real_roots_in(p, Rat(0), Rat(3)) == 3);
  CHECK(count_real_roots_left_of(p, Rat(0)) == 0);
  CHECK(count_real_roots_right_of(p, Rat(0)) == 3);

  Poly q({Rat(1), Rat(0), Rat(1)});  // t^2 + 1
  CHECK(count_real_roots(q) == 0);
  CHECK(!all_roots_real(q));
  CHECK(all_roots_real(p));

  // repeated roots are counted once by the squarefree chain
  Poly r = p * p;
  CHECK(count_real_roots(r) == 3);
}

TEST_CASE("squarefree decomposition") {
  Poly f = from_roots({Rat(1)}) * from_roots({Rat(2)}) * from_roots({Rat(2)});
  auto dec = squarefree_decomposition(f);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].second == 1);
  CHECK(dec[1].second == 2);
  CHECK(dec[0].first.monic() == from_roots({Rat(1)}).monic());
  CHECK(dec[1].first.monic() == from_roots({Rat(2)}).monic());
}

TEST_CASE("char and min polynomials") {
  Mat d = Mat::diag({Rat(1), Rat(2)});
  CHECK(char_poly(d) == Poly({Rat(2), Rat(-3), Rat(1)}));
  CHECK(min_poly(Mat::identity(4)) == Poly({Rat(-1), Rat(1)}));

  Mat nil(3, 3);
  nil.at(0, 1) = 1;
  nil.at(1, 2) = 1;
  CHECK(min_poly(nil) == Poly({Rat(0), Rat(0), Rat(0), Rat(1)}));

  // Cayley-Hamilton spot check on random matrices
  RatSampler sampler(7);
  for (int t = 0; t < 10; ++t) {
    Mat a = sampler.next_matrix(4, 4, 3, 2);
    Poly cp = char_poly(a);
    Mat acc(4, 4);
    Mat pw = Mat::identity(4);
    for (int i = 0; i <= cp.degree(); ++i) {
      acc += pw * cp.coeff(i);
      pw = pw * a;
    }
    CHECK(acc.is_zero());
    // the minimal polynomial divides the characteristic polynomial
    CHECK(Poly::divmod(cp, min_poly(a)).second.is_zero());
  }
}

TEST_CASE("eigen sign count") {
  CHECK(eigen_sign_count(char_poly(Mat::diag({Rat(-1), Rat(1), Rat(1), Rat(1)}))) ==
        SignatureTriple{3, 1, 0});
  CHECK(eigen_sign_count(char_poly(Mat(3, 3))) == SignatureTriple{0, 0, 3});
  CHECK(eigen_sign_count(char_poly(Mat::diag({Rat(2), Rat(2), Rat(-5, 3)}))) ==
        SignatureTriple{2, 1, 0});
}

TEST_CASE("real root isolation") {
  Poly p = from_roots({Rat(-3), Rat(1, 2), Rat(5)});
  auto ivs = isolate_real_roots(p);
  REQUIRE(ivs.size() == 3);
  std::vector<Rat> roots = {Rat(-3), Rat(1, 2), Rat(5)};
  for (std::size_t i = 0; i < 3; ++i) {
    if (ivs[i].exact) {
      CHECK(ivs[i].lo == roots[i]);
    } else {
      CHECK(ivs[i].lo < roots[i]);
      CHECK(roots[i] <= ivs[i].hi);
      CHECK(!p.eval(ivs[i].lo).is_zero());
      CHECK(!p.eval(ivs[i].hi).is_zero());
    }
  }
  // intervals are pairwise disjoint and sorted
  for (std::size_t i = 0; i + 1 < ivs.size(); ++i) CHECK(ivs[i].hi <= ivs[i + 1].lo);

  // irrational roots: t^2 - 2
  auto irr = isolate_real_roots(Poly({Rat(-2), Rat(0), Rat(1)}));
  REQUIRE(irr.size() == 2);
  CHECK(!irr[0].exact);
  CHECK(!irr[1].exact);

  CHECK(isolate_real_roots(Poly({Rat(1), Rat(0), Rat(1)})).empty());
}

TEST_CASE("polynomial arithmetic") {
  Poly a({Rat(1), Rat(2), Rat(1)});  // (t+1)^2
  Poly b({Rat(1), Rat(1)});          // t+1
  auto [q, r] = Poly::divmod(a, b);
  CHECK(r.is_zero());
  CHECK(q == b);
  CHECK(Poly::gcd(a, b) == b.monic());
  CHECK(squarefree_part(a).monic() == b.monic());
  CHECK(a.eval(Rat(2)) == Rat(9));
  CHECK(a.derivative() == Poly({Rat(2), Rat(2)}));
}
