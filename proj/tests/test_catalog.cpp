#include <doctest.h>

#include <algorithm>

#include "minkq/catalog.hpp"
#include "minkq/elements.hpp"
#include "minkq/root_system.hpp"
#include "minkq/structure.hpp"

using namespace minkq;

TEST_CASE("catalog listings") {
  auto d25 = so_data(2, 5);
  auto names_of = [](const std::vector<CatalogEntry>& es) {
    std::vector<std::string> out;
    for (const auto& e : es) out.push_back(e.name);
    return out;
  };
  auto names = names_of(list_catalog(*d25->g));
  for (const char* expected : {"so(1,5)", "su(1,2)", "min_parabolic", "p_alpha", "p_beta", "a", "n"})
    CHECK(std::count(names.begin(), names.end(), expected) == 1);

  auto d14 = so_data(1, 4);
  auto names14 = names_of(list_catalog(*d14->g));
  for (const char* expected : {"so(1,3)", "a", "n", "m"})
    CHECK(std::count(names14.begin(), names14.end(), expected) == 1);

  LieAlg g33 = make_so(3, 3);
  CHECK(list_catalog(g33).empty());
}

TEST_CASE("every catalog entry builds with its expected dimension") {
  for (auto [p, q] : {std::pair{1, 3}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}) {
    auto data = so_data(p, q);
    for (const auto& e : list_catalog(*data->g)) {
      Subalg h = standard_subalgebra(data->g, e.name);
      CHECK_MESSAGE(h.dim() == e.expected_dim, e.name);
    }
  }
}

TEST_CASE("catalog dimension examples") {
  CHECK(standard_subalgebra(so_data(2, 5)->g, "so(1,5)").dim() == 15);
  CHECK(standard_subalgebra(so_data(2, 4)->g, "su(1,2)").dim() == 8);
  CHECK(standard_subalgebra(so_data(2, 4)->g, "p_beta").dim() == 11);
  CHECK(standard_subalgebra(so_data(2, 3)->g, "min_parabolic").dim() == 6);
  CHECK(standard_subalgebra(so_data(2, 3)->g, "p_alpha").dim() == 7);
  CHECK(standard_subalgebra(so_data(2, 3)->g, "p_beta").dim() == 7);
  CHECK(standard_subalgebra(so_data(2, 4)->g, "min_parabolic").dim() == 9);
}

TEST_CASE("family aliases resolve") {
  auto g = so_data(2, 4)->g;
  CHECK(standard_subalgebra(g, "so(1,n)<so(2,n)").name == "so(1,4)");
  CHECK(standard_subalgebra(g, "su(1,k)<so(2,2k)").name == "su(1,2)");
  auto g15 = so_data(1, 5)->g;
  CHECK(standard_subalgebra(g15, "so(1,n-1)<so(1,n)").name == "so(1,4)");
  CHECK_THROWS_AS(standard_subalgebra(g, "so(9,9)"), std::invalid_argument);
}

TEST_CASE("su realification lands inside so(2,n) for odd and even n") {
  for (int n : {3, 4, 5, 6}) {
    auto data = so_data(2, n);
    Subalg su = standard_subalgebra(data->g, "su(1," + std::to_string(n / 2) + ")");
    int k = n / 2;
    CHECK(su.dim() == (k + 1) * (k + 1) - 1);
    for (const auto& b : su.basis) CHECK(data->g->contains(b));
  }
}

TEST_CASE("parabolic entries contain the minimal parabolic") {
  for (int n : {3, 4, 5}) {
    auto data = so_data(2, n);
    Subalg minp = standard_subalgebra(data->g, "min_parabolic");
    Subalg pa = standard_subalgebra(data->g, "p_alpha");
    Subalg pb = standard_subalgebra(data->g, "p_beta");
    CHECK(pa.space().contains(minp.space()));
    CHECK(pb.space().contains(minp.space()));
    CHECK(!(pa.space() == pb.space()));
  }
}

TEST_CASE("maximal unipotent subalgebras saturate the dimension bound") {
  for (int n : {3, 4, 5, 6}) {
    auto data = so_data(2, n);
    Subalg so1n = standard_subalgebra(data->g, "so(1," + std::to_string(n) + ")");
    Mat t = rank_one_cartan_element(*data->g, so1n.name);
    Subalg nu = maximal_unipotent_subalgebra(so1n, t);
    CHECK(nu.dim() == n - 1);
    for (const auto& b : nu.basis) CHECK(classify_element(*data->g, b) == ElementClass::nilpotent);

    // the Heisenberg nilradical of su(1,k) has dimension 2k-1
    int k = n / 2;
    Subalg su = standard_subalgebra(data->g, "su(1," + std::to_string(k) + ")");
    Mat ts = rank_one_cartan_element(*data->g, su.name);
    Subalg nsu = maximal_unipotent_subalgebra(su, ts);
    CHECK(nsu.dim() == 2 * k - 1);
    if (n % 2 == 0) CHECK(nsu.dim() == n - 1);
  }
}

TEST_CASE("conjugation by a weyl reflection maps catalog copies to copies") {
  auto data = so_data(2, 3);
  Subalg h = standard_subalgebra(data->g, "so(1,3)");
  Mat r = weyl_reflection(*data->g, SimpleRoot::alpha);
  Subalg hc = conjugate_subalgebra(h, r, "so(1,3)~w_alpha");
  CHECK(hc.dim() == h.dim());
  CHECK(!(hc.space() == h.space()));
}

TEST_CASE("unknown names and parameters are rejected") {
  auto g = so_data(2, 3)->g;
  CHECK_THROWS_AS(standard_subalgebra(g, "p_gamma"), std::invalid_argument);
  CHECK_THROWS_AS(standard_subalgebra(g, "m"), std::invalid_argument);  // trivial for n = 3
  CHECK_THROWS_AS(rank_one_cartan_element(*g, "p_alpha"), std::invalid_argument);
}
