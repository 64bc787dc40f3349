#include <doctest.h>

#include "minkq/report_io.hpp"
#include "minkq/rng.hpp"
#include "minkq/structure.hpp"
#include "minkq/verification.hpp"

using namespace minkq;

TEST_CASE("standard representation lemma") {
  CheckReport r2 = check_std_rep_lemma(2, kDefaultSeed);
  CHECK(r2.status == CheckStatus::pass);
  // explicit light-cone oracle for k = 2: W is spanned by e1 + e2
  auto witness = parse_witness(r2.certificate);
  const Mat* w = nullptr;
  for (const auto& [label, m] : witness)
    if (label == "W") w = &m;
  REQUIRE(w != nullptr);
  REQUIRE(w->cols() == 1);
  Mat expected = Mat::col_vector({Rat(1), Rat(1), Rat(0)});
  CHECK(Subspace::span(*w) == Subspace::span(expected));

  CHECK(check_std_rep_lemma(5, kDefaultSeed).status == CheckStatus::pass);
  CHECK_THROWS_AS(check_std_rep_lemma(1, kDefaultSeed), std::invalid_argument);
}

TEST_CASE("killing form check for so(1,2)") {
  CheckReport r = check_killing_so12();
  CHECK(r.status == CheckStatus::pass);
}

TEST_CASE("root data checks") {
  CheckReport r3 = check_root_data(3);
  CHECK(r3.status == CheckStatus::pass);
  bool found = false;
  for (const auto& d : r3.details)
    if (d.find("(1,1,1,1)") != std::string::npos) found = true;
  CHECK(found);
  CHECK(check_root_data(5).status == CheckStatus::pass);
  CHECK_THROWS_AS(check_root_data(2), std::invalid_argument);
}

TEST_CASE("quotient checks for the catalog stabilizers") {
  auto g = so_data(2, 3)->g;
  Subalg h = resolve_subalgebra(g, "so(1,3)");
  CheckReport r = check_quotient(g, h);
  CHECK(r.status == CheckStatus::pass);
  CHECK(revalidate(r));

  Subalg su = resolve_subalgebra(so_data(2, 4)->g, "su(1,2)");
  CheckReport rs = check_quotient(so_data(2, 4)->g, su);
  CHECK(rs.status == CheckStatus::fail);  // provably no Minkowski form
}

TEST_CASE("su(1,3) in so(2,6): 4-dim form family settled by the weight obstruction") {
  auto g = so_data(2, 6)->g;
  Subalg h = resolve_subalgebra(g, "su(1,3)");
  auto [space, v] = decide_minkowski(g, h);
  CHECK(space.dim_quotient == 13);
  CHECK(space.dim() == 4);  // the wedge pairing enlarges the family here
  CHECK(v.tag == VerdictTag::none);
  CHECK(v.reason.find("weight-space sums") != std::string::npos);
}

TEST_CASE("weight codimension instances") {
  auto d13 = so_data(1, 3);
  Subalg h = resolve_subalgebra(d13->g, "so(1,2)");
  Subalg a = resolve_subalgebra(d13->g, "a");
  CheckReport r = check_weight_codimension(d13->g, h, a);
  CHECK(r.status == CheckStatus::pass);
  CHECK(revalidate(r));
  bool has_dims = false;
  for (const auto& d : r.details)
    if (d.find("dim g+ = 2") != std::string::npos && d.find("cap h) = 1") != std::string::npos)
      has_dims = true;
  CHECK(has_dims);

  auto d24 = so_data(2, 4);
  Subalg hc = resolve_subalgebra(d24->g, "so(1,4)~w_alpha");
  Subalg t = make_subalgebra(d24->g, "ker(alpha+beta)", {d24->iw.a_basis[1]});
  CheckReport r2 = check_weight_codimension(d24->g, hc, t);
  CHECK(r2.status == CheckStatus::pass);
  CHECK(revalidate(r2));

  // hypothesis violations surface as failures, not as crashes
  Subalg zero = make_subalgebra(d13->g, "0", {});
  CheckReport bad = check_weight_codimension(d13->g, h, zero);
  CHECK(bad.status == CheckStatus::fail);
}

TEST_CASE("unipotent VW instances") {
  auto d14 = so_data(1, 4);
  Subalg h = resolve_subalgebra(d14->g, "so(1,3)");
  Subspace inter = Subspace::span(d14->roots.nilradical()).intersect(h.space());
  REQUIRE(inter.dim() > 0);
  CheckReport r = check_unipotent_vw(d14->g, h, d14->g->from_coords(inter.basis().col(0)));
  CHECK(r.status == CheckStatus::pass);
  CHECK(revalidate(r));

  auto d23 = so_data(2, 3);
  Subalg h2 = resolve_subalgebra(d23->g, "so(1,3)");
  Subspace inter2 = Subspace::span(d23->roots.nilradical()).intersect(h2.space());
  REQUIRE(inter2.dim() > 0);
  CheckReport r2 = check_unipotent_vw(d23->g, h2, d23->g->from_coords(inter2.basis().col(0)));
  CHECK(r2.status == CheckStatus::pass);

  CheckReport bad = check_unipotent_vw(d14->g, h, Mat(5, 5));
  CHECK(bad.status == CheckStatus::fail);
}

TEST_CASE("stabilizer suites") {
  CHECK(check_stabilizer_so1n(2, kDefaultSeed).status == CheckStatus::pass);
  CHECK(check_stabilizer_so1n(3, kDefaultSeed).status == CheckStatus::pass);
  CHECK(check_stabilizer_so2n(3, kDefaultSeed).status == CheckStatus::pass);
  CHECK(check_stabilizer_so2n(4, kDefaultSeed).status == CheckStatus::pass);
  CHECK_THROWS_AS(check_stabilizer_so1n(1, kDefaultSeed), std::invalid_argument);
}

TEST_CASE("bracket identities and parabolics") {
  CHECK(check_bracket_identities(3, kDefaultSeed).status == CheckStatus::pass);
  CHECK(check_parabolics(3).status == CheckStatus::pass);
  CHECK(check_parabolics(4).status == CheckStatus::pass);
}

TEST_CASE("property suites") {
  CHECK(prop_sylvester(kDefaultSeed).status == CheckStatus::pass);
  CHECK(prop_jacobi(1, 3, kDefaultSeed).status == CheckStatus::pass);
  CHECK(prop_killing_ad_invariance(2, 3, kDefaultSeed).status == CheckStatus::pass);
  CHECK(prop_sl2_triples(2, 3, kDefaultSeed).status == CheckStatus::pass);
}

TEST_CASE("run_all aggregates and serializes deterministically") {
  RunOptions opts{3, kDefaultSeed};
  auto reports = run_all(opts);
  CHECK(aggregate_status(reports) == CheckStatus::pass);
  for (const auto& r : reports) CHECK(revalidate(r));

  auto reports2 = run_all(opts);
  CHECK(render_json(reports, opts.seed) == render_json(reports2, opts.seed));
  CHECK(render_text(reports) == render_text(reports2));

  CHECK_THROWS_AS(run_all(RunOptions{2, kDefaultSeed}), std::invalid_argument);
}

TEST_CASE("witness serialization round trip") {
  Mat a{{Rat(1, 2), Rat(3)}, {Rat(3), Rat(-7, 4)}};
  Mat b = Mat::identity(3);
  auto parts = parse_witness(serialize_witness({{"Q", a}, {"u", b}}));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == "Q");
  CHECK(parts[0].second == a);
  CHECK(parts[1].first == "u");
  CHECK(parts[1].second == b);
}

TEST_CASE("reports render with status and anchor") {
  CheckReport r = check_root_data(3);
  std::string text = render_text(r);
  CHECK(text.find("[PASS]") != std::string::npos);
  CHECK(text.find("root_data") != std::string::npos);
  CHECK(text.find("roots:B2-multiplicities") != std::string::npos);
  std::string json = render_json({r}, 1);
  CHECK(json.find("\"version\": 1") != std::string::npos);
  CHECK(json.find("\"status\": \"pass\"") != std::string::npos);
}
