// Acceptance suite: runs every gate criterion and prints one pass/fail line
// each. Exit code = number of failed criteria. argv[1] must point at the CLI
// binary (used by the end-to-end criterion).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "minkq/catalog.hpp"
#include "minkq/elements.hpp"
#include "minkq/invariant_forms.hpp"
#include "minkq/report_io.hpp"
#include "minkq/rng.hpp"
#include "minkq/structure.hpp"
#include "minkq/verification.hpp"

using namespace minkq;

namespace {

int failures = 0;

void report(int criterion, const std::string& label, bool ok, const std::string& note = "") {
  std::printf("%s criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, label.c_str(),
              note.empty() ? "" : " -- ", note.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. so(2,n)/so(1,n): solution space dim 1, Lorentz generator, < 10 s per n
void criterion_positive_so2n() {
  bool ok = true;
  std::ostringstream note;
  for (int n = 3; n <= 8; ++n) {
    auto t0 = std::chrono::steady_clock::now();
    auto g = so_data(2, n)->g;
    Subalg h = standard_subalgebra(g, "so(1," + std::to_string(n) + ")");
    QuotientRep q = quotient_rep(g, h);
    SymSpace space = invariant_sym_forms(q);
    LorentzVerdict v = lorentz_certificate(space);
    double dt = seconds_since(t0);
    bool here = space.dim() == 1 && v.tag == VerdictTag::found && q.quotient_dim() == n + 1;
    if (here) {
      SignatureTriple s = signature(*v.certificate);
      here = s.n_zero == 0 && ((s.n_pos == 1 && s.n_neg == n) || (s.n_neg == 1 && s.n_pos == n));
    }
    here = here && dt < 10.0;
    if (!here) ok = false;
    note << "n=" << n << ":" << (here ? "ok" : "FAIL") << "(" << dt << "s) ";
  }
  report(1, "so(2,n)/so(1,n) has a 1-dim invariant space with Lorentz generator, n=3..8", ok,
         note.str());
}

// 2. so(1,n)/so(1,n-1): dim 1, Lorentz, quotient dim n, < 5 s per n
void criterion_positive_so1n() {
  bool ok = true;
  std::ostringstream note;
  for (int n = 2; n <= 8; ++n) {
    auto t0 = std::chrono::steady_clock::now();
    auto g = so_data(1, n)->g;
    Subalg h = standard_subalgebra(g, "so(1," + std::to_string(n - 1) + ")");
    QuotientRep q = quotient_rep(g, h);
    SymSpace space = invariant_sym_forms(q);
    LorentzVerdict v = lorentz_certificate(space);
    double dt = seconds_since(t0);
    bool here = space.dim() == 1 && v.tag == VerdictTag::found && q.quotient_dim() == n &&
                signature(*v.certificate).is_lorentz() && dt < 5.0;
    if (!here) ok = false;
    note << "n=" << n << ":" << (here ? "ok" : "FAIL") << "(" << dt << "s) ";
  }
  report(2, "so(1,n)/so(1,n-1) has a 1-dim invariant space with Lorentz generator, n=2..8", ok,
         note.str());
}

// 3. su(1,n/2) in so(2,n): provably no Lorentz form (verdict none)
void criterion_negative_su() {
  bool ok = true;
  std::ostringstream note;
  for (int n : {4, 6, 8}) {
    auto g = so_data(2, n)->g;
    Subalg h = standard_subalgebra(g, "su(1," + std::to_string(n / 2) + ")");
    auto [space, v] = decide_minkowski(g, h);
    bool here = v.tag == VerdictTag::none && !v.reason.empty();
    if (!here) ok = false;
    note << "n=" << n << ":" << (here ? "none" : to_string(v.tag)) << "(space dim "
         << space.dim() << ") ";
  }
  report(3, "su(1,n/2) in so(2,n) admits no invariant Minkowski form, n=4,6,8", ok, note.str());
}

// 4. standard-representation lemma suite for k = 2..6
void criterion_lemma() {
  bool ok = true;
  std::ostringstream note;
  for (int k = 2; k <= 6; ++k) {
    CheckReport r = check_std_rep_lemma(k, kDefaultSeed);
    bool here = r.status == CheckStatus::pass && revalidate(r);
    if (!here) ok = false;
    note << "k=" << k << ":" << (here ? "ok" : "FAIL") << " ";
  }
  report(4, "unique positive weight and V/W system in the standard representation, k=2..6", ok,
         note.str());
}

// 5. root data for n = 3..8
void criterion_root_data() {
  bool ok = true;
  std::ostringstream note;
  for (int n = 3; n <= 8; ++n) {
    CheckReport r = check_root_data(n);
    bool here = r.status == CheckStatus::pass;
    if (!here) ok = false;
    note << "n=" << n << ":" << (here ? "ok" : "FAIL") << " ";
  }
  report(5, "restricted roots {±a,±b,±(a+b),±(a+2b)} with multiplicities (1,n-2,n-2,1)", ok,
         note.str());
}

// 6. proof identities
void criterion_identities() {
  bool ok = true;
  std::ostringstream note;
  for (int n = 3; n <= 8; ++n) {
    auto data = so_data(1, n);
    Subspace n_space = Subspace::span(data->roots.nilradical());
    RatSampler sampler(kDefaultSeed + n);
    bool here = true;
    Mat n_cols = data->roots.nilradical();
    std::vector<Mat> us;
    for (int j = 0; j < n_cols.cols(); ++j) us.push_back(n_cols.col(j));
    for (int t = 0; t < 3; ++t) us.push_back(sampler.next_vector_in_span(n_cols));
    for (const auto& uc : us) {
      Mat adu = data->g->ad_of_coords(uc);
      if (!(Subspace::span(adu * adu) == n_space)) here = false;
    }
    CheckReport r = check_bracket_identities(n, kDefaultSeed);
    here = here && r.status == CheckStatus::pass;
    if (!here) ok = false;
    note << "n=" << n << ":" << (here ? "ok" : "FAIL") << " ";
  }
  report(6, "(ad u)^2 g = n in so(1,n); root-space bracket identities in so(2,n), n=3..8", ok,
         note.str());
}

// 7. parabolic suite for n = 3..8
void criterion_parabolics() {
  bool ok = true;
  std::ostringstream note;
  for (int n = 3; n <= 8; ++n) {
    CheckReport r = check_parabolics(n);
    bool here = r.status == CheckStatus::pass;
    if (!here) ok = false;
    note << "n=" << n << ":" << (here ? "ok" : "FAIL") << " ";
  }
  report(7, "three parabolics over the minimal one: closed, nested, distinct, right dimensions",
         ok, note.str());
}

// 8. unipotent dimension bound on the catalog rank-one entries
void criterion_unipotent_bound() {
  bool ok = true;
  std::ostringstream note;
  for (int n = 3; n <= 8; ++n) {
    auto g = so_data(2, n)->g;
    Subalg so1n = standard_subalgebra(g, "so(1," + std::to_string(n) + ")");
    Subalg nu = maximal_unipotent_subalgebra(so1n, rank_one_cartan_element(*g, so1n.name));
    bool here = nu.dim() == n - 1;
    if (n % 2 == 0) {
      Subalg su = standard_subalgebra(g, "su(1," + std::to_string(n / 2) + ")");
      Subalg nsu = maximal_unipotent_subalgebra(su, rank_one_cartan_element(*g, su.name));
      here = here && nsu.dim() == n - 1;
    }
    if (!here) ok = false;
    note << "n=" << n << ":" << (here ? "ok" : "FAIL") << " ";
  }
  report(8, "maximal unipotent subalgebras of catalog so(1,n) and su(1,n/2) have dim n-1", ok,
         note.str());
}

// 9. Killing form of so(1,2)
void criterion_killing() {
  CheckReport r = check_killing_so12();
  report(9, "Killing form of so(1,2) has signature (2,1,0)", r.status == CheckStatus::pass);
}

// 10. property suites with zero residuals
void criterion_properties() {
  bool ok = prop_sylvester(kDefaultSeed).status == CheckStatus::pass;
  std::ostringstream note;
  if (!ok) note << "sylvester:FAIL ";
  for (int n = 2; n <= 8; ++n) {
    bool here = prop_jacobi(1, n, kDefaultSeed).status == CheckStatus::pass &&
                prop_killing_ad_invariance(1, n, kDefaultSeed).status == CheckStatus::pass &&
                prop_sl2_triples(1, n, kDefaultSeed).status == CheckStatus::pass;
    if (!here) {
      ok = false;
      note << "so(1," << n << "):FAIL ";
    }
  }
  for (int n = 3; n <= 8; ++n) {
    bool here = prop_jacobi(2, n, kDefaultSeed).status == CheckStatus::pass &&
                prop_killing_ad_invariance(2, n, kDefaultSeed).status == CheckStatus::pass &&
                prop_sl2_triples(2, n, kDefaultSeed).status == CheckStatus::pass;
    if (!here) {
      ok = false;
      note << "so(2," << n << "):FAIL ";
    }
  }
  report(10, "Jacobi, Sylvester, Killing ad-invariance, sl2 triples: zero residuals", ok,
         note.str());
}

// 11. the CLI end to end: verify all --max-n 8 under 60 s, exit 0
void criterion_cli(const std::string& cli) {
  std::string json_path = "acceptance_report.json";
  std::string cmd = "\"" + cli + "\" verify all --max-n 8 --json " + json_path + " > acceptance_cli.log 2>&1";
  auto t0 = std::chrono::steady_clock::now();
  int rc = std::system(cmd.c_str());
  double dt = seconds_since(t0);
  bool ok = rc == 0 && dt < 60.0;
  std::ostringstream note;
  note << "exit=" << rc << " wall=" << dt << "s";
  if (ok) {
    std::ifstream in(json_path);
    nlohmann::json doc;
    try {
      in >> doc;
      ok = doc.at("version") == 1 && doc.at("summary").at("status") == "pass" &&
           doc.at("summary").at("fail") == 0 && doc.at("summary").at("undetermined") == 0;
      note << " checks=" << doc.at("summary").at("total");
    } catch (const std::exception& e) {
      ok = false;
      note << " json error: " << e.what();
    }
  }
  report(11, "minkq verify all --max-n 8 exits 0 in under 60 s single-threaded", ok, note.str());
}

}  // namespace

int main(int argc, char** argv) {
  criterion_positive_so2n();
  criterion_positive_so1n();
  criterion_negative_su();
  criterion_lemma();
  criterion_root_data();
  criterion_identities();
  criterion_parabolics();
  criterion_unipotent_bound();
  criterion_killing();
  criterion_properties();
  if (argc > 1) {
    criterion_cli(argv[1]);
  } else {
    report(11, "CLI path not supplied (argv[1])", false);
  }
  std::printf("%s: %d of 11 criteria failed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              failures);
  return failures == 0 ? 0 : 1;
}
