#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "minkq/invariant_forms.hpp"
#include "minkq/lie_algebra.hpp"

namespace minkq {

enum class CheckStatus { pass, fail, undetermined };
const char* to_string(CheckStatus s);

// One verified statement, with enough data to re-validate the witness through
// a code path independent of the solver that produced it. Reports are pure
// functions of their inputs, so identical inputs serialize byte-identically.
struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  CheckStatus status = CheckStatus::fail;
  std::string anchor;        // internal label of the statement being checked
  std::string certificate;   // serialized witness; empty when none applies
  std::vector<std::string> details;
};

// --- quotient decision --------------------------------------------------

// Full decision for the Minkowski question on g/h: the form-space analysis
// first; when a solution space of dimension >= 3 defeats the pencil/grid
// analysis, the weight-codimension obstruction from a hyperbolic element of
// h cap a settles the verdict exactly.
struct MinkowskiDecision {
  SymSpace space;
  LorentzVerdict verdict;
};
MinkowskiDecision decide_minkowski(std::shared_ptr<const LieAlg> g, const Subalg& h);

// Space of invariant symmetric forms on g/h and the Minkowski verdict.
// pass = a Lorentz certificate exists, fail = provably none, undetermined
// only when no exact route resolves a >= 3-dimensional solution space.
CheckReport check_quotient(std::shared_ptr<const LieAlg> g, const Subalg& h);

// --- statement suites -----------------------------------------------------

// Standard representation of so(1,k) on R^{k+1}: unique positive weight with
// a 1-dimensional weight space, and the V/W system with pi(u)^2 R^{k+1} = W
// and ker pi(u)^2 = V for all nonzero u in n. Requires k >= 2.
CheckReport check_std_rep_lemma(int k, std::uint64_t seed);

// Weight-space codimension: when an invariant Minkowski form exists and T is
// an ad-diagonalizable normalizer of h acting by isometries, h contains
// codimension-one subspaces of the positive and negative weight-space sums.
CheckReport check_weight_codimension(std::shared_ptr<const LieAlg> g, const Subalg& h,
                                     const Subalg& t);

// V/W system for a nilpotent u normalizing h, in the presence of an invariant
// Minkowski form: codim V = 1, dim W/h = 1, [V,u] <= W, the branch dichotomy,
// and (ad u)^2 V <= h.
CheckReport check_unipotent_vw(std::shared_ptr<const LieAlg> g, const Subalg& h, const Mat& u);

// so(1,n)/so(1,n-1) has a one-dimensional invariant-form space with Lorentz
// generator; for n = 2 the Killing form of so(1,2) realizes the invariant
// form at h = 0; for n >= 3, (ad u)^2 g = n for every nonzero u in n.
CheckReport check_stabilizer_so1n(int n, std::uint64_t seed);

// so(2,n)/so(1,n) admits the form; su(1,n/2) (n even) admits none; root data
// and the unipotent dimension bound dim <= n-1 hold on the catalog entries.
CheckReport check_stabilizer_so2n(int n, std::uint64_t seed);

// Restricted roots of so(2,n): exactly {±a, ±b, ±(a+b), ±(a+2b)} with
// multiplicities (1, n-2, n-2, 1), g_0 = a + m, n = sum of the positive ones.
CheckReport check_root_data(int n);

// [g_a, g_b] = g_{a+b}; (ad g_{a+2b})^2 g = g_{a+2b}; and
// (ad u)^2 g = g_a + g_{a+b} + g_{a+2b} for nonzero u in g_{a+b}.
CheckReport check_bracket_identities(int n, std::uint64_t seed);

// The three proper parabolics over the minimal one: closed, contain it,
// pairwise distinct, proper, with the dimensions forced by the root data,
// and the negative-subspace obstructions used in the case analysis.
CheckReport check_parabolics(int n);

// Killing form of so(1,2): signature (2,1,0) and ad-invariance.
CheckReport check_killing_so12();

// --- property suites -------------------------------------------------------

CheckReport prop_sylvester(std::uint64_t seed);
CheckReport prop_jacobi(int p, int q, std::uint64_t seed);
CheckReport prop_killing_ad_invariance(int p, int q, std::uint64_t seed);
CheckReport prop_sl2_triples(int p, int q, std::uint64_t seed);

// --- driver ----------------------------------------------------------------

struct RunOptions {
  int max_n = 8;
  std::uint64_t seed = 0;
};

// Every suite for all admissible parameters up to max_n (>= 3), in a fixed
// order. Aggregate passes iff nothing fails and nothing is undetermined.
std::vector<CheckReport> run_all(const RunOptions& opts);

CheckStatus aggregate_status(const std::vector<CheckReport>& reports);

// Re-validates a pass report's certificate independently of the solver:
// forms are re-checked for invariance and for signature via the Sturm-based
// eigenvalue count; lemma witnesses are re-checked against the definition.
bool revalidate(const CheckReport& report);

// Catalog name resolution used by revalidate and the CLI: plain catalog
// entries, "0" for the zero subalgebra, and "<entry>~w_alpha" / "~w_beta"
// for Weyl-conjugated copies.
Subalg resolve_subalgebra(std::shared_ptr<const LieAlg> g, const std::string& name);

}  // namespace minkq
