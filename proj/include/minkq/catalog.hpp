#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "minkq/lie_algebra.hpp"

namespace minkq {

// The distinguished subalgebras of so(1,n) and so(2,n): standard copies of
// so(1,n-1) (fixing the last coordinate), so(1,n) inside so(2,n) (omitting
// coordinate 2, the second negative one), the realified su(1, floor(n/2)),
// the Iwasawa pieces a / n / m, and the three parabolics over the minimal one.
struct CatalogEntry {
  std::string name;        // concrete, e.g. "so(1,5)", "p_beta"
  std::string family;      // parameterized label, e.g. "so(1,n)<so(2,n)"
  int expected_dim = 0;
  Mat change_of_basis;     // ambient change aligning the construction with J
};

// Entries valid for g, in a fixed deterministic order. Empty outside the
// so(1,n) / so(2,n) families.
std::vector<CatalogEntry> list_catalog(const LieAlg& g);

// Builds the entry by concrete name or family alias; the result carries its
// closure certificate. Throws std::invalid_argument for unknown names or
// parameters outside the family's range.
Subalg standard_subalgebra(std::shared_ptr<const LieAlg> g, std::string_view name);

// The generator of the split Cartan line of a rank-one catalog entry
// ("so(1,n)" inside so(2,n), or "su(1,k)"), as an ambient matrix.
Mat rank_one_cartan_element(const LieAlg& g, std::string_view name);

// Sum of the positive ad-eigenspaces of `t` inside h: the maximal unipotent
// subalgebra of a rank-one reductive h when t generates its split Cartan.
// Closure and nilpotency of the result are certified.
Subalg maximal_unipotent_subalgebra(const Subalg& h, const Mat& t);

}  // namespace minkq
