#pragma once

#include "minkq/lie_algebra.hpp"
#include "minkq/root_system.hpp"

namespace minkq {

// Iwasawa decomposition g = k + a + n of so(1,n) / so(2,n) relative to the
// Cartan involution X -> -X^T, together with m = centralizer of a in k.
struct IwasawaData {
  std::vector<Mat> k_basis;
  std::vector<Mat> a_basis;
  std::vector<Mat> n_basis;
  std::vector<Mat> m_basis;
};

// The standard split Cartan: a_i = E_{i,p+i} + E_{p+i,i}, i = 1..p. All
// ad-eigenvalues on g are integers, so the root search stays in exact
// arithmetic.
std::vector<Mat> standard_cartan(const LieAlg& g);

// Requires g = so(1,n) or so(2,n) as built by make_so. All structural
// invariants (direct sum, a abelian and theta-antifixed, n closed and
// normalized by a, m centralizing a inside k) are verified on construction.
IwasawaData iwasawa(const LieAlg& g);

}  // namespace minkq
