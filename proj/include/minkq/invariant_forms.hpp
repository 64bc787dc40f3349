#pragma once

#include <memory>
#include <optional>
#include <string>

#include "minkq/lie_algebra.hpp"
#include "minkq/subspace.hpp"

namespace minkq {

// The isotropy action of h on g/h, realized on a complement of h spanned by
// ambient basis vectors (greedy extension, so the construction is
// deterministic and reproducible).
struct QuotientRep {
  std::shared_ptr<const LieAlg> g;
  Subalg h;
  std::vector<int> complement;  // indices of the chosen ambient basis vectors
  Mat full_basis_inv;           // inverse of [h-basis | complement] on coordinates
  std::vector<Mat> operators;   // induced action of each h-basis element, m x m

  int quotient_dim() const { return static_cast<int>(complement.size()); }
  // image of x (ambient matrix / coordinate column) in the quotient coordinates
  Mat quotient_coords(const Mat& x) const;
  Mat quotient_coords_of_coords(const Mat& xc) const;
};

// Throws when h = g (trivial quotient) or h is not a subalgebra of g.
// `complement_preference` optionally reorders the greedy scan over the
// ambient basis (used to confirm basis independence of the results).
QuotientRep quotient_rep(std::shared_ptr<const LieAlg> g, const Subalg& h,
                         const std::vector<int>* complement_preference = nullptr);

// Solution space of { rho(X)^T Q + Q rho(X) = 0, Q = Q^T } over the
// m(m+1)/2 symmetric coordinates, computed by exact kernel refinement one
// generator at a time.
struct SymSpace {
  int dim_quotient = 0;
  std::vector<Mat> basis_forms;  // symmetric m x m, linearly independent

  int dim() const { return static_cast<int>(basis_forms.size()); }
};

SymSpace invariant_sym_forms(const QuotientRep& qrep);

enum class VerdictTag { found, none, undetermined };

const char* to_string(VerdictTag t);

struct LorentzVerdict {
  VerdictTag tag = VerdictTag::undetermined;
  std::optional<Mat> certificate;  // present iff tag == found; Lorentz signature
  std::string reason;              // exhaustive reasoning for none, bounds for undetermined
};

// Decides whether the solution space contains a Minkowski form.
//   dim 0 -> none; dim 1 -> signature of the generator;
//   dim 2 -> exact pencil analysis through det(Q1 + t Q2) and Sturm isolation;
//   dim >= 3 -> bounded deterministic grid search, undetermined allowed.
// Spaces over a quotient of dimension < 2 are rejected with reason
// "dimension" (a Minkowski form needs dim >= 2).
LorentzVerdict lorentz_certificate(const SymSpace& space);

// The V/W subspace system attached to a nilpotent u normalizing h:
//   W = h + (ad u)^2 g,   V = { v : (ad u)^2 v in h }.
// `degenerate_branch` reports the case [g, u] <= h.
struct VWSubspaces {
  Subspace V;
  Subspace W;
  bool degenerate_branch = false;
  int codim_V = 0;      // dim g - dim V
  int dim_W_mod_h = 0;  // dim W - dim h
};

VWSubspaces vw_subspaces(const LieAlg& g, const Subalg& h, const Mat& u);

}  // namespace minkq
