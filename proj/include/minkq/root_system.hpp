#pragma once

#include <map>
#include <memory>
#include <vector>

#include "minkq/lie_algebra.hpp"

namespace minkq {

// A restricted root is recorded as its integer eigenvalue vector on the
// chosen basis of the split Cartan subspace.
using RootVec = std::vector<int>;

// Simultaneous eigenspace decomposition of g under ad of an abelian family
// with integer joint spectrum. Root spaces are stored as canonical coordinate
// bases; projections onto root spaces are coordinate projections in the
// adapted basis.
class RootDecomp {
 public:
  const std::vector<Mat>& a_basis() const { return a_basis_; }
  int rank() const { return static_cast<int>(a_basis_.size()); }

  const std::vector<RootVec>& roots() const { return roots_; }  // nonzero, lex sorted
  std::vector<RootVec> positive_roots() const;                  // lex-positive ones
  bool is_root(const RootVec& r) const { return spaces_.count(r) != 0; }

  // coordinate basis of the root space (dim(g) x multiplicity)
  const Mat& space(const RootVec& r) const;
  int multiplicity(const RootVec& r) const { return space(r).cols(); }
  const Mat& zero_space() const { return zero_space_; }  // g_0

  Mat sum_of_spaces(const std::vector<RootVec>& rs) const;
  Mat nilradical() const { return sum_of_spaces(positive_roots()); }

  // component of x (in coordinates) along a root space / along g_0, in the
  // adapted basis
  Mat project(const RootVec& r, const Mat& xc) const;
  Mat project_zero(const Mat& xc) const;

  // Simple roots in the convention dim g_alpha small: alpha and beta are the
  // two lex-positive simple roots with alpha + 2 beta again a root; only
  // defined for rank 2 (so(2,n)). Throws otherwise.
  const RootVec& alpha() const;
  const RootVec& beta() const;

  friend RootDecomp root_decomposition(const LieAlg& g, const std::vector<Mat>& a_basis);

 private:
  std::vector<Mat> a_basis_;
  std::vector<RootVec> roots_;
  std::map<RootVec, Mat> spaces_;
  Mat zero_space_;
  std::map<RootVec, std::pair<int, int>> slots_;  // root -> row range in adapted coords
  std::pair<int, int> zero_slot_;
  Mat adapted_;      // columns: zero space then root spaces in lex order
  Mat adapted_inv_;  // exact inverse
  RootVec alpha_, beta_;
};

// Joint eigenspace search over the integer box |c_i| <= 2, which exhausts the
// spectrum for the so(1,n) / so(2,n) Cartans built here; throws if the
// eigenspaces do not exhaust g (a bad a_basis).
RootDecomp root_decomposition(const LieAlg& g, const std::vector<Mat>& a_basis);

enum class SimpleRoot { alpha, beta };

// Ambient orthogonal matrix (signed permutation) normalizing the standard
// Cartan of so(2,n) and inducing the Weyl reflection that fixes ker of the
// given simple root. Conjugation by it permutes root spaces accordingly.
Mat weyl_reflection(const LieAlg& g, SimpleRoot which);

}  // namespace minkq
