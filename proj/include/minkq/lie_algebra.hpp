#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "minkq/matrix.hpp"
#include "minkq/subspace.hpp"

namespace minkq {

// The matrix Lie algebra so(p,q) = { X : X^T J + J X = 0 } with
// J = diag(-1_p, +1_q), on its standard basis
//   E_ij - E_ji  (i < j, both indices on the same side of the block split)
//   E_ij + E_ji  (i <= p < j),
// enumerated over index pairs i < j in lexicographic order. Coordinates of an
// element are then simply its strict upper-triangle entries, which keeps the
// coordinate maps exact and cheap.
class LieAlg {
 public:
  static LieAlg make_so(int p, int q);  // requires p + q >= 2

  int p() const { return p_; }
  int q() const { return q_; }
  int ambient_dim() const { return p_ + q_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  std::string name() const;

  const Mat& J() const { return j_; }
  const std::vector<Mat>& basis() const { return basis_; }
  const Mat& basis_element(int i) const { return basis_[i]; }

  // structure constants, organized as ad matrices of the basis elements:
  // column k of ad_basis()[i] holds the coordinates of [b_i, b_k]
  const std::vector<Mat>& ad_basis() const { return ad_; }

  bool contains(const Mat& x) const;
  // coordinate column of x on the basis; throws if x is not in the algebra
  Mat coords(const Mat& x) const;
  std::optional<Mat> try_coords(const Mat& x) const;
  Mat from_coords(const Mat& c) const;

  Mat bracket(const Mat& x, const Mat& y) const { return x * y - y * x; }
  // ad x as a dim x dim matrix on coordinates; x given as an ambient matrix
  Mat ad(const Mat& x) const;
  // same, for x given in coordinates
  Mat ad_of_coords(const Mat& xc) const;

  // bracket on coordinate columns, via the structure constants
  Mat bracket_coords(const Mat& xc, const Mat& yc) const;

 private:
  LieAlg() = default;
  int p_ = 0, q_ = 0;
  Mat j_;
  std::vector<Mat> basis_;
  std::vector<std::pair<int, int>> pairs_;  // basis index -> (i, j), i < j
  std::vector<Mat> ad_;
};

inline LieAlg make_so(int p, int q) { return LieAlg::make_so(p, q); }

// Killing form B(X,Y) = tr(ad X ad Y) on the basis, from the structure
// constants. Symmetric; ad-invariance is exercised by the check suites.
Mat killing_form(const LieAlg& g);
// Killing form evaluated on coordinate columns.
Rat killing_eval(const Mat& killing, const Mat& xc, const Mat& yc);

// A subalgebra presented by a matrix basis inside an ambient algebra, with
// its closure certificate (the expansion of every bracket of basis elements
// back in the basis).
struct Subalg {
  std::shared_ptr<const LieAlg> ambient;
  std::string name;
  std::vector<Mat> basis;                              // ambient matrices
  Mat basis_coords;                                    // dim(g) x k
  std::vector<std::vector<std::vector<Rat>>> closure;  // closure[i][j] = coeffs of [b_i, b_j]

  int dim() const { return static_cast<int>(basis.size()); }
  Subspace space() const { return Subspace::span(basis_coords); }
};

// Closure certificate or failure witness for a candidate basis.
struct ClosureCheck {
  bool ok = false;
  std::vector<std::vector<std::vector<Rat>>> coeffs;  // filled when ok
  int bad_i = -1, bad_j = -1;                         // offending pair / element
  std::string reason;
};

ClosureCheck is_subalgebra(const LieAlg& g, const std::vector<Mat>& basis);

// Builds a Subalg, throwing std::invalid_argument with the witness text when
// the basis is not closed / not independent / not inside g.
Subalg make_subalgebra(std::shared_ptr<const LieAlg> g, std::string name, std::vector<Mat> basis);

// Conjugate h by r (which must satisfy r^T J r = J); the image is re-certified.
Subalg conjugate_subalgebra(const Subalg& h, const Mat& r, const std::string& new_name);

}  // namespace minkq
