#include "minkq/subspace.hpp"

#include <stdexcept>

namespace minkq {

Subspace Subspace::span(const Mat& generators) {
  Subspace s(generators.rows());
  std::vector<int> piv;
  Mat r = rref(generators.transpose(), &piv);
  Mat b(generators.rows(), static_cast<int>(piv.size()));
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (int j = 0; j < generators.rows(); ++j) b.at(j, static_cast<int>(i)) = r.at(static_cast<int>(i), j);
  s.basis_ = b;
  return s;
}

bool Subspace::contains(const Mat& v) const {
  if (v.rows() != ambient_ || v.cols() != 1) throw std::invalid_argument("Subspace::contains: shape");
  if (v.is_zero()) return true;
  if (dim() == 0) return false;
  return solve_linear(basis_, v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.dim() == 0) return true;
  if (other.dim() > dim()) return false;
  return rank(hcat(basis_, other.basis_)) == dim();
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("Subspace::+: ambient mismatch");
  return span(hcat(basis_, other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("Subspace::intersect: ambient mismatch");
  if (dim() == 0 || other.dim() == 0) return Subspace(ambient_);
  // kernel vectors (x; y) of [A B] satisfy A x = -B y, so A x runs over the
  // intersection
  Mat k = kernel_matrix(hcat(basis_, other.basis_));
  Mat xs(dim(), k.cols());
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < k.cols(); ++j) xs.at(i, j) = k.at(i, j);
  return span(basis_ * xs);
}

Subspace Subspace::apply(const Mat& op) const {
  if (op.cols() != ambient_) throw std::invalid_argument("Subspace::apply: shape");
  if (dim() == 0) return Subspace(op.rows());
  return span(op * basis_);
}

Subspace Subspace::preimage(const Mat& op) const {
  if (op.rows() != ambient_) throw std::invalid_argument("Subspace::preimage: shape");
  const int n = op.cols();
  if (dim() == 0) return span(kernel_matrix(op));
  // kernel vectors (v; y) of [op  -B] satisfy op v = B y
  Mat k = kernel_matrix(hcat(op, -basis_));
  Mat vs(n, k.cols());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k.cols(); ++j) vs.at(i, j) = k.at(i, j);
  return span(vs);
}

}  // namespace minkq
