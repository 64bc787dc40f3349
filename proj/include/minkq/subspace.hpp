#pragma once

#include "minkq/matrix.hpp"

namespace minkq {

// A linear subspace of Q^d, stored through a canonical basis (the reduced
// echelon basis of the row space of the transposed generators). Two Subspace
// values are equal iff they are the same subspace.
class Subspace {
 public:
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(ambient_dim, 0) {}

  // span of the columns of `generators`
  static Subspace span(const Mat& generators);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.cols(); }
  // canonical basis, packed as columns of an ambient x dim matrix
  const Mat& basis() const { return basis_; }

  bool contains(const Mat& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& other) const = default;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  // image under a linear map given on coordinates
  Subspace apply(const Mat& op) const;
  // {v : op v in this}
  Subspace preimage(const Mat& op) const;

 private:
  int ambient_ = 0;
  Mat basis_;
};

}  // namespace minkq
