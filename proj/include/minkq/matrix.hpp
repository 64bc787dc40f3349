#pragma once

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "minkq/rational.hpp"

namespace minkq {

// Signature of a symmetric bilinear form, invariant under congruence.
struct SignatureTriple {
  int n_pos = 0;
  int n_neg = 0;
  int n_zero = 0;

  int dim() const { return n_pos + n_neg + n_zero; }
  // Minkowski: nondegenerate, one sign occurring exactly once, dim >= 2.
  // Both orientations are accepted since Q is invariant iff -Q is.
  bool is_lorentz() const {
    return n_zero == 0 && dim() >= 2 && (n_pos == 1 || n_neg == 1);
  }
  bool operator==(const SignatureTriple&) const = default;
  std::string to_string() const;
};

// Dense matrix over the exact rationals, row-major.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  static Mat identity(int n);
  static Mat col_vector(const std::vector<Rat>& entries);
  static Mat diag(const std::vector<Rat>& entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rat& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  Mat transpose() const;
  Mat col(int j) const;
  void set_col(int j, const Mat& v);

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat operator*(const Mat& o) const;
  Mat operator*(const Rat& s) const;
  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  bool operator==(const Mat& o) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> e_;
};

inline Mat operator*(const Rat& s, const Mat& m) { return m * s; }

Mat hcat(const Mat& a, const Mat& b);
Mat vcat(const Mat& a, const Mat& b);

// Row-reduce to reduced echelon form. Pivot choice is "first nonzero", so the
// result is deterministic. Optionally reports the pivot columns.
Mat rref(Mat m, std::vector<int>* pivot_cols = nullptr);
int rank(const Mat& m);

// Basis of the null space as column vectors; empty for injective m.
std::vector<Mat> kernel(const Mat& m);
// Same basis packed as columns of a cols(m) x nullity matrix.
Mat kernel_matrix(const Mat& m);

// Exact solution of a x = b (b may have several columns); nullopt iff some
// column of b is outside the column space of a.
std::optional<Mat> solve_linear(const Mat& a, const Mat& b);

Rat det(Mat m);

// Congruence diagonalization: p^T s p = d with d diagonal, p invertible.
// Zero diagonal pivots are repaired by adding row/column j into i when
// s[i][j] != 0 (the hyperbolic-plane trick). Throws on non-symmetric input.
struct CongruenceResult {
  Mat d;
  Mat p;
};
CongruenceResult congruent_diagonalize(const Mat& s);

// Counts of positive/negative/zero diagonal entries of a congruence
// diagonalization; well defined by Sylvester's law. Throws on non-symmetric
// input.
SignatureTriple signature(const Mat& s);

// Text format: first line "rows cols", then row-major entries ("p" or "p/q")
// separated by whitespace. Round trip is bit-exact.
std::string to_text(const Mat& m);

struct MatParseError : std::runtime_error {
  MatParseError(int line, int col, const std::string& what);
  int line;
  int col;
};

Mat mat_from_text(const std::string& text);
Mat mat_from_stream(std::istream& in);

}  // namespace minkq
