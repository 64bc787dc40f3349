#pragma once

#include <utility>
#include <vector>

#include "minkq/matrix.hpp"
#include "minkq/rational.hpp"

namespace minkq {

// Univariate polynomial over the exact rationals, coefficients ascending.
// The zero polynomial has degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rat& a) { return Poly({a}); }
  static Poly x() { return Poly({Rat(0), Rat(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rat& coeff(int i) const;
  const Rat& lead() const { return c_.back(); }
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& x) const;
  Poly derivative() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& s) const;
  bool operator==(const Poly& o) const = default;

  // quotient/remainder with remainder degree < divisor degree
  static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);

  // monic gcd
  static Poly gcd(Poly a, Poly b);

  // scale by a positive rational so coefficients are coprime integers
  // (sign pattern preserved, which is what Sturm chains need)
  Poly primitive_scaled() const;

  Poly monic() const;
  std::string to_string() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rat> c_;
};

Poly squarefree_part(const Poly& f);
// Yun decomposition: f = c * prod_i out[i].first ^ out[i].second with the
// factors squarefree and pairwise coprime.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

// Sturm chain of the squarefree part of f.
std::vector<Poly> sturm_chain(const Poly& f);

// number of distinct real roots (of f, in (a, b], or in all of R)
int count_real_roots(const Poly& f);
int count_real_roots_in(const Poly& f, const Rat& a, const Rat& b);
int count_real_roots_left_of(const Poly& f, const Rat& b);   // (-inf, b]
int count_real_roots_right_of(const Poly& f, const Rat& a);  // (a, +inf)

bool all_roots_real(const Poly& f);

// strictly positive integer bound B with all real roots in (-B, B)
Int root_bound(const Poly& f);

// Isolating intervals for the distinct real roots: each entry either has
// lo == hi (an exact rational root) or is an interval (lo, hi] containing one
// root with f(lo) != 0 and f(hi) != 0. Returned sorted, pairwise disjoint.
struct RootInterval {
  Rat lo;
  Rat hi;
  bool exact;
};
std::vector<RootInterval> isolate_real_roots(const Poly& f);

// Characteristic polynomial det(t I - a), exact (Faddeev-LeVerrier).
Poly char_poly(const Mat& a);
// Monic minimal polynomial, via linear dependence of powers of a.
Poly min_poly(const Mat& a);

// Eigenvalue sign counts (with multiplicity) of a polynomial all of whose
// roots are real, e.g. the characteristic polynomial of a symmetric matrix.
// Serves as the Sturm-based oracle for signature().
SignatureTriple eigen_sign_count(const Poly& char_poly);

}  // namespace minkq
