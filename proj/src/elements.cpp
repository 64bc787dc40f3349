#include "minkq/elements.hpp"

#include <stdexcept>

#include "minkq/polynomial.hpp"

namespace minkq {

const char* to_string(ElementClass c) {
  switch (c) {
    case ElementClass::zero: return "zero";
    case ElementClass::hyperbolic: return "hyperbolic";
    case ElementClass::nilpotent: return "nilpotent";
    case ElementClass::elliptic: return "elliptic";
    case ElementClass::mixed: return "mixed";
  }
  return "?";
}

namespace {

// all roots of f purely imaginary (0 allowed): f(t) = t^e * k(t^2) with k
// having only real, nonpositive roots
bool purely_imaginary_spectrum(const Poly& f) {
  Poly g = f;
  if (g.coeff(0).is_zero()) {
    // squarefree input: at most one factor t
    std::vector<Rat> shifted(g.coeffs().begin() + 1, g.coeffs().end());
    g = Poly(std::move(shifted));
  }
  if (g.degree() == 0) return true;
  // only even powers may appear
  for (int i = 1; i <= g.degree(); i += 2)
    if (!g.coeff(i).is_zero()) return false;
  std::vector<Rat> half(g.degree() / 2 + 1);
  for (std::size_t i = 0; i < half.size(); ++i) half[i] = g.coeff(2 * static_cast<int>(i));
  Poly k(std::move(half));
  // every root of k must be real and negative (t^2 = -y^2 < 0 for t = iy != 0)
  Poly ks = squarefree_part(k);
  if (ks.degree() <= 0) return true;
  return count_real_roots_left_of(ks, Rat(0)) == ks.degree() && !ks.eval(Rat(0)).is_zero();
}

}  // namespace

ElementClass classify_element(const LieAlg& g, const Mat& x) {
  Mat xc = g.coords(x);
  if (xc.is_zero()) return ElementClass::zero;
  Poly mp = min_poly(g.ad_of_coords(xc));

  bool nil = true;
  for (int i = 0; i < mp.degree(); ++i)
    if (!mp.coeff(i).is_zero()) nil = false;
  if (nil) return ElementClass::nilpotent;

  bool semisimple = Poly::gcd(mp, mp.derivative()).degree() == 0;
  if (!semisimple) return ElementClass::mixed;
  if (all_roots_real(mp)) return ElementClass::hyperbolic;
  if (purely_imaginary_spectrum(mp)) return ElementClass::elliptic;
  return ElementClass::mixed;
}

Sl2Triple jacobson_morozov_triple(const LieAlg& g, const Mat& u) {
  Mat uc = g.coords(u);
  if (uc.is_zero()) throw std::invalid_argument("jacobson_morozov: u = 0");
  if (classify_element(g, u) != ElementClass::nilpotent)
    throw std::invalid_argument("jacobson_morozov: u is not nilpotent");

  const int d = g.dim();
  Mat adu = g.ad_of_coords(uc);
  Mat adu2 = adu * adu;

  // h = [u, z] with (ad u)^2 z = -2u, so that [h, u] = 2u
  auto z = solve_linear(adu2, uc * Rat(-2));
  if (!z) throw std::logic_error("jacobson_morozov: u not in the image of (ad u)^2");
  Mat hc = adu * (*z);

  // f from [h, f] = -2f and [u, f] = h
  Mat adh = g.ad_of_coords(hc);
  Mat top = adh;
  for (int i = 0; i < d; ++i) top.at(i, i) += 2;
  Mat lhs = vcat(top, adu);
  Mat rhs = vcat(Mat(d, 1), hc);
  auto fc = solve_linear(lhs, rhs);
  if (!fc) throw std::logic_error("jacobson_morozov: no sl2 completion");

  Sl2Triple t;
  t.h = g.from_coords(hc);
  t.e = u;
  t.f = g.from_coords(*fc);
  return t;
}

Mat jacobson_morozov(const LieAlg& g, const Mat& u) {
  Sl2Triple t = jacobson_morozov_triple(g, u);
  return -t.f;
}

}  // namespace minkq
