#pragma once

#include "minkq/lie_algebra.hpp"

namespace minkq {

// Classification of x through the minimal polynomial of ad x over Q:
//   nilpotent   min poly t^k, x != 0
//   hyperbolic  min poly squarefree with only real roots, x != 0
//   elliptic    min poly squarefree with purely imaginary spectrum, x != 0
//   mixed       anything else nonzero
enum class ElementClass { zero, hyperbolic, nilpotent, elliptic, mixed };

const char* to_string(ElementClass c);

// Throws if x is not an element of g.
ElementClass classify_element(const LieAlg& g, const Mat& x);

struct Sl2Triple {
  Mat h, e, f;  // ambient matrices: [h,e] = 2e, [h,f] = -2f, [e,f] = h
};

// For nilpotent u != 0: v with [v,u] hyperbolic and [[v,u],u] = 2u, obtained
// by solving for h in the image of (ad u)^2 and then for the sl2 partner.
// v = -f of the returned triple.
Sl2Triple jacobson_morozov_triple(const LieAlg& g, const Mat& u);
Mat jacobson_morozov(const LieAlg& g, const Mat& u);

}  // namespace minkq
